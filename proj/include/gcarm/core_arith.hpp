#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace gcarm {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Thrown when an operation would exceed its configured resource budget
/// (oracle input too large, sieve table too big, ...).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive 64-bit integer.
/// Primes are strictly increasing; value == product of prime^exponent;
/// value == 1 iff factors is empty.
struct Factorization {
    u64 value = 1;
    std::vector<PrimePower> factors;

    bool squarefree() const {
        for (const auto& f : factors)
            if (f.exponent > 1) return false;
        return true;
    }
};

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);

/// Deterministic for the full 64-bit range (fixed Miller-Rabin witness set).
bool is_prime(u64 n);

/// Trial division up to 10^6, then Brent-cycle Pollard rho on the cofactor.
/// n == 0 is a domain error.
Factorization factorize(u64 n);

/// lambda(p^e) = p^{e-1}(p-1) for odd p or p^e in {2,4}; 2^{e-2} for p=2, e>2;
/// result is the lcm over the prime powers of f.
u64 carmichael_lambda(const Factorization& f);
u64 carmichael_lambda(u64 n);

u64 euler_phi(const Factorization& f);
u64 euler_phi(u64 n);

/// Least t >= 1 with a^t == 1 (mod m). Requires gcd(a, m) == 1.
u64 multiplicative_order(u64 a, u64 m);

/// lambda(n) for every n in [1, X], 1-indexed (entry 0 unused).
struct LambdaTable {
    u64 limit = 0;
    std::vector<u64> lambda;

    u64 at(u64 n) const { return lambda[n]; }
};

struct SieveOptions {
    u64 segment_size = u64{1} << 20;
    unsigned threads = 1;
};

/// Streams (n, lambda(n), squarefree(n)) for n = 1..X in increasing order.
/// Segments are computed independently (possibly in parallel) and delivered
/// in order, so the callback sequence is identical for any thread count.
void for_each_lambda(u64 X, const SieveOptions& opt,
                     const std::function<void(u64 n, u64 lambda, bool squarefree)>& fn);

/// Materializes the full table; throws ResourceError (naming the segment
/// count a streaming pass would need) when the table exceeds the budget.
LambdaTable lambda_sieve(u64 X, u64 segment_size = u64{1} << 20);

/// Primes <= limit by plain Eratosthenes. Helper for constructions/searches.
std::vector<u64> primes_up_to(u64 limit);

}  // namespace gcarm
