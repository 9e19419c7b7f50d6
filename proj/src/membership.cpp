#include "gcarm/membership.hpp"

#include <algorithm>
#include <numeric>

namespace gcarm {

std::string set_kind_name(SetKind kind) {
    switch (kind) {
        case SetKind::C: return "ck";
        case SetKind::Cprime: return "cpk";
        case SetKind::N: return "nk";
    }
    return "?";
}

namespace {

u64 lambda_prime_power_local(u64 p, unsigned e) {
    if (p == 2) {
        if (e == 1) return 1;
        if (e == 2) return 2;
        return u64{1} << (e - 2);
    }
    u64 v = p - 1;
    for (unsigned i = 1; i < e; ++i) v *= p;
    return v;
}

// n - k as a nonnegative 64-bit value; valid whenever n > k.
u64 n_minus_k(u64 n, i64 k) {
    return static_cast<u64>(static_cast<__int128>(n) - k);
}

MembershipVerdict check_common(u64 n, i64 k, SetKind kind, bool require_squarefree) {
    MembershipVerdict v;
    v.n = n;
    v.variant = {kind, k};
    if (static_cast<__int128>(n) <= std::max<i64>(k, 0)) {
        v.violation = ViolationKind::domain;
        return v;
    }
    const Factorization f = factorize(n);
    v.lambda_n = carmichael_lambda(f);
    const u64 nk = n_minus_k(n, k);
    v.residue = nk % v.lambda_n;
    for (const auto& pp : f.factors) {
        if (require_squarefree && pp.exponent > 1) {
            v.violation = ViolationKind::squarefree;
            v.witness_prime = pp.prime;
            return v;
        }
        if (nk % lambda_prime_power_local(pp.prime, pp.exponent) != 0) {
            v.violation = ViolationKind::divisibility;
            v.witness_prime = pp.prime;
            return v;
        }
    }
    v.member = true;
    return v;
}

}  // namespace

MembershipVerdict check_ck(u64 n, i64 k) {
    return check_common(n, k, SetKind::C, true);
}

MembershipVerdict check_cprime(u64 n, i64 k) {
    return check_common(n, k, SetKind::Cprime, false);
}

u64 kp_family_modulus(u64 k) {
    const u64 lam = carmichael_lambda(k);
    return lam / std::gcd(lam, k);
}

MembershipVerdict check_nk(u64 n, i64 k) {
    MembershipVerdict v = check_common(n, k, SetKind::N, true);
    if (!v.member) return v;
    if (k > 0 && factorize(static_cast<u64>(k)).squarefree()) {
        const u64 uk = static_cast<u64>(k);
        if (n % uk == 0) {
            const u64 p = n / uk;
            const u64 mod = kp_family_modulus(uk);
            if (is_prime(p) && p % mod == 1 % mod) {
                v.member = false;
                v.violation = ViolationKind::family_excluded;
                v.witness_prime = p;
            }
        }
    }
    return v;
}

namespace {

constexpr u64 kOracleLimit = 100000;

void oracle_precheck(u64 n, i64 k) {
    if (n > kOracleLimit)
        throw ResourceError("oracle: n exceeds brute-force limit 10^5");
    if (static_cast<__int128>(n) <= std::max<i64>(k, 0))
        throw std::domain_error("oracle: requires n > max(k, 0)");
}

}  // namespace

bool oracle_ck(u64 n, i64 k) {
    oracle_precheck(n, k);
    const u64 exp = n_minus_k(n, k) + 1;
    for (u64 a = 0; a < n; ++a)
        if (pow_mod(a, exp, n) != a % n) return false;
    return true;
}

bool oracle_cprime(u64 n, i64 k) {
    oracle_precheck(n, k);
    const u64 exp = n_minus_k(n, k) + 1;
    for (u64 a = 0; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        if (pow_mod(a, exp, n) != a % n) return false;
    }
    return true;
}

bool is_k_carmichael(u64 m, u64 k) {
    if (m == 0 || k == 0) throw std::domain_error("is_k_carmichael: m, k must be positive");
    const Factorization f = factorize(m);
    if (!f.squarefree()) return false;
    const u128 rhs = (u128)k * (m - 1);
    return rhs % carmichael_lambda(f) == 0;
}

PrimeElements prime_elements(i64 k) {
    PrimeElements result;
    if (k == 1) {
        result.infinite_family = true;
        return result;
    }
    // p in C_k  <=>  p prime, p > max(k,0), p-1 | k-1.
    const u64 d_abs = static_cast<u64>(k > 1 ? k - 1 : 1 - k);
    std::vector<u64> divisors{1};
    for (const auto& pp : factorize(d_abs).factors) {
        const size_t sz = divisors.size();
        u64 pe = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (size_t i = 0; i < sz; ++i) divisors.push_back(divisors[i] * pe);
        }
    }
    for (u64 d : divisors) {
        const u64 p = d + 1;
        if (is_prime(p) && static_cast<__int128>(p) > std::max<i64>(k, 0))
            result.primes.push_back(p);
    }
    std::sort(result.primes.begin(), result.primes.end());
    result.primes.erase(std::unique(result.primes.begin(), result.primes.end()),
                        result.primes.end());
    return result;
}

}  // namespace gcarm
