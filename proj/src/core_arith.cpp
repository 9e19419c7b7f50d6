#include "gcarm/core_arith.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace gcarm {

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128)a * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_u64(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
    u64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Witness set valid for all n < 3.3 * 10^24, covers the full 64-bit range.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    // Brent's cycle variant; n must be composite, odd, > 1.
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        u64 ys = y;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return static_cast<u64>(((u128)v * v + c) % n); };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            while (k < r && d == 1) {
                ys = y;
                const u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += m;
            }
            r *= 2;
        } while (d == 1);
        if (d == n) {
            // Backtrack one step at a time.
            do {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    Factorization f;
    f.value = n;
    std::vector<u64> primes;
    for (u64 p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().prime == p)
            ++f.factors.back().exponent;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

namespace {

u64 lambda_prime_power(u64 p, unsigned e) {
    if (p == 2) {
        if (e == 1) return 1;
        if (e == 2) return 2;
        return u64{1} << (e - 2);
    }
    u64 v = p - 1;
    for (unsigned i = 1; i < e; ++i) v *= p;
    return v;
}

}  // namespace

u64 carmichael_lambda(const Factorization& f) {
    u64 result = 1;
    for (const auto& pp : f.factors)
        result = lcm_u64(result, lambda_prime_power(pp.prime, pp.exponent));
    return result;
}

u64 carmichael_lambda(u64 n) { return carmichael_lambda(factorize(n)); }

u64 euler_phi(const Factorization& f) {
    u64 result = 1;
    for (const auto& pp : f.factors) {
        result *= pp.prime - 1;
        for (unsigned i = 1; i < pp.exponent; ++i) result *= pp.prime;
    }
    return result;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

u64 multiplicative_order(u64 a, u64 m) {
    if (m == 0) throw std::domain_error("multiplicative_order: m must be positive");
    if (m == 1) return 1;
    a %= m;
    if (std::gcd(a, m) != 1)
        throw std::domain_error("multiplicative_order: gcd(a, m) must be 1");
    u64 t = carmichael_lambda(m);
    // Descend: strip every prime of t while a^(t/p) == 1 still holds.
    for (const auto& pp : factorize(t).factors) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            if (t % pp.prime == 0 && pow_mod(a, t / pp.prime, m) == 1)
                t /= pp.prime;
            else
                break;
        }
    }
    return t;
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    std::vector<bool> comp(limit + 1, false);
    for (u64 p = 2; p <= limit; ++p) {
        if (comp[p]) continue;
        primes.push_back(p);
        for (u64 m = p * p; m <= limit; m += p) comp[m] = true;
    }
    return primes;
}

namespace {

struct SegmentData {
    u64 lo = 0;  // segment covers [lo, hi)
    u64 hi = 0;
    std::vector<u64> lambda;
    std::vector<char> squarefree;
};

void sieve_segment(const std::vector<u64>& small_primes, SegmentData& seg) {
    const u64 len = seg.hi - seg.lo;
    seg.lambda.assign(len, 1);
    seg.squarefree.assign(len, 1);
    std::vector<u64> rem(len);
    for (u64 i = 0; i < len; ++i) rem[i] = seg.lo + i;
    for (u64 p : small_primes) {
        u64 start = (seg.lo + p - 1) / p * p;
        if (start < p) start = p;
        for (u64 m = start; m < seg.hi; m += p) {
            const u64 i = m - seg.lo;
            unsigned e = 0;
            while (rem[i] % p == 0) {
                rem[i] /= p;
                ++e;
            }
            if (e > 1) seg.squarefree[i] = 0;
            seg.lambda[i] = lcm_u64(seg.lambda[i], lambda_prime_power(p, e));
        }
    }
    for (u64 i = 0; i < len; ++i) {
        // Leftover cofactor is prime (any composite leftover would exceed hi).
        if (rem[i] > 1) seg.lambda[i] = lcm_u64(seg.lambda[i], rem[i] - 1);
    }
    if (seg.lo == 0) {
        if (len > 0) seg.lambda[0] = 1;  // unused slot for n = 0
        if (len > 1) seg.lambda[1] = 1;
    }
}

}  // namespace

void for_each_lambda(u64 X, const SieveOptions& opt,
                     const std::function<void(u64, u64, bool)>& fn) {
    if (X < 1) throw std::domain_error("for_each_lambda: X must be >= 1");
    const u64 seg_size = std::max<u64>(opt.segment_size, 64);
    u64 sqrt_x = 1;
    while ((sqrt_x + 1) * (sqrt_x + 1) <= X) ++sqrt_x;
    const std::vector<u64> small_primes = primes_up_to(sqrt_x);
    const unsigned threads = std::max(1u, opt.threads);

    const u64 n_segments = (X + seg_size) / seg_size;  // covering [1, X]
    std::vector<SegmentData> batch;
    for (u64 s0 = 0; s0 < n_segments; s0 += threads) {
        const u64 count = std::min<u64>(threads, n_segments - s0);
        batch.assign(count, {});
        for (u64 j = 0; j < count; ++j) {
            batch[j].lo = (s0 + j) * seg_size;
            batch[j].hi = std::min(X + 1, batch[j].lo + seg_size);
        }
        if (threads == 1 || count == 1) {
            for (auto& seg : batch) sieve_segment(small_primes, seg);
        } else {
            std::vector<std::future<void>> futs;
            for (auto& seg : batch)
                futs.push_back(std::async(std::launch::async,
                                          [&small_primes, &seg] { sieve_segment(small_primes, seg); }));
            for (auto& f : futs) f.get();
        }
        for (const auto& seg : batch) {
            const u64 first = std::max<u64>(seg.lo, 1);
            for (u64 n = first; n < seg.hi; ++n)
                fn(n, seg.lambda[n - seg.lo], seg.squarefree[n - seg.lo] != 0);
        }
    }
}

LambdaTable lambda_sieve(u64 X, u64 segment_size) {
    if (X < 1) throw std::domain_error("lambda_sieve: X must be >= 1");
    constexpr u64 kTableByteBudget = u64{1} << 32;  // 4 GiB of u64 entries
    if ((X + 1) > kTableByteBudget / sizeof(u64)) {
        const u64 segments = (X + segment_size - 1) / segment_size;
        throw ResourceError("lambda_sieve: table for X=" + std::to_string(X) +
                            " exceeds memory budget; use streaming over " +
                            std::to_string(segments) + " segments instead");
    }
    LambdaTable table;
    table.limit = X;
    table.lambda.assign(X + 1, 0);
    SieveOptions opt;
    opt.segment_size = segment_size;
    for_each_lambda(X, opt, [&table](u64 n, u64 lam, bool) { table.lambda[n] = lam; });
    return table;
}

}  // namespace gcarm
