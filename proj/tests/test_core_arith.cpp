#include <doctest.h>

#include <numeric>

#include "gcarm/core_arith.hpp"

using namespace gcarm;

namespace {

// Independent oracle: lambda(n) as the exact maximum order over the units
// mod n, by direct powering.
u64 brute_lambda(u64 n) {
    if (n == 1) return 1;
    u64 best = 1;
    for (u64 a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        u64 x = a % n, t = 1;
        while (x != 1 % n) {
            x = x * a % n;
            ++t;
        }
        best = std::max(best, t);
    }
    return best;
}

u64 brute_phi(u64 n) {
    u64 count = 0;
    for (u64 a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) ++count;
    return count;
}

bool trial_division_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("factorize known values") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1).value == 1);

    const auto f561 = factorize(561);
    CHECK(f561.factors == std::vector<PrimePower>{{3, 1}, {11, 1}, {17, 1}});

    const auto f560 = factorize(560);
    CHECK(f560.factors == std::vector<PrimePower>{{2, 4}, {5, 1}, {7, 1}});

    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize invariants on a range") {
    for (u64 n = 1; n <= 5000; ++n) {
        const auto f = factorize(n);
        u64 prod = 1, prev = 0;
        for (const auto& pp : f.factors) {
            CHECK(pp.prime > prev);
            CHECK(is_prime(pp.prime));
            prev = pp.prime;
            for (unsigned e = 0; e < pp.exponent; ++e) prod *= pp.prime;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("factorize handles large semiprimes") {
    // 2^61-1 is prime; (2^31-1)*(2^61-1) overflows 64 bits, use two 31-bit primes.
    const u64 p = 2147483647;  // 2^31-1
    const u64 q = 2147483629;
    const auto f = factorize(p * q);
    CHECK(f.factors == std::vector<PrimePower>{{q, 1}, {p, 1}});
}

TEST_CASE("is_prime agrees with trial division up to 10^6") {
    u64 count = 0;
    for (u64 n = 0; n <= 1000000; ++n) {
        if (is_prime(n)) ++count;
    }
    CHECK(count == 78498);  // pi(10^6)
    for (u64 n = 0; n <= 2000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(561));
    CHECK_FALSE(is_prime(1806));
    CHECK(is_prime((u64{1} << 61) - 1));
}

TEST_CASE("carmichael_lambda closed form") {
    CHECK(carmichael_lambda(8) == 2);
    CHECK(carmichael_lambda(561) == 80);
    for (u64 p : {2ull, 3ull, 5ull, 101ull, 65537ull}) CHECK(carmichael_lambda(p) == p - 1);
    CHECK(carmichael_lambda(1) == 1);
    CHECK(carmichael_lambda(2) == 1);
    CHECK(carmichael_lambda(4) == 2);
    CHECK(carmichael_lambda(16) == 4);
}

TEST_CASE("carmichael_lambda matches the max-order oracle") {
    for (u64 n = 1; n <= 300; ++n) CHECK(carmichael_lambda(n) == brute_lambda(n));
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    for (u64 p : {2ull, 7ull, 997ull}) CHECK(euler_phi(p) == p - 1);
    for (u64 n = 1; n <= 500; ++n) CHECK(euler_phi(n) == brute_phi(n));
    // lambda divides phi
    for (u64 n = 1; n <= 2000; ++n) CHECK(euler_phi(n) % carmichael_lambda(n) == 0);
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(5, 1) == 1);
    CHECK(multiplicative_order(2, 3) == 2);
    CHECK(multiplicative_order(3, 8) == 2);
    CHECK_THROWS_AS(multiplicative_order(6, 9), std::domain_error);
    for (u64 m = 2; m <= 200; ++m) {
        for (u64 a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            const u64 t = multiplicative_order(a, m);
            CHECK(pow_mod(a, t, m) == 1);
            for (u64 s = 1; s < t; ++s) CHECK(pow_mod(a, s, m) != 1);
            CHECK(carmichael_lambda(m) % t == 0);
        }
    }
}

TEST_CASE("lambda is attained and is a universal exponent") {
    u64 universal_failures = 0, not_attained = 0;
    for (u64 n = 2; n <= 10000; ++n) {
        const u64 lam = carmichael_lambda(n);
        std::vector<u64> lam_primes;
        for (const auto& pp : factorize(lam).factors) lam_primes.push_back(pp.prime);
        bool attained = false;
        for (u64 a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            if (pow_mod(a, lam, n) != 1) ++universal_failures;
            if (!attained) {
                bool full_order = true;
                for (u64 p : lam_primes)
                    if (pow_mod(a, lam / p, n) == 1) {
                        full_order = false;
                        break;
                    }
                attained = attained || full_order;
            }
        }
        if (!attained) ++not_attained;
    }
    CHECK(universal_failures == 0);
    CHECK(not_attained == 0);
}

TEST_CASE("lambda_sieve small values") {
    const auto t = lambda_sieve(10);
    const u64 expected[] = {1, 1, 2, 2, 4, 2, 6, 2, 6, 4};
    for (u64 n = 1; n <= 10; ++n) CHECK(t.at(n) == expected[n - 1]);

    const auto t1 = lambda_sieve(1);
    CHECK(t1.at(1) == 1);

    CHECK(lambda_sieve(561).at(561) == 80);
}

TEST_CASE("lambda_sieve agrees with closed form pointwise up to 10^5") {
    const auto t = lambda_sieve(100000, 4096);  // small segments on purpose
    for (u64 n = 1; n <= 100000; ++n) CHECK(t.at(n) == carmichael_lambda(n));
}

TEST_CASE("for_each_lambda deterministic across thread counts") {
    std::vector<std::pair<u64, u64>> base;
    SieveOptions one{1 << 12, 1};
    for_each_lambda(50000, one, [&](u64 n, u64 lam, bool) { base.emplace_back(n, lam); });
    SieveOptions four{1 << 12, 4};
    std::vector<std::pair<u64, u64>> parallel;
    for_each_lambda(50000, four, [&](u64 n, u64 lam, bool) { parallel.emplace_back(n, lam); });
    CHECK(base == parallel);
}

TEST_CASE("for_each_lambda squarefree flag") {
    SieveOptions opt{1 << 12, 1};
    for_each_lambda(20000, opt, [&](u64 n, u64, bool squarefree) {
        CHECK(squarefree == factorize(n).squarefree());
    });
}

TEST_CASE("lambda_sieve memory budget error") {
    try {
        lambda_sieve(u64{1} << 40);
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("segments") != std::string::npos);
    }
}
