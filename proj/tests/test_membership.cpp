#include <doctest.h>

#include "gcarm/membership.hpp"

using namespace gcarm;

TEST_CASE("check_ck examples") {
    CHECK(check_ck(561, 1).member);
    CHECK(check_ck(1806, 0).member);
    CHECK(check_ck(30, -2).member);

    for (i64 k : {-3, 0, 1, 5}) {
        const auto v = check_ck(9, k);
        CHECK_FALSE(v.member);
        CHECK(v.violation == ViolationKind::squarefree);
        CHECK(v.witness_prime == 3);
    }
}

TEST_CASE("check_ck evidence fields") {
    const auto v = check_ck(561, 1);
    CHECK(v.lambda_n == 80);
    CHECK(v.residue == 0);
    CHECK(v.violation == ViolationKind::none);

    // 15 = 3*5, k=1: 3-1=2 divides 14, 5-1=4 does not
    const auto w = check_ck(15, 1);
    CHECK_FALSE(w.member);
    CHECK(w.violation == ViolationKind::divisibility);
    CHECK(w.witness_prime == 5);

    const auto d = check_ck(3, 7);  // n <= max(k,0)
    CHECK_FALSE(d.member);
    CHECK(d.violation == ViolationKind::domain);
}

TEST_CASE("n = 1 is a member exactly when k <= 0") {
    CHECK(check_ck(1, 0).member);
    CHECK(check_ck(1, -5).member);
    CHECK_FALSE(check_ck(1, 1).member);
    CHECK(check_cprime(1, 0).member);
    CHECK_FALSE(check_cprime(1, 2).member);
}

TEST_CASE("check_cprime examples") {
    CHECK(check_cprime(4, 2).member);
    CHECK(check_cprime(8, 4).member);
    CHECK(check_cprime(561, 1).member);
    CHECK_FALSE(check_cprime(4, 1).member);
}

TEST_CASE("check_nk examples") {
    CHECK_FALSE(check_nk(15, 3).member);   // 15 = 3*5 in the excluded family
    CHECK(check_nk(561, 1).member);        // Carmichael number
    CHECK_FALSE(check_nk(7, 1).member);    // prime, excluded 1*p family
    const auto v = check_nk(15, 3);
    CHECK(v.violation == ViolationKind::family_excluded);
    CHECK(v.witness_prime == 5);
}

TEST_CASE("oracle examples") {
    CHECK(oracle_ck(561, 1));
    CHECK_FALSE(oracle_ck(4, 0));
    CHECK(oracle_ck(42, 0));
    CHECK(oracle_cprime(4, 2));
    CHECK(oracle_cprime(8, 4));
    for (u64 p : {2ull, 13ull, 97ull}) CHECK(oracle_cprime(p, 1));
    CHECK_THROWS_AS(oracle_ck(200000, 1), ResourceError);
}

TEST_CASE("criterion equals oracle on a sample grid") {
    // The acceptance suite runs the full n <= 3000 grid; keep a fast slice here.
    for (u64 n = 1; n <= 400; ++n) {
        for (i64 k = -10; k <= 10; ++k) {
            if (static_cast<i64>(n) <= std::max<i64>(k, 0)) continue;
            CHECK(check_ck(n, k).member == oracle_ck(n, k));
            CHECK(check_cprime(n, k).member == oracle_cprime(n, k));
        }
    }
}

TEST_CASE("C_k subset of C'_k and N_k subset of C_k") {
    for (u64 n = 1; n <= 2000; ++n) {
        for (i64 k : {-4, -1, 0, 1, 2, 6}) {
            if (check_ck(n, k).member) CHECK(check_cprime(n, k).member);
            if (check_nk(n, k).member) CHECK(check_ck(n, k).member);
        }
    }
}

TEST_CASE("parity invariant: members > 2 have n == k (mod 2)") {
    for (u64 n = 3; n <= 3000; ++n)
        for (i64 k = -8; k <= 8; ++k)
            if (check_ck(n, k).member)
                CHECK((static_cast<i64>(n) - k) % 2 == 0);
}

TEST_CASE("mod-4 invariant: 4 | k forces prime factors 2 or 3 (mod 4)") {
    for (u64 n = 1; n <= 5000; ++n)
        for (i64 k : {-8, -4, 4, 8, 12}) {
            if (!check_ck(n, k).member) continue;
            for (const auto& pp : factorize(n).factors)
                CHECK((pp.prime == 2 || pp.prime % 4 == 3));
        }
}

TEST_CASE("is_k_carmichael") {
    for (u64 p : {2ull, 3ull, 31ull, 997ull}) CHECK(is_k_carmichael(p, 1));
    CHECK(is_k_carmichael(15, 2));
    CHECK_FALSE(is_k_carmichael(9, 2));  // not squarefree

    // (m, r) true implies (m, s) true whenever r | s
    for (u64 m = 1; m <= 300; ++m)
        for (u64 r = 1; r <= 6; ++r)
            for (u64 s = r; s <= 24; s += r)
                if (is_k_carmichael(m, r)) CHECK(is_k_carmichael(m, s));
}

TEST_CASE("prime_elements") {
    CHECK(prime_elements(1).infinite_family);

    const auto k0 = prime_elements(0);
    CHECK_FALSE(k0.infinite_family);
    CHECK(k0.primes == std::vector<u64>{2});

    const auto k3 = prime_elements(3);
    CHECK(k3.primes.empty());

    // brute-force confirmation over p <= 100 for several k
    for (i64 k : {-7, -2, 0, 2, 3, 4, 6, 10}) {
        std::vector<u64> brute;
        for (u64 p = 2; p <= 100; ++p)
            if (is_prime(p) && check_ck(p, k).member) brute.push_back(p);
        std::vector<u64> got;
        for (u64 p : prime_elements(k).primes)
            if (p <= 100) got.push_back(p);
        CHECK(got == brute);
    }
}
