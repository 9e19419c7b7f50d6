#pragma once

#include <string>
#include <vector>

#include "gcarm/membership.hpp"

namespace gcarm {

/// A certified l*p*q member of C_k with the alpha/beta witness:
/// alpha*(p-1) = l*q - k and beta*(q-1) = l*p - k.
struct LpqSolution {
    u64 l = 1;
    i64 k = 0;
    u64 p = 0, q = 0;  // primes, p < q
    i64 alpha = 0, beta = 0;
    u64 n = 0;  // l*p*q

    friend bool operator==(const LpqSolution&, const LpqSolution&) = default;
};

enum class LpqWarning {
    l_equals_k,
    lp_equals_k,
    lq_equals_k,
    alpha_beta_equals_l_squared,
    few_prime_factors,  // pqr hypothesis |k| has < 3 prime factors
};

struct TaggedWarning {
    LpqWarning kind;
    std::string detail;
};

struct SearchReport {
    std::vector<LpqSolution> solutions;  // sorted by n
    std::vector<TaggedWarning> warnings;
};

/// The elements of C_k with exactly two prime factors. Infinite exactly
/// when k > 0 is prime (the k*p family); otherwise the complete finite
/// list obtained by exhausting the proof's explicit bounds.
struct TwoPrimeResult {
    bool infinite_family = false;
    std::vector<u64> elements;
};

TwoPrimeResult two_prime_elements(i64 k);

/// Complete divisor-driven search for n = l*p*q <= X in C_k with
/// gcd(l, pq) = 1 and p < q. Degenerate alpha*beta = l^2 solutions are
/// kept and flagged.
SearchReport search_lpq(u64 l, i64 k, u64 X);

/// X-free certificate-space search for l > k > 0 with P < p < q, driven
/// by the bound l^2 < alpha*beta <= l^2 (P+3)/(P+1), P = largest prime
/// factor of l.
SearchReport search_lpq_pinch(u64 l, i64 k);

struct PqrSolution {
    u64 p = 0, q = 0, r = 0;  // p < q < r, p-1 | q-1 and p-1 | r-1
    u64 n = 0;
};

struct PqrReport {
    std::vector<PqrSolution> solutions;
    std::vector<TaggedWarning> warnings;
};

/// Triples p*q*r <= X in C_k with p-1 | q-1 and p-1 | r-1; p is confined
/// to divisors-of-k plus one, and the rest delegates to search_lpq.
PqrReport pqr_chain_search(i64 k, u64 X);

}  // namespace gcarm
