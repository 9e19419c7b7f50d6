#pragma once

#include "gcarm/enumeration.hpp"

namespace gcarm {

/// Old/new status of n in C'_k: Old(d) when some d | gcd(n, k), d > 1,
/// has n/d in C'_{k/d}; New when no such divisor exists. gcd(n, 0) = n.
struct KnodelClassification {
    u64 n = 0;
    i64 k = 0;
    bool old_element = false;
    u64 divisor = 0;  // smallest witnessing d when old_element
};

/// prod p_i^{e_i - 1} over the factorization of n divides k (k = 0 counts
/// as divisible by everything). Requires n in C'_k.
bool exponent_bound_check(u64 n, i64 k);

/// (n*p, k*p) from n in C'_k with p | n; the product membership is
/// re-verified and a failure is a fatal invariant violation.
std::pair<u64, i64> multiply_member(u64 n, i64 k, u64 p);

KnodelClassification classify(u64 n, i64 k);

/// C'_k up to X via the shared sieve engine (squarefree filter off).
EnumerationResult enumerate_cprime(i64 k, u64 X, const SieveOptions& opt = {});

}  // namespace gcarm
