#pragma once

#include <string>
#include <vector>

#include "gcarm/core_arith.hpp"

namespace gcarm {

enum class SetKind { C, Cprime, N };

/// Which set is being queried: C_k, C'_k, or N_k.
struct SetVariant {
    SetKind kind = SetKind::C;
    i64 k = 1;

    friend bool operator==(const SetVariant&, const SetVariant&) = default;
};

std::string set_kind_name(SetKind kind);  // "ck" / "cpk" / "nk"

enum class ViolationKind {
    none,
    domain,           // n <= max(k, 0)
    squarefree,       // p^2 | n (witness_prime = p)
    divisibility,     // lambda contribution of witness_prime does not divide n-k
    family_excluded,  // n = k*p in the excluded k*p family of N_k (witness_prime = p)
};

/// Decision for (n, variant) with the evidence needed to explain it.
struct MembershipVerdict {
    u64 n = 0;
    SetVariant variant;
    bool member = false;
    u64 lambda_n = 1;
    u64 residue = 0;  // (n - k) mod lambda(n), reduced to [0, lambda)
    ViolationKind violation = ViolationKind::none;
    u64 witness_prime = 0;
};

/// Korselt criterion for C_k: n > max(k,0), squarefree, lambda(n) | n-k.
/// The first failing prime (increasing order) is reported as evidence.
MembershipVerdict check_ck(u64 n, i64 k);

/// C'_k: n > max(k,0) and lambda(n) | n-k; no squarefree requirement.
MembershipVerdict check_cprime(u64 n, i64 k);

/// N_k: C_k minus the k*p family for squarefree k > 0 (exact membership
/// test on the excluded family); equals C_k for all other k.
MembershipVerdict check_nk(u64 n, i64 k);

/// Definitional oracle: a^{n-k+1} == a (mod n) for every a in [0, n).
/// Capped at n <= 10^5 (ResourceError beyond); requires n > max(k,0).
bool oracle_ck(u64 n, i64 k);

/// Same congruence restricted to a coprime to n.
bool oracle_cprime(u64 n, i64 k);

/// m squarefree with lambda(m) | k(m-1).
bool is_k_carmichael(u64 m, u64 k);

/// The primes in C_k. Infinite exactly when k = 1 (all primes).
struct PrimeElements {
    bool infinite_family = false;
    std::vector<u64> primes;  // empty when infinite_family
};

PrimeElements prime_elements(i64 k);

/// lambda(k) / gcd(lambda(k), k) -- the modulus of the k*p family (k >= 1).
u64 kp_family_modulus(u64 k);

}  // namespace gcarm
