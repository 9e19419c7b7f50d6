#pragma once

#include <optional>
#include <vector>

#include "gcarm/membership.hpp"

namespace gcarm {

/// All n = k*p <= X with p prime, p coprime to k, p == 1 mod
/// (lambda(k)/gcd(lambda(k),k)). Every output re-verified against check_ck.
std::vector<u64> kp_family(u64 k, u64 X);

enum class LiftFailure {
    none,
    not_in_c_minus_1,   // n fails the C_{-1} criterion
    congruence,         // n != -1 mod lambda(|k|)/gcd(lambda(|k|), |k|)
    not_coprime,        // gcd(n, |k|) > 1
};

struct LiftResult {
    std::optional<u64> value;  // |k| * n when all hypotheses hold
    LiftFailure failure = LiftFailure::none;
};

/// |k|*n in C_k from n in C_{-1}, for squarefree k < 0.
LiftResult lift_from_c_minus_1(i64 k, u64 n);

struct ChernickTriple {
    u64 n;        // 6n+1, 12n+1, 18n+1 all prime
    u64 product;  // (6n+1)(12n+1)(18n+1), verified Carmichael
};

std::vector<ChernickTriple> chernick(u64 limit_n);

/// Witness (m, ord_m(a)) for the fixed-base infinitude machinery.
struct FixedBaseProblem {
    i64 a = 2;
    i64 k = 0;
    std::optional<u64> witness_m;
    std::optional<u64> witness_order;
};

struct WitnessImpossible {};  // only (k, a) = (0, 2)

struct WitnessResult {
    bool impossible = false;
    FixedBaseProblem problem;
};

/// Witness finder for a >= 2, k <= 0: m = a-1 in the generic cases,
/// m = 8 for (k,a) = (0,3), m = 3 for (k,a) = (-5,2), impossible for (0,2).
/// Every returned witness is mechanically re-validated against the
/// hypotheses and exception clauses.
WitnessResult kiss_phong_witness(i64 a, i64 k);

/// True when the witness satisfies all hypotheses: gcd(a,m)=1, m-k>1,
/// ord | m-k, ord < m-k, and neither exception clause fires.
bool validate_witness(i64 a, i64 k, u64 m);

/// All n in (max(k,0), X] with gcd(a, n) = 1 and a^{n-k} == 1 (mod n).
std::vector<u64> enumerate_fixed_base(i64 a, i64 k, u64 X);

}  // namespace gcarm
