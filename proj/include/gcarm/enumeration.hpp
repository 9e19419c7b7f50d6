#pragma once

#include <chrono>
#include <functional>
#include <vector>

#include "gcarm/membership.hpp"

namespace gcarm {

struct EnumerationResult {
    SetVariant variant;
    u64 limit = 0;
    std::vector<u64> elements;
    std::chrono::duration<double> wall_time{0};
};

struct CountSeries {
    SetVariant variant;
    std::vector<std::pair<u64, u64>> points;  // (X_i, cumulative count)
};

/// Streams every member of the variant set in (max(k,0), X], in increasing
/// order, off the segmented lambda sieve.
void scan_members(SetVariant variant, u64 X, const SieveOptions& opt,
                  const std::function<void(u64 n)>& fn);

EnumerationResult enumerate_set(SetVariant variant, u64 X, const SieveOptions& opt = {});

/// One streaming pass emitting cumulative counts at each checkpoint.
CountSeries count_series(SetVariant variant, const std::vector<u64>& checkpoints,
                         const SieveOptions& opt = {});

/// d with count = X * exp(-d * log X * logloglog X / loglog X).
/// Requires X >= 100 and count >= 1.
double d_coefficient(u64 X, u64 count);

/// N_{-k}(X) / N_k(X) by exact enumeration of both sets.
double ratio_series(i64 k, u64 X, const SieveOptions& opt = {});

/// Prime-number-theorem estimate of the excluded k*p family count:
/// phi(lambda(k)/gcd(lambda(k),k))^{-1} * (X/k) / log(X/k).
/// Requires squarefree k >= 1 and X/k >= 3.
double asymptotic_kp_count(u64 k, u64 X);

}  // namespace gcarm
