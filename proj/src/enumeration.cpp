#include "gcarm/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gcarm {

namespace {

struct MemberTest {
    i64 k;
    bool require_squarefree;
    bool subtract_kp_family = false;
    u64 uk = 0;
    u64 family_modulus = 1;

    explicit MemberTest(SetVariant v) : k(v.k) {
        require_squarefree = v.kind != SetKind::Cprime;
        if (v.kind == SetKind::N && v.k > 0 &&
            factorize(static_cast<u64>(v.k)).squarefree()) {
            subtract_kp_family = true;
            uk = static_cast<u64>(v.k);
            family_modulus = kp_family_modulus(uk);
        }
    }

    bool operator()(u64 n, u64 lambda, bool squarefree) const {
        if (static_cast<__int128>(n) <= std::max<i64>(k, 0)) return false;
        if (require_squarefree && !squarefree) return false;
        const u64 nk = static_cast<u64>(static_cast<__int128>(n) - k);
        if (nk % lambda != 0) return false;
        if (subtract_kp_family && n % uk == 0) {
            const u64 p = n / uk;
            if (p % family_modulus == 1 % family_modulus && is_prime(p)) return false;
        }
        return true;
    }
};

}  // namespace

void scan_members(SetVariant variant, u64 X, const SieveOptions& opt,
                  const std::function<void(u64)>& fn) {
    const MemberTest test(variant);
    for_each_lambda(X, opt, [&](u64 n, u64 lambda, bool squarefree) {
        if (test(n, lambda, squarefree)) fn(n);
    });
}

EnumerationResult enumerate_set(SetVariant variant, u64 X, const SieveOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    EnumerationResult result;
    result.variant = variant;
    result.limit = X;
    scan_members(variant, X, opt, [&](u64 n) { result.elements.push_back(n); });
    result.wall_time = std::chrono::steady_clock::now() - t0;
    return result;
}

CountSeries count_series(SetVariant variant, const std::vector<u64>& checkpoints,
                         const SieveOptions& opt) {
    if (checkpoints.empty())
        throw std::domain_error("count_series: checkpoints must be nonempty");
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw std::domain_error("count_series: checkpoints must be increasing");
    CountSeries series;
    series.variant = variant;
    const u64 X = checkpoints.back();
    u64 count = 0;
    size_t next = 0;
    const MemberTest test(variant);
    for_each_lambda(X, opt, [&](u64 n, u64 lambda, bool squarefree) {
        while (next < checkpoints.size() && n > checkpoints[next]) {
            series.points.emplace_back(checkpoints[next], count);
            ++next;
        }
        if (test(n, lambda, squarefree)) ++count;
    });
    while (next < checkpoints.size()) {
        series.points.emplace_back(checkpoints[next], count);
        ++next;
    }
    return series;
}

double d_coefficient(u64 X, u64 count) {
    if (X < 100) throw std::domain_error("d undefined: X < 100");
    if (count == 0) throw std::domain_error("d undefined: count = 0");
    const double lx = std::log(static_cast<double>(X));
    const double llx = std::log(lx);
    const double lllx = std::log(llx);
    return std::log(static_cast<double>(X) / static_cast<double>(count)) * llx / (lx * lllx);
}

double ratio_series(i64 k, u64 X, const SieveOptions& opt) {
    u64 pos = 0, neg = 0;
    scan_members({SetKind::N, k}, X, opt, [&](u64) { ++pos; });
    scan_members({SetKind::N, -k}, X, opt, [&](u64) { ++neg; });
    if (pos == 0) throw std::domain_error("ratio_series: N_k(X) = 0");
    return static_cast<double>(neg) / static_cast<double>(pos);
}

double asymptotic_kp_count(u64 k, u64 X) {
    if (k == 0 || !factorize(k).squarefree())
        throw std::domain_error("asymptotic_kp_count: k must be squarefree and positive");
    const double xk = static_cast<double>(X) / static_cast<double>(k);
    if (xk < 3.0) throw std::domain_error("asymptotic_kp_count: requires X/k >= 3");
    const u64 phi = euler_phi(kp_family_modulus(k));
    return xk / (static_cast<double>(phi) * std::log(xk));
}

}  // namespace gcarm
