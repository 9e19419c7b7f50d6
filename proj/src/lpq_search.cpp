#include "gcarm/lpq_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <numeric>

namespace gcarm {

namespace {

std::vector<u64> divisors_of(u64 v) {
    std::vector<u64> divs{1};
    for (const auto& pp : factorize(v).factors) {
        const size_t sz = divs.size();
        u64 pe = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

using i128 = __int128;

}  // namespace

TwoPrimeResult two_prime_elements(i64 k) {
    TwoPrimeResult result;
    if (k > 0 && is_prime(static_cast<u64>(k))) {
        result.infinite_family = true;
        return result;
    }
    // Exhaustive scan to the proof's explicit bounds:
    //   coprime case: p+q <= k+1 (k > 0) or q <= 4-3k (k < 0);
    //   p | k case:   q <= |p-k| + 1 over the primes p | k.
    i64 bound = 4;
    if (k > 0) bound = std::max<i64>(bound, k + 1);
    if (k < 0) bound = std::max<i64>(bound, 4 - 3 * k);
    if (k != 0) bound = std::max<i64>(bound, 2 * std::abs(k) + 1);
    const auto primes = primes_up_to(static_cast<u64>(bound));
    for (size_t i = 0; i < primes.size(); ++i) {
        for (size_t j = i + 1; j < primes.size(); ++j) {
            const u64 n = primes[i] * primes[j];
            if (check_ck(n, k).member) result.elements.push_back(n);
        }
    }
    std::sort(result.elements.begin(), result.elements.end());
    return result;
}

SearchReport search_lpq(u64 l, i64 k, u64 X) {
    if (l == 0) throw std::domain_error("search_lpq: l must be positive");
    SearchReport report;
    if (static_cast<i64>(l) == k) {
        report.warnings.push_back({LpqWarning::l_equals_k, "l = k = " + std::to_string(k)});
        return report;
    }
    // q > p forces l*p*p < X.
    const u64 p_limit = static_cast<u64>(std::sqrt(static_cast<double>(X) / l)) + 2;
    for (u64 p : primes_up_to(p_limit)) {
        if (l % p == 0) continue;
        const i128 lp = static_cast<i128>(l) * p;
        if (lp == k) {
            report.warnings.push_back(
                {LpqWarning::lp_equals_k, "l*p = k at p = " + std::to_string(p)});
            continue;
        }
        const i128 lp_minus_k = lp - k;
        const u64 abs_lpk = static_cast<u64>(lp_minus_k < 0 ? -lp_minus_k : lp_minus_k);
        for (u64 d : divisors_of(abs_lpk)) {
            const u64 q = d + 1;
            if (q <= p || !is_prime(q) || l % q == 0) continue;
            const u128 n128 = (u128)l * p * q;
            if (n128 > X) continue;
            const u64 n = static_cast<u64>(n128);
            const i128 lq_minus_k = static_cast<i128>(l) * q - k;
            if (lq_minus_k == 0) {
                report.warnings.push_back(
                    {LpqWarning::lq_equals_k, "l*q = k at q = " + std::to_string(q)});
                continue;
            }
            if (lq_minus_k % static_cast<i128>(p - 1) != 0) continue;
            if (!check_ck(n, k).member) continue;
            LpqSolution sol;
            sol.l = l;
            sol.k = k;
            sol.p = p;
            sol.q = q;
            sol.n = n;
            sol.alpha = static_cast<i64>(lq_minus_k / static_cast<i128>(p - 1));
            sol.beta = static_cast<i64>(lp_minus_k / (q - 1));
            if (static_cast<i128>(sol.alpha) * sol.beta == static_cast<i128>(l) * l)
                report.warnings.push_back({LpqWarning::alpha_beta_equals_l_squared,
                                           "degenerate l(p+q-1)=k solution at n = " +
                                               std::to_string(n)});
            report.solutions.push_back(sol);
        }
    }
    std::sort(report.solutions.begin(), report.solutions.end(),
              [](const LpqSolution& a, const LpqSolution& b) { return a.n < b.n; });
    return report;
}

SearchReport search_lpq_pinch(u64 l, i64 k) {
    if (k <= 0 || static_cast<i64>(l) <= k)
        throw std::domain_error("Pinch bound requires l > k > 0");
    SearchReport report;
    const Factorization lf = factorize(l);
    const u64 P = lf.factors.back().prime;  // l >= 2 since l > k >= 1
    const u64 l2 = l * l;
    // alpha*beta ranges over (l^2, l^2 (P+3)/(P+1)].
    const u64 v_max = static_cast<u64>((u128)l2 * (P + 3) / (P + 1));
    for (u64 v = l2 + 1; v <= v_max; ++v) {
        const u64 denom = v - l2;
        for (u64 alpha : divisors_of(v)) {
            const u64 beta = v / alpha;
            const u64 num_p = (l - static_cast<u64>(k)) * (l + beta);
            const u64 num_q = (l - static_cast<u64>(k)) * (l + alpha);
            if (num_p % denom != 0 || num_q % denom != 0) continue;
            const u64 p = 1 + num_p / denom;
            const u64 q = 1 + num_q / denom;
            if (!(P < p && p < q)) continue;
            if (!is_prime(p) || !is_prime(q)) continue;
            // Re-derive the certificate from its defining equations.
            const i128 lq_minus_k = static_cast<i128>(l) * q - k;
            const i128 lp_minus_k = static_cast<i128>(l) * p - k;
            if (lq_minus_k != static_cast<i128>(alpha) * (p - 1)) continue;
            if (lp_minus_k != static_cast<i128>(beta) * (q - 1)) continue;
            const u128 n128 = (u128)l * p * q;
            if (n128 > std::numeric_limits<u64>::max()) continue;
            const u64 n = static_cast<u64>(n128);
            if (!check_ck(n, k).member) continue;
            LpqSolution sol;
            sol.l = l;
            sol.k = k;
            sol.p = p;
            sol.q = q;
            sol.n = n;
            sol.alpha = static_cast<i64>(alpha);
            sol.beta = static_cast<i64>(beta);
            report.solutions.push_back(sol);
        }
    }
    std::sort(report.solutions.begin(), report.solutions.end(),
              [](const LpqSolution& a, const LpqSolution& b) { return a.n < b.n; });
    report.solutions.erase(std::unique(report.solutions.begin(), report.solutions.end()),
                           report.solutions.end());
    return report;
}

PqrReport pqr_chain_search(i64 k, u64 X) {
    PqrReport report;
    std::vector<u64> p_candidates;
    if (k == 0) {
        // p-1 | 0 holds for every prime; only p^3 <= X can contribute.
        const u64 cbrt = static_cast<u64>(std::cbrt(static_cast<double>(X))) + 1;
        p_candidates = primes_up_to(cbrt);
        report.warnings.push_back(
            {LpqWarning::few_prime_factors, "k = 0: finiteness hypothesis not applicable"});
    } else {
        const u64 ak = static_cast<u64>(std::abs(k));
        unsigned omega = 0;
        for (const auto& pp : factorize(ak).factors) omega += pp.exponent;
        if (omega < 3)
            report.warnings.push_back({LpqWarning::few_prime_factors,
                                       "|k| has fewer than 3 prime factors (with multiplicity)"});
        for (u64 d : divisors_of(ak))
            if (is_prime(d + 1)) p_candidates.push_back(d + 1);
    }
    for (u64 p : p_candidates) {
        SearchReport sub = search_lpq(p, k, X);
        for (auto& w : sub.warnings) report.warnings.push_back(std::move(w));
        for (const auto& sol : sub.solutions) {
            if (p >= sol.p) continue;
            if ((sol.p - 1) % (p - 1) != 0) continue;
            if ((sol.q - 1) % (p - 1) != 0) continue;
            report.solutions.push_back({p, sol.p, sol.q, sol.n});
        }
    }
    std::sort(report.solutions.begin(), report.solutions.end(),
              [](const PqrSolution& a, const PqrSolution& b) {
                  return std::tie(a.n, a.p) < std::tie(b.n, b.p);
              });
    return report;
}

}  // namespace gcarm
