#include "gcarm/knodel.hpp"

#include <algorithm>
#include <numeric>

namespace gcarm {

namespace {

void require_member(u64 n, i64 k, const char* op) {
    if (!check_cprime(n, k).member)
        throw std::domain_error(std::string(op) + ": n is not in C'_k");
}

std::vector<u64> sorted_divisors(u64 v) {
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

}  // namespace

bool exponent_bound_check(u64 n, i64 k) {
    require_member(n, k, "exponent_bound_check");
    // p^{e-1} divides lambda(p^e) except at p = 2, e > 2, where only 2^{e-2}
    // does; the bound uses the largest power actually forced into k.
    u128 prod = 1;
    for (const auto& pp : factorize(n).factors) {
        unsigned forced = pp.exponent - 1;
        if (pp.prime == 2 && pp.exponent > 2) forced = pp.exponent - 2;
        for (unsigned e = 0; e < forced; ++e) prod *= pp.prime;
    }
    if (k == 0) return true;
    const u64 ak = static_cast<u64>(k < 0 ? -k : k);
    if (prod > ak) return false;
    return ak % static_cast<u64>(prod) == 0;
}

std::pair<u64, i64> multiply_member(u64 n, i64 k, u64 p) {
    require_member(n, k, "multiply_member");
    if (!is_prime(p) || n % p != 0)
        throw std::domain_error("multiply_member: p must be a prime divisor of n");
    const u64 np = n * p;
    const i64 kp = k * static_cast<i64>(p);
    if (!check_cprime(np, kp).member)
        throw std::logic_error("multiply_member: n*p not in C'_{k*p}, invariant violated");
    return {np, kp};
}

KnodelClassification classify(u64 n, i64 k) {
    require_member(n, k, "classify");
    KnodelClassification cls;
    cls.n = n;
    cls.k = k;
    const u64 g = k == 0 ? n : std::gcd(n, static_cast<u64>(k < 0 ? -k : k));
    for (u64 d : sorted_divisors(g)) {
        if (d <= 1) continue;
        const i64 kd = k == 0 ? 0 : k / static_cast<i64>(d);
        if (check_cprime(n / d, kd).member) {
            cls.old_element = true;
            cls.divisor = d;
            return cls;
        }
    }
    return cls;
}

EnumerationResult enumerate_cprime(i64 k, u64 X, const SieveOptions& opt) {
    return enumerate_set({SetKind::Cprime, k}, X, opt);
}

}  // namespace gcarm
