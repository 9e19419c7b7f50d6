#include "gcarm/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace gcarm {

std::vector<u64> kp_family(u64 k, u64 X) {
    if (k == 0 || !factorize(k).squarefree())
        throw std::domain_error("kp_family: k must be squarefree and positive");
    std::vector<u64> out;
    if (X < k) return out;
    const u64 mod = kp_family_modulus(k);
    const u64 p_limit = X / k;
    for (u64 p : primes_up_to(p_limit)) {
        if (k % p == 0) continue;
        if (p % mod != 1 % mod) continue;
        const u64 n = k * p;
        if (!check_ck(n, static_cast<i64>(k)).member)
            throw std::logic_error("kp_family: constructed element failed verification");
        out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LiftResult lift_from_c_minus_1(i64 k, u64 n) {
    if (k >= 0 || !factorize(static_cast<u64>(-k)).squarefree())
        throw std::domain_error("lift_from_c_minus_1: k must be squarefree and negative");
    const u64 ak = static_cast<u64>(-k);
    LiftResult r;
    if (!check_ck(n, -1).member) {
        r.failure = LiftFailure::not_in_c_minus_1;
        return r;
    }
    const u64 mod = kp_family_modulus(ak);
    if ((n + 1) % mod != 0) {
        r.failure = LiftFailure::congruence;
        return r;
    }
    if (std::gcd(n, ak) != 1) {
        r.failure = LiftFailure::not_coprime;
        return r;
    }
    const u64 lifted = ak * n;
    if (!check_ck(lifted, k).member)
        throw std::logic_error("lift_from_c_minus_1: lifted element failed verification");
    r.value = lifted;
    return r;
}

std::vector<ChernickTriple> chernick(u64 limit_n) {
    std::vector<ChernickTriple> out;
    for (u64 n = 1; n <= limit_n; ++n) {
        const u64 a = 6 * n + 1, b = 12 * n + 1, c = 18 * n + 1;
        if (!is_prime(a) || !is_prime(b) || !is_prime(c)) continue;
        const u64 product = a * b * c;
        if (!check_ck(product, 1).member || is_prime(product))
            throw std::logic_error("chernick: product failed Carmichael verification");
        out.push_back({n, product});
    }
    return out;
}

namespace {

bool is_power_of_two(u64 v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

bool validate_witness(i64 a, i64 k, u64 m) {
    if (a < 2 || m < 1) return false;
    if (std::gcd(static_cast<u64>(a), m) != 1) return false;
    const __int128 mk = static_cast<__int128>(m) - k;
    if (mk <= 1) return false;
    const u64 diff = static_cast<u64>(mk);
    const u64 ord = multiplicative_order(static_cast<u64>(a), m);
    if (diff % ord != 0 || ord >= diff) return false;
    if (diff == 2 && is_power_of_two(static_cast<u64>(a) + 1)) return false;
    if (diff == 6 && a == 2) return false;
    return true;
}

WitnessResult kiss_phong_witness(i64 a, i64 k) {
    if (a < 2) throw std::domain_error("kiss_phong_witness: requires a >= 2");
    if (k > 0) throw std::domain_error("kiss_phong_witness: requires k <= 0");
    WitnessResult r;
    r.problem.a = a;
    r.problem.k = k;
    if (k == 0 && a == 2) {
        r.impossible = true;
        return r;
    }
    u64 m;
    if (k == 0 && a == 3)
        m = 8;
    else if (k == -5 && a == 2)
        m = 3;
    else
        m = static_cast<u64>(a - 1);
    if (!validate_witness(a, k, m))
        throw std::logic_error("kiss_phong_witness: selected witness failed validation");
    r.problem.witness_m = m;
    r.problem.witness_order = multiplicative_order(static_cast<u64>(a), m);
    return r;
}

std::vector<u64> enumerate_fixed_base(i64 a, i64 k, u64 X) {
    if (a < 2) throw std::domain_error("enumerate_fixed_base: requires a >= 2");
    std::vector<u64> out;
    const u64 ua = static_cast<u64>(a);
    const u64 start = static_cast<u64>(std::max<i64>(k, 0)) + 1;
    for (u64 n = start; n <= X; ++n) {
        if (std::gcd(ua, n) != 1) continue;
        const u64 exp = static_cast<u64>(static_cast<__int128>(n) - k);
        if (pow_mod(ua, exp, n) == 1 % n) out.push_back(n);
    }
    return out;
}

}  // namespace gcarm
