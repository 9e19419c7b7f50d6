#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gcarm/constructions.hpp"
#include "gcarm/csvio.hpp"
#include "gcarm/enumeration.hpp"
#include "gcarm/knodel.hpp"
#include "gcarm/lpq_search.hpp"
#include "gcarm/membership.hpp"

namespace {

using namespace gcarm;

SetKind parse_variant(const std::string& s) {
    if (s == "ck") return SetKind::C;
    if (s == "cpk") return SetKind::Cprime;
    if (s == "nk") return SetKind::N;
    throw CLI::ValidationError("--variant", "must be one of ck, cpk, nk");
}

// "lo:hi:step" or comma-separated values; accepts forms like 1e5.
std::vector<u64> parse_checkpoints(const std::string& s) {
    auto to_u64 = [](const std::string& t) -> u64 {
        const double v = std::stod(t);
        if (v < 1 || v > 9.2e18) throw CLI::ValidationError("--checkpoints", "value out of range");
        return static_cast<u64>(v);
    };
    std::vector<u64> points;
    if (s.find(':') != std::string::npos) {
        std::istringstream in(s);
        std::string lo, hi, step;
        std::getline(in, lo, ':');
        std::getline(in, hi, ':');
        std::getline(in, step, ':');
        const u64 a = to_u64(lo), b = to_u64(hi), d = step.empty() ? 1 : to_u64(step);
        for (u64 x = a; x <= b; x += d) points.push_back(x);
    } else {
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) points.push_back(to_u64(tok));
    }
    if (points.empty() || !std::is_sorted(points.begin(), points.end()))
        throw CLI::ValidationError("--checkpoints", "must be a nonempty increasing list");
    return points;
}

std::pair<i64, i64> parse_k_range(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--k-range", "expected lo:hi");
    return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
}

unsigned count_prime_factors(u64 v) {
    unsigned total = 0;
    for (const auto& pp : factorize(v).factors) total += pp.exponent;
    return total;
}

struct OutputSink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    // exit code 2 on unwritable path
    bool open(const std::string& path) {
        if (path.empty() || path == "-") return true;
        file.open(path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file: " << path << "\n";
            return false;
        }
        os = &file;
        return true;
    }
};

// Enumeration with read-through cache; rebuilds (with a warning) when the
// cached file fails validation.
std::vector<u64> cached_enumeration(SetVariant variant, u64 X, const SieveOptions& opt,
                                    const std::filesystem::path& cache_dir) {
    if (!cache_dir.empty()) {
        const auto file = cache_dir / csvio::cache_filename(variant, X);
        if (std::filesystem::exists(file)) {
            if (auto cached = csvio::load_cached_elements(cache_dir, variant, X)) return *cached;
            std::cerr << "warning: corrupt cache file " << file.string() << ", rebuilding\n";
        }
    }
    auto result = enumerate_set(variant, X, opt);
    csvio::store_cached_elements(cache_dir, variant, X, result.elements);
    return result.elements;
}

struct CommonOpts {
    unsigned threads = 1;
    u64 segment_size = u64{1} << 20;
    std::string cache_dir_flag;
    std::string output;

    void attach(CLI::App* cmd) {
        cmd->add_option("--threads", threads, "worker count");
        cmd->add_option("--segment-size", segment_size, "sieve segment size");
        cmd->add_option("--cache-dir", cache_dir_flag, "result cache directory");
        cmd->add_option("-o,--output", output, "output file (default stdout)");
    }

    SieveOptions sieve() const { return {segment_size, threads}; }
    std::filesystem::path cache_dir() const { return csvio::resolve_cache_dir(cache_dir_flag); }
};

const char* violation_name(ViolationKind v) {
    switch (v) {
        case ViolationKind::none: return "none";
        case ViolationKind::domain: return "domain";
        case ViolationKind::squarefree: return "squarefree";
        case ViolationKind::divisibility: return "divisibility";
        case ViolationKind::family_excluded: return "family-excluded";
    }
    return "?";
}

const char* warning_name(LpqWarning w) {
    switch (w) {
        case LpqWarning::l_equals_k: return "l=k";
        case LpqWarning::lp_equals_k: return "lp=k";
        case LpqWarning::lq_equals_k: return "lq=k";
        case LpqWarning::alpha_beta_equals_l_squared: return "alpha_beta_equals_l_squared";
        case LpqWarning::few_prime_factors: return "few_prime_factors";
    }
    return "?";
}

int run(int argc, char** argv) {
    CLI::App app{"generalized Carmichael sets: membership, enumeration, searches"};
    app.require_subcommand(1);

    // ---- check ----
    u64 arg_n = 0;
    i64 arg_k = 1;
    std::string arg_variant = "ck";
    auto* check_cmd = app.add_subcommand("check", "decide membership of n in C_k / C'_k / N_k");
    check_cmd->add_option("--n", arg_n, "candidate")->required();
    check_cmd->add_option("--k", arg_k, "shift k")->required();
    check_cmd->add_option("--variant", arg_variant, "ck | cpk | nk");

    // ---- enumerate ----
    CommonOpts enum_opts;
    u64 arg_limit = 1000000;
    auto* enum_cmd = app.add_subcommand("enumerate", "list all members up to a limit");
    enum_cmd->add_option("--k", arg_k, "shift k")->required();
    enum_cmd->add_option("--variant", arg_variant, "ck | cpk | nk");
    enum_cmd->add_option("--limit", arg_limit, "upper bound X")->required();
    enum_opts.attach(enum_cmd);

    // ---- count ----
    CommonOpts count_opts;
    std::string arg_k_range, arg_checkpoints;
    bool arg_squarefree = false;
    auto* count_cmd = app.add_subcommand("count", "counting function at a limit or checkpoints");
    count_cmd->add_option("--k", arg_k, "single k");
    count_cmd->add_option("--k-range", arg_k_range, "sweep lo:hi");
    count_cmd->add_option("--variant", arg_variant, "ck | cpk | nk");
    count_cmd->add_option("--limit", arg_limit, "upper bound X");
    count_cmd->add_option("--checkpoints", arg_checkpoints, "lo:hi:step or comma list");
    count_cmd->add_flag("--squarefree", arg_squarefree, "restrict sweep to squarefree k");
    count_opts.attach(count_cmd);

    // ---- dcoef ----
    CommonOpts dcoef_opts;
    bool arg_pair_negative = false;
    auto* dcoef_cmd = app.add_subcommand("dcoef", "d_k(X) coefficients over a k sweep");
    dcoef_cmd->add_option("--k", arg_k, "single k");
    dcoef_cmd->add_option("--k-range", arg_k_range, "sweep lo:hi");
    dcoef_cmd->add_option("--limit", arg_limit, "upper bound X")->required();
    dcoef_cmd->add_flag("--squarefree", arg_squarefree, "restrict sweep to squarefree k");
    dcoef_cmd->add_flag("--pair-negative", arg_pair_negative, "also emit d_{-k}");
    dcoef_opts.attach(dcoef_cmd);

    // ---- ratio ----
    CommonOpts ratio_opts;
    auto* ratio_cmd = app.add_subcommand("ratio", "N_{-k}(X) / N_k(X)");
    ratio_cmd->add_option("--k", arg_k, "positive k")->required();
    ratio_cmd->add_option("--limit", arg_limit, "upper bound X")->required();
    ratio_opts.attach(ratio_cmd);

    // ---- search-lpq ----
    CommonOpts lpq_opts;
    u64 arg_l = 1;
    auto* lpq_cmd = app.add_subcommand("search-lpq", "complete l*p*q search up to a limit");
    lpq_cmd->add_option("--l", arg_l, "fixed cofactor l")->required();
    lpq_cmd->add_option("--k", arg_k, "shift k")->required();
    lpq_cmd->add_option("--limit", arg_limit, "upper bound X")->required();
    lpq_opts.attach(lpq_cmd);

    // ---- search-pinch ----
    CommonOpts pinch_opts;
    auto* pinch_cmd = app.add_subcommand("search-pinch", "X-free certificate search (l > k > 0)");
    pinch_cmd->add_option("--l", arg_l, "fixed cofactor l")->required();
    pinch_cmd->add_option("--k", arg_k, "shift k")->required();
    pinch_opts.attach(pinch_cmd);

    // ---- two-prime ----
    CommonOpts twop_opts;
    auto* twop_cmd = app.add_subcommand("two-prime", "elements with exactly two prime factors");
    twop_cmd->add_option("--k", arg_k, "shift k")->required();
    twop_opts.attach(twop_cmd);

    // ---- pqr ----
    CommonOpts pqr_opts;
    auto* pqr_cmd = app.add_subcommand("pqr", "p*q*r chains with p-1 | q-1, p-1 | r-1");
    pqr_cmd->add_option("--k", arg_k, "shift k")->required();
    pqr_cmd->add_option("--limit", arg_limit, "upper bound X");
    pqr_opts.attach(pqr_cmd);

    // ---- fixed-base ----
    CommonOpts fb_opts;
    i64 arg_a = 2;
    auto* fb_cmd = app.add_subcommand("fixed-base", "n with a^{n-k} == 1 (mod n)");
    fb_cmd->add_option("--a", arg_a, "base a >= 2")->required();
    fb_cmd->add_option("--k", arg_k, "shift k")->required();
    fb_cmd->add_option("--limit", arg_limit, "upper bound X")->required();
    fb_opts.attach(fb_cmd);

    // ---- witness ----
    CommonOpts wit_opts;
    auto* wit_cmd = app.add_subcommand("witness", "fixed-base witness m for k <= 0");
    wit_cmd->add_option("--a", arg_a, "base a >= 2")->required();
    wit_cmd->add_option("--k", arg_k, "shift k <= 0")->required();
    wit_opts.attach(wit_cmd);

    // ---- kp-family ----
    CommonOpts kp_opts;
    auto* kp_cmd = app.add_subcommand("kp-family", "k*p family members up to a limit");
    kp_cmd->add_option("--k", arg_k, "squarefree k > 0")->required();
    kp_cmd->add_option("--limit", arg_limit, "upper bound X")->required();
    kp_opts.attach(kp_cmd);

    // ---- chernick ----
    CommonOpts ch_opts;
    u64 arg_limit_n = 100;
    auto* ch_cmd = app.add_subcommand("chernick", "(6n+1)(12n+1)(18n+1) Carmichael products");
    ch_cmd->add_option("--limit-n", arg_limit_n, "upper bound on n")->required();
    ch_opts.attach(ch_cmd);

    // ---- lift ----
    CommonOpts lift_opts;
    auto* lift_cmd = app.add_subcommand("lift", "lift n in C_{-1} to |k|n in C_k (k < 0)");
    lift_cmd->add_option("--k", arg_k, "squarefree k < 0")->required();
    lift_cmd->add_option("--n", arg_n, "element of C_{-1}")->required();
    lift_opts.attach(lift_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage errors exit 2
    }

    if (check_cmd->parsed()) {
        const SetKind kind = parse_variant(arg_variant);
        MembershipVerdict v;
        switch (kind) {
            case SetKind::C: v = check_ck(arg_n, arg_k); break;
            case SetKind::Cprime: v = check_cprime(arg_n, arg_k); break;
            case SetKind::N: v = check_nk(arg_n, arg_k); break;
        }
        std::cout << "n=" << v.n << " variant=" << set_kind_name(kind) << " k=" << arg_k
                  << (v.member ? " member" : " non-member") << " lambda=" << v.lambda_n
                  << " residue=" << v.residue << " violation=" << violation_name(v.violation);
        if (v.witness_prime != 0) std::cout << " witness-prime=" << v.witness_prime;
        std::cout << "\n";
        if (v.member)
            std::cout << v.n << " is a member of " << set_kind_name(kind) << " with k=" << arg_k
                      << " (lambda(n)=" << v.lambda_n << " divides n-k)\n";
        else
            std::cout << v.n << " is not a member (" << violation_name(v.violation) << ")\n";
        return v.member ? 0 : 1;
    }

    if (enum_cmd->parsed()) {
        const SetVariant variant{parse_variant(arg_variant), arg_k};
        const auto elements =
            cached_enumeration(variant, arg_limit, enum_opts.sieve(), enum_opts.cache_dir());
        OutputSink sink;
        if (!sink.open(enum_opts.output)) return 2;
        *sink.os << csvio::enumeration_csv(variant, arg_limit, elements);
        return 0;
    }

    if (count_cmd->parsed()) {
        const SetVariant base{parse_variant(arg_variant), arg_k};
        OutputSink sink;
        if (!sink.open(count_opts.output)) return 2;
        if (!arg_checkpoints.empty()) {
            const auto checkpoints = parse_checkpoints(arg_checkpoints);
            csvio::write_banner(*sink.os, "count",
                                "variant=" + set_kind_name(base.kind) + " k=" +
                                    std::to_string(arg_k) + " checkpoints=" + arg_checkpoints);
            *sink.os << "X,count\n";
            const auto series = count_series(base, checkpoints, count_opts.sieve());
            for (const auto& [x, c] : series.points) *sink.os << x << ',' << c << '\n';
            return 0;
        }
        std::vector<i64> ks;
        if (!arg_k_range.empty()) {
            const auto [lo, hi] = parse_k_range(arg_k_range);
            for (i64 k = lo; k <= hi; ++k) {
                if (arg_squarefree && (k == 0 || !factorize(static_cast<u64>(std::abs(k))).squarefree()))
                    continue;
                ks.push_back(k);
            }
        } else {
            ks.push_back(arg_k);
        }
        csvio::write_banner(*sink.os, "count",
                            "variant=" + set_kind_name(base.kind) +
                                (arg_k_range.empty() ? " k=" + std::to_string(arg_k)
                                                     : " k-range=" + arg_k_range) +
                                " limit=" + std::to_string(arg_limit) +
                                (arg_squarefree ? " squarefree" : ""));
        *sink.os << "k,X,count,num_prime_factors_of_k\n";
        for (i64 k : ks) {
            const SetVariant variant{base.kind, k};
            const auto elements = cached_enumeration(variant, arg_limit, count_opts.sieve(),
                                                     count_opts.cache_dir());
            const unsigned pf = k == 0 ? 0 : count_prime_factors(static_cast<u64>(std::abs(k)));
            *sink.os << k << ',' << arg_limit << ',' << elements.size() << ',' << pf << '\n';
        }
        return 0;
    }

    if (dcoef_cmd->parsed()) {
        OutputSink sink;
        if (!sink.open(dcoef_opts.output)) return 2;
        std::vector<i64> ks;
        if (!arg_k_range.empty()) {
            const auto [lo, hi] = parse_k_range(arg_k_range);
            for (i64 k = lo; k <= hi; ++k) {
                if (arg_squarefree && (k == 0 || !factorize(static_cast<u64>(std::abs(k))).squarefree()))
                    continue;
                ks.push_back(k);
            }
        } else {
            ks.push_back(arg_k);
        }
        csvio::write_banner(*sink.os, "dcoef",
                            (arg_k_range.empty() ? "k=" + std::to_string(arg_k)
                                                 : "k-range=" + arg_k_range) +
                                " limit=" + std::to_string(arg_limit) +
                                (arg_squarefree ? " squarefree" : "") +
                                (arg_pair_negative ? " pair-negative" : ""));
        *sink.os << (arg_pair_negative ? "k,d_pos,d_neg,pf\n" : "k,d,pf\n");
        for (i64 k : ks) {
            const auto pos = cached_enumeration({SetKind::N, k}, arg_limit, dcoef_opts.sieve(),
                                                dcoef_opts.cache_dir());
            const unsigned pf = k == 0 ? 0 : count_prime_factors(static_cast<u64>(std::abs(k)));
            *sink.os << k << ',' << csvio::format_real(d_coefficient(arg_limit, pos.size()));
            if (arg_pair_negative) {
                const auto neg = cached_enumeration({SetKind::N, -k}, arg_limit,
                                                    dcoef_opts.sieve(), dcoef_opts.cache_dir());
                *sink.os << ',' << csvio::format_real(d_coefficient(arg_limit, neg.size()));
            }
            *sink.os << ',' << pf << '\n';
        }
        return 0;
    }

    if (ratio_cmd->parsed()) {
        OutputSink sink;
        if (!sink.open(ratio_opts.output)) return 2;
        const double r = ratio_series(arg_k, arg_limit, ratio_opts.sieve());
        csvio::write_banner(*sink.os, "ratio",
                            "k=" + std::to_string(arg_k) + " limit=" + std::to_string(arg_limit));
        *sink.os << "k,X,ratio\n"
                 << arg_k << ',' << arg_limit << ',' << csvio::format_real(r) << '\n';
        return 0;
    }

    auto emit_lpq_report = [&](OutputSink& sink, const std::string& cmd, const std::string& params,
                               const SearchReport& report) {
        csvio::write_banner(*sink.os, cmd, params);
        *sink.os << "row_type,n,l,k,p,q,alpha,beta,detail\n";
        for (const auto& w : report.warnings)
            *sink.os << "warning,,,,,,,," << warning_name(w.kind) << ": " << w.detail << '\n';
        for (const auto& s : report.solutions)
            *sink.os << "solution," << s.n << ',' << s.l << ',' << s.k << ',' << s.p << ',' << s.q
                     << ',' << s.alpha << ',' << s.beta << ",\n";
    };

    if (lpq_cmd->parsed()) {
        OutputSink sink;
        if (!sink.open(lpq_opts.output)) return 2;
        emit_lpq_report(sink, "search-lpq",
                        "l=" + std::to_string(arg_l) + " k=" + std::to_string(arg_k) +
                            " limit=" + std::to_string(arg_limit),
                        search_lpq(arg_l, arg_k, arg_limit));
        return 0;
    }

    if (pinch_cmd->parsed()) {
        OutputSink sink;
        if (!sink.open(pinch_opts.output)) return 2;
        emit_lpq_report(sink, "search-pinch",
                        "l=" + std::to_string(arg_l) + " k=" + std::to_string(arg_k),
                        search_lpq_pinch(arg_l, arg_k));
        return 0;
    }

    if (twop_cmd->parsed()) {
        OutputSink sink;
        if (!sink.open(twop_opts.output)) return 2;
        const auto result = two_prime_elements(arg_k);
        csvio::write_banner(*sink.os, "two-prime", "k=" + std::to_string(arg_k));
        *sink.os << "row_type,n\n";
        if (result.infinite_family)
            *sink.os << "infinite-family,\n";
        else
            for (u64 n : result.elements) *sink.os << "element," << n << '\n';
        return 0;
    }

    if (pqr_cmd->parsed()) {
        OutputSink sink;
        if (!sink.open(pqr_opts.output)) return 2;
        const auto report = pqr_chain_search(arg_k, arg_limit);
        csvio::write_banner(*sink.os, "pqr",
                            "k=" + std::to_string(arg_k) + " limit=" + std::to_string(arg_limit));
        *sink.os << "row_type,n,p,q,r,detail\n";
        for (const auto& w : report.warnings)
            *sink.os << "warning,,,,," << warning_name(w.kind) << ": " << w.detail << '\n';
        for (const auto& s : report.solutions)
            *sink.os << "solution," << s.n << ',' << s.p << ',' << s.q << ',' << s.r << ",\n";
        return 0;
    }

    if (fb_cmd->parsed()) {
        OutputSink sink;
        if (!sink.open(fb_opts.output)) return 2;
        const auto ns = enumerate_fixed_base(arg_a, arg_k, arg_limit);
        csvio::write_banner(*sink.os, "fixed-base",
                            "a=" + std::to_string(arg_a) + " k=" + std::to_string(arg_k) +
                                " limit=" + std::to_string(arg_limit));
        *sink.os << "n,is_prime\n";
        for (u64 n : ns) *sink.os << n << ',' << (is_prime(n) ? 1 : 0) << '\n';
        return 0;
    }

    if (wit_cmd->parsed()) {
        const auto result = kiss_phong_witness(arg_a, arg_k);
        if (result.impossible) {
            std::cout << "impossible: no n > 1 satisfies the congruence for (k,a)=("
                      << arg_k << ',' << arg_a << ")\n";
            return 1;
        }
        std::cout << "witness m=" << *result.problem.witness_m
                  << " order=" << *result.problem.witness_order << " for a=" << arg_a
                  << " k=" << arg_k << "\n";
        return 0;
    }

    if (kp_cmd->parsed()) {
        OutputSink sink;
        if (!sink.open(kp_opts.output)) return 2;
        if (arg_k <= 0) {
            std::cerr << "error: kp-family requires k > 0\n";
            return 2;
        }
        const auto family = kp_family(static_cast<u64>(arg_k), arg_limit);
        csvio::write_banner(*sink.os, "kp-family",
                            "k=" + std::to_string(arg_k) + " limit=" + std::to_string(arg_limit));
        *sink.os << "n,p\n";
        for (u64 n : family) *sink.os << n << ',' << n / static_cast<u64>(arg_k) << '\n';
        return 0;
    }

    if (ch_cmd->parsed()) {
        OutputSink sink;
        if (!sink.open(ch_opts.output)) return 2;
        csvio::write_banner(*sink.os, "chernick", "limit-n=" + std::to_string(arg_limit_n));
        *sink.os << "n,product\n";
        for (const auto& t : chernick(arg_limit_n)) *sink.os << t.n << ',' << t.product << '\n';
        return 0;
    }

    if (lift_cmd->parsed()) {
        const auto result = lift_from_c_minus_1(arg_k, arg_n);
        if (result.value) {
            std::cout << "lifted: " << *result.value << " in C_k for k=" << arg_k << "\n";
            return 0;
        }
        const char* reason = result.failure == LiftFailure::not_in_c_minus_1 ? "n not in C_{-1}"
                             : result.failure == LiftFailure::congruence
                                 ? "n fails the congruence n == -1 (mod lambda(|k|)/gcd)"
                                 : "gcd(n, |k|) > 1";
        std::cout << "not liftable: " << reason << "\n";
        return 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
