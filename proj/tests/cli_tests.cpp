#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
    const char* b = std::getenv("GCARM_BIN");
    REQUIRE_MESSAGE(b != nullptr, "GCARM_BIN must point at the gcarm binary");
    return b;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = bin() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

std::filesystem::path fresh_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("check exit codes") {
    CHECK(run("check --n 561 --k 1 --variant ck").exit_code == 0);
    CHECK(run("check --n 9 --k 1 --variant ck").exit_code == 1);
    CHECK(run("check --n 4 --k 2 --variant cpk").exit_code == 0);
    CHECK(run("check --n notanumber --k 1").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
    CHECK(run("check").exit_code == 2);
}

TEST_CASE("check reports evidence") {
    const auto member = run("check --n 561 --k 1 --variant ck");
    CHECK(member.output.find("lambda=80") != std::string::npos);
    const auto nonmember = run("check --n 9 --k 1 --variant ck");
    CHECK(nonmember.output.find("squarefree") != std::string::npos);
}

TEST_CASE("enumerate CSV banner and determinism") {
    const auto a = run("enumerate --variant ck --k 0 --limit 10000");
    CHECK(a.exit_code == 0);
    CHECK(a.output.rfind("# gcarm v1 enumerate variant=ck k=0 limit=10000", 0) == 0);
    const auto b = run("enumerate --variant ck --k 0 --limit 10000 --threads 4");
    CHECK(a.output == b.output);
}

TEST_CASE("cache reuse is byte-identical") {
    const auto dir = fresh_dir("gcarm_cli_cache");
    const std::string base = "enumerate --variant ck --k -11 --limit 400000 --cache-dir " +
                             dir.string();
    const auto first = run(base);
    CHECK(std::filesystem::exists(dir / "ck_-11_400000.csv"));
    const auto second = run(base);  // now served from cache
    CHECK(first.output == second.output);

    // corrupt the cache; the command must rebuild and still produce the same bytes
    {
        std::ofstream out(dir / "ck_-11_400000.csv");
        out << "broken\n";
    }
    const auto third = run(base);
    CHECK(first.output == third.output);
}

TEST_CASE("count with checkpoints emits one row per checkpoint") {
    const auto r = run("count --variant cpk --k 0 --checkpoints 1e5:8e5:1e5");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 2 + 8);  // banner + header + 8 rows
}

TEST_CASE("count sweep schema") {
    const auto r = run("count --variant nk --k-range 2:20 --squarefree --limit 20000");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("k,X,count,num_prime_factors_of_k") != std::string::npos);
    CHECK(r.output.find("\n4,") == std::string::npos);  // 4 filtered out (not squarefree)
}

TEST_CASE("dcoef pair-negative schema") {
    const auto r = run("dcoef --k-range 2:10 --squarefree --limit 100000 --pair-negative");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("k,d_pos,d_neg,pf") != std::string::npos);
}

TEST_CASE("search commands") {
    const auto lpq = run("search-lpq --l 7 --k 1 --limit 10000");
    CHECK(lpq.output.find("solution,1729,7,1,13,19,11,5,") != std::string::npos);

    const auto fb = run("fixed-base --a 2 --k 0 --limit 1000000");
    CHECK(fb.exit_code == 0);
    CHECK(count_lines(fb.output) == 3);  // banner + header + the single n=1 row

    const auto tp = run("two-prime --k 5");
    CHECK(tp.output.find("infinite-family") != std::string::npos);

    const auto warn = run("search-lpq --l 3 --k 3 --limit 1000");
    CHECK(warn.exit_code == 0);
    CHECK(warn.output.find("warning") != std::string::npos);
}

TEST_CASE("unwritable output exits 2") {
    CHECK(run("enumerate --variant ck --k 0 --limit 100 -o /nonexistent_dir/x.csv").exit_code == 2);
}
