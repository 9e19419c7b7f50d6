#include "gcarm/csvio.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gcarm::csvio {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_banner(std::ostream& os, const std::string& command, const std::string& params) {
    os << "# gcarm v1 " << command;
    if (!params.empty()) os << ' ' << params;
    os << '\n';
}

std::string cache_filename(SetVariant variant, u64 X) {
    return set_kind_name(variant.kind) + "_" + std::to_string(variant.k) + "_" +
           std::to_string(X) + ".csv";
}

std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("GCARM_CACHE_DIR"); env && *env) return env;
    return {};
}

std::string enumeration_csv(SetVariant variant, u64 X, const std::vector<u64>& elements) {
    std::ostringstream os;
    write_banner(os, "enumerate",
                 "variant=" + set_kind_name(variant.kind) + " k=" + std::to_string(variant.k) +
                     " limit=" + std::to_string(X));
    os << "n\n";
    for (u64 n : elements) os << n << '\n';
    return os.str();
}

std::optional<std::vector<u64>> load_cached_elements(const std::filesystem::path& dir,
                                                     SetVariant variant, u64 X) {
    if (dir.empty()) return std::nullopt;
    std::ifstream in(dir / cache_filename(variant, X));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# gcarm v1 enumerate", 0) != 0)
        return std::nullopt;
    if (!std::getline(in, line) || line != "n") return std::nullopt;
    std::vector<u64> elements;
    u64 prev = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        char* end = nullptr;
        const unsigned long long v = std::strtoull(line.c_str(), &end, 10);
        if (end == line.c_str() || *end != '\0') return std::nullopt;  // corrupt row
        if (v <= prev) return std::nullopt;  // must be strictly increasing
        prev = v;
        elements.push_back(v);
    }
    return elements;
}

void store_cached_elements(const std::filesystem::path& dir, SetVariant variant, u64 X,
                           const std::vector<u64>& elements) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / cache_filename(variant, X), std::ios::binary);
    out << enumeration_csv(variant, X, elements);
}

}  // namespace gcarm::csvio
