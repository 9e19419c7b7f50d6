#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gcarm/membership.hpp"

namespace gcarm::csvio {

/// Reals with 12 significant digits, integers in plain decimal.
std::string format_real(double v);

/// Self-describing first line: "# gcarm v1 <command> <parameters>".
void write_banner(std::ostream& os, const std::string& command, const std::string& params);

/// Cache layout: one CSV per (variant, k, X) named variant_k_X.csv.
std::string cache_filename(SetVariant variant, u64 X);

/// --cache-dir flag wins over GCARM_CACHE_DIR; empty when neither is set.
std::filesystem::path resolve_cache_dir(const std::string& flag_value);

/// Reload a cached enumeration; nullopt on missing or corrupt file
/// (caller rebuilds and warns).
std::optional<std::vector<u64>> load_cached_elements(const std::filesystem::path& dir,
                                                     SetVariant variant, u64 X);

void store_cached_elements(const std::filesystem::path& dir, SetVariant variant, u64 X,
                           const std::vector<u64>& elements);

/// The exact byte content of an enumeration CSV (also the cache format).
std::string enumeration_csv(SetVariant variant, u64 X, const std::vector<u64>& elements);

}  // namespace gcarm::csvio
