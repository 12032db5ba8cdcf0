#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qv/record.hpp"

namespace qv {

enum class ReportFormat { text, json };

/// One family's parameter grid. Numeric keys hold value lists (already
/// expanded from ranges); enum keys hold symbolic values such as variants.
struct FamilyGrid {
    std::string family;
    std::map<std::string, std::vector<long>> nums;
    std::map<std::string, std::vector<std::string>> enums;
};

struct SuiteConfig {
    std::vector<FamilyGrid> families;
    std::uint64_t sample_seed = 1;
    int degree_bound = 4;
    int parallelism = 1;
    ReportFormat output_format = ReportFormat::text;
};

struct SuiteReport {
    std::vector<VerificationRecord> records;  // sorted by (family, params)
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::chrono::duration<double> wall_time{0};

    bool all_pass() const { return failed == 0; }
};

/// Parse a JSON config document. "families" may be an object keyed by family
/// name or an array of {"family": ..., <params>...} tables (the array form
/// allows several grids for one family). Numeric parameters accept a single
/// integer, an explicit list, or an inclusive "lo..hi" range string.
SuiteConfig parse_config(const std::string& json_text);

/// Load and parse a config file.
SuiteConfig load_config_file(const std::string& path);

/// Grid names understood by the runner.
std::vector<std::string> known_families();

/// The full verification grid (what configs/full.json describes).
SuiteConfig default_config();

/// Expand and run every (family, parameter) cell; deterministic given the
/// config (including the seed), at any parallelism level. Individual record
/// failures never abort the suite.
SuiteReport run_suite(const SuiteConfig& config);

/// Deterministic report bytes: no wall-clock content, fixed key order,
/// newline-terminated. Failures carry both exact sides.
std::string emit_report(const SuiteReport& report, ReportFormat format);

}  // namespace qv
