// Run configuration: `key = value` text files with `#` comments, overridden
// by command-line --set pairs. Unknown keys and malformed or non-finite
// numbers are rejected with the offending key and line.
#pragma once

#include "netecon/grid_search.hpp"
#include "netecon/market.hpp"

#include <string>
#include <utility>
#include <vector>

namespace netecon {

enum class OutputFormat { text, csv };

struct RunConfig {
    MarketParams market;
    OptimizerConfig optimizer;
    std::string out_dir = ".";
    OutputFormat format = OutputFormat::text;
};

/// Parses a config file body (may be empty) and applies flag overrides on
/// top. Throws std::runtime_error naming the key and line on any problem.
RunConfig parse_config(const std::string& file_text,
                       const std::vector<std::pair<std::string, std::string>>& flag_overrides);

/// Emits every key in a fixed order; parse_config(serialize(cfg), {}) == cfg.
std::string serialize(const RunConfig& cfg);

bool operator==(const RunConfig& a, const RunConfig& b);

} // namespace netecon
