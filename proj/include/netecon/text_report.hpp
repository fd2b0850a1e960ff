// Human-readable structured-text reports and gnuplot script emission.
#pragma once

#include "netecon/scenario.hpp"

#include <string>
#include <vector>

namespace netecon {

std::string format_scenario_text(const MarketParams& params, const ScenarioResult& result);

/// Per-metric ranking table in the "1st" / "2nd-3rd" tie-span notation plus
/// the raw values.
std::string format_comparison_text(const ComparisonTable& table);

/// Metrics that get one plot script each per sweep.
inline const char* const kPlotMetrics[] = {"profit_isp", "profit_platform", "n_u", "n_c",
                                           "CS", "CPS", "SW"};

/// One gnuplot script plotting `metric` against the swept parameter, one
/// curve per scenario, reading `csv_name` from the script's directory.
std::string plot_script(const std::string& csv_name, const std::string& param_name,
                        const std::string& metric, const std::vector<ScenarioKind>& kinds);

} // namespace netecon
