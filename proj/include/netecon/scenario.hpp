// Scenario runner: the four regulatory scenarios, the per-metric comparison
// table with tie groups, and single-parameter comparative-statics sweeps.
#pragma once

#include "netecon/isp.hpp"

#include <array>
#include <string>
#include <vector>

namespace netecon {

inline constexpr std::array<ScenarioKind, 4> kAllScenarios = {
    ScenarioKind::pnn, ScenarioKind::pn, ScenarioKind::ann, ScenarioKind::an};

ScenarioResult solve_scenario(const MarketParams& params, ScenarioKind kind,
                              const OptimizerConfig& cfg);

/// One metric compared across the four scenarios. `value` and `group` are
/// indexed by kAllScenarios order; group ids start at 0 for the top tie group
/// and increase downward, with equality chained at the relative tolerance.
struct MetricComparison {
    std::string name;
    std::array<double, 4> value{};
    std::array<int, 4> group{};
    std::array<int, 4> position{}; // 0-based rank in the descending order
};

struct ComparisonTable {
    std::array<ScenarioResult, 4> results; // in kAllScenarios order
    std::array<MetricComparison, 5> metrics; // profit_isp, profit_platform, CS, CPS, SW
    double tie_tol_rel = 1e-3;
};

const MetricComparison& metric(const ComparisonTable& table, const std::string& name);

ComparisonTable compare_scenarios(const MarketParams& params, const OptimizerConfig& cfg,
                                  double tie_tol_rel = 1e-3);

/// Builds one metric's tie-grouped ranking; exposed for reuse in reports.
MetricComparison rank_metric(const std::string& name, const std::array<double, 4>& values,
                             double tie_tol_rel);

struct SweepSpec {
    std::string parameter; // one of the market parameter names
    double lo = 0.0;
    double hi = 1.0;
    int count = 2;
};

inline const char* const kSweepParameterNames[] = {"n_users", "n_cps", "r_u", "r_c",
                                                   "delta", "gamma", "a"};

/// Returns a copy of `params` with one named parameter replaced; throws
/// std::invalid_argument for unknown names.
MarketParams with_parameter(const MarketParams& params, const std::string& name, double value);

struct SweepRow {
    std::string parameter;
    double value = 0.0;
    ScenarioResult result;
    std::string flag; // empty when clean; diagnostics or errors otherwise
};

struct SweepResult {
    std::vector<SweepRow> rows; // ordered by grid index, then scenario order
};

/// Evaluates every requested scenario on an evenly spaced grid of the swept
/// parameter. Failures at single points flag the row and the sweep continues.
SweepResult sweep(const MarketParams& params, const SweepSpec& spec,
                  const std::vector<ScenarioKind>& kinds, const OptimizerConfig& cfg);

} // namespace netecon
