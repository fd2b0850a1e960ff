#include "netecon/scenario.hpp"

#include "netecon/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace netecon {

ScenarioResult solve_scenario(const MarketParams& params, ScenarioKind kind,
                              const OptimizerConfig& cfg) {
    return isp_optimize(params, regime_of(kind), mode_of(kind), cfg);
}

MetricComparison rank_metric(const std::string& name, const std::array<double, 4>& values,
                             double tie_tol_rel) {
    MetricComparison cmp;
    cmp.name = name;
    cmp.value = values;
    std::array<int, 4> order = {0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return values[a] > values[b];
    });
    int group = 0;
    for (int pos = 0; pos < 4; ++pos) {
        if (pos > 0 && !rel_close(values[order[pos]], values[order[pos - 1]], tie_tol_rel)) {
            ++group;
        }
        cmp.group[order[pos]] = group;
        cmp.position[order[pos]] = pos;
    }
    return cmp;
}

const MetricComparison& metric(const ComparisonTable& table, const std::string& name) {
    for (const MetricComparison& m : table.metrics) {
        if (m.name == name) return m;
    }
    throw std::invalid_argument("unknown comparison metric: " + name);
}

ComparisonTable compare_scenarios(const MarketParams& params, const OptimizerConfig& cfg,
                                  double tie_tol_rel) {
    ComparisonTable table;
    table.tie_tol_rel = tie_tol_rel;
    for (std::size_t i = 0; i < kAllScenarios.size(); ++i) {
        table.results[i] = solve_scenario(params, kAllScenarios[i], cfg);
    }
    auto values_of = [&](auto field) {
        std::array<double, 4> v{};
        for (std::size_t i = 0; i < 4; ++i) v[i] = field(table.results[i].outcome);
        return v;
    };
    table.metrics[0] = rank_metric(
        "profit_isp", values_of([](const Outcome& o) { return o.access_isp_profit; }),
        table.tie_tol_rel);
    table.metrics[1] = rank_metric(
        "profit_platform", values_of([](const Outcome& o) { return o.platform_profit; }),
        table.tie_tol_rel);
    table.metrics[2] = rank_metric(
        "CS", values_of([](const Outcome& o) { return o.consumer_surplus; }), table.tie_tol_rel);
    table.metrics[3] = rank_metric(
        "CPS", values_of([](const Outcome& o) { return o.cp_surplus; }), table.tie_tol_rel);
    table.metrics[4] = rank_metric(
        "SW", values_of([](const Outcome& o) { return o.social_welfare; }), table.tie_tol_rel);
    return table;
}

MarketParams with_parameter(const MarketParams& params, const std::string& name, double value) {
    MarketParams out = params;
    if (name == "n_users") out.n_users_total = value;
    else if (name == "n_cps") out.n_cps_total = value;
    else if (name == "r_u") out.standalone_user = value;
    else if (name == "r_c") out.standalone_cp = value;
    else if (name == "delta") out.cp_to_user_effect = value;
    else if (name == "gamma") out.ad_revenue_per_user = value;
    else if (name == "a") out.cp_isp_price = value;
    else throw std::invalid_argument("unknown sweep parameter: " + name);
    return out;
}

namespace {

std::string sanitize_flag(std::string text) {
    for (char& ch : text) {
        if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
    }
    return text;
}

} // namespace

SweepResult sweep(const MarketParams& params, const SweepSpec& spec,
                  const std::vector<ScenarioKind>& kinds, const OptimizerConfig& cfg) {
    if (!(spec.lo < spec.hi)) {
        throw std::invalid_argument("sweep: lo must be < hi");
    }
    if (spec.count < 2) {
        throw std::invalid_argument("sweep: need at least 2 points");
    }
    std::vector<ScenarioKind> ordered;
    for (ScenarioKind kind : kAllScenarios) {
        if (std::find(kinds.begin(), kinds.end(), kind) != kinds.end()) {
            ordered.push_back(kind);
        }
    }
    if (ordered.empty()) {
        throw std::invalid_argument("sweep: no scenarios requested");
    }

    SweepResult result;
    result.rows.reserve(static_cast<std::size_t>(spec.count) * ordered.size());
    for (int i = 0; i < spec.count; ++i) {
        const double value =
            spec.lo + (spec.hi - spec.lo) * static_cast<double>(i) / (spec.count - 1);
        const MarketParams point_params = with_parameter(params, spec.parameter, value);
        for (ScenarioKind kind : ordered) {
            SweepRow row;
            row.parameter = spec.parameter;
            row.value = value;
            try {
                row.result = solve_scenario(point_params, kind, cfg);
                row.flag = sanitize_flag(row.result.diagnostic);
            } catch (const std::exception& err) {
                row.result = ScenarioResult{};
                row.result.kind = kind;
                row.flag = sanitize_flag(std::string("error: ") + err.what());
            }
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

} // namespace netecon
