#include "netecon/isp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace netecon {

const char* to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::pnn: return "pnn";
        case ScenarioKind::pn: return "pn";
        case ScenarioKind::ann: return "ann";
        case ScenarioKind::an: return "an";
    }
    return "?";
}

bool scenario_from_string(const std::string& name, ScenarioKind& out) {
    if (name == "pnn") { out = ScenarioKind::pnn; return true; }
    if (name == "pn") { out = ScenarioKind::pn; return true; }
    if (name == "ann") { out = ScenarioKind::ann; return true; }
    if (name == "an") { out = ScenarioKind::an; return true; }
    return false;
}

PlatformMode mode_of(ScenarioKind kind) {
    return (kind == ScenarioKind::pnn || kind == ScenarioKind::pn) ? PlatformMode::present
                                                                   : PlatformMode::absent;
}

NeutralityRegime regime_of(ScenarioKind kind) {
    return (kind == ScenarioKind::pnn || kind == ScenarioKind::ann) ? NeutralityRegime::non_neutral
                                                                    : NeutralityRegime::neutral;
}

ScenarioKind kind_of(PlatformMode mode, NeutralityRegime regime) {
    if (mode == PlatformMode::present) {
        return regime == NeutralityRegime::non_neutral ? ScenarioKind::pnn : ScenarioKind::pn;
    }
    return regime == NeutralityRegime::non_neutral ? ScenarioKind::ann : ScenarioKind::an;
}

namespace {

// Outer grid scan of the ISP profit with the lean nested platform response;
// returns the retained top (b, c) cells.
std::vector<std::array<double, 2>> scan_isp_prices(const MarketParams& params, PlatformMode mode,
                                                   const OptimizerConfig& cfg, int dim) {
    const double K = search_halfwidth_for(params, cfg);
    auto isp_profit_nested = [&](const double* x) {
        const double b = x[0];
        const double c = (dim == 2) ? x[1] : 0.0;
        const PlatformReply reply = platform_best_response_nested(params, b, c, mode, cfg);
        return (b + c) * reply.part.subscribers * reply.part.joined_cps;
    };

    GridSettings outer;
    outer.points_per_axis = cfg.outer_coarse_grid;
    outer.refine_rounds = cfg.outer_refine_rounds;
    outer.top_cells = cfg.outer_top_cells;
    outer.zoom_factor = cfg.zoom_factor;
    outer.value_tie_tol = cfg.value_tie_tol;
    outer.threads = resolve_threads(cfg);

    const std::vector<GridPoint> top =
        maximize_on_box_impl(isp_profit_nested, dim, {-K, -K}, {K, K}, outer);
    std::vector<std::array<double, 2>> cells;
    cells.reserve(top.size());
    for (const GridPoint& cell : top) {
        cells.push_back({cell.x[0], dim == 2 ? cell.x[1] : 0.0});
    }
    return cells;
}

// Coordinate-descent polish with step halving, starting from the final grid
// resolution. The profit profile has kinks where a participation constraint
// starts to bind, so the search only needs locally better points, not
// derivatives. Grid quantization of roughly 1e-4 in prices would otherwise
// leak into per-agent values scaled by the market masses.
template <class F>
std::array<double, 2> polish_cell(F&& objective, int dim, std::array<double, 2> x, double K,
                                  double initial_step) {
    double value = objective(x.data());
    double h = initial_step;
    const double h_min = 1e-9 * std::max(1.0, K);
    while (h > h_min) {
        bool moved = false;
        for (int axis = 0; axis < dim; ++axis) {
            for (double dir : {+1.0, -1.0}) {
                std::array<double, 2> probe = x;
                probe[axis] = std::clamp(probe[axis] + dir * h, -K, K);
                const double v = objective(probe.data());
                if (v > value) {
                    value = v;
                    x = probe;
                    moved = true;
                }
            }
        }
        if (!moved) h *= 0.5;
    }
    return x;
}

} // namespace

ScenarioResult isp_optimize(const MarketParams& params, NeutralityRegime regime,
                            PlatformMode mode, const OptimizerConfig& cfg) {
    validate(params);
    validate(cfg);

    const double K = search_halfwidth_for(params, cfg);
    double final_step = 2.0 * K / (cfg.outer_coarse_grid - 1);
    for (int r = 0; r < cfg.outer_refine_rounds; ++r) final_step *= cfg.zoom_factor;

    auto polished_cells = [&](int dim) {
        auto objective = [&](const double* x) {
            const double b = x[0];
            const double c = (dim == 2) ? x[1] : 0.0;
            const PlatformReply reply = platform_best_response_nested(params, b, c, mode, cfg);
            return (b + c) * reply.part.subscribers * reply.part.joined_cps;
        };
        std::vector<std::array<double, 2>> cells = scan_isp_prices(params, mode, cfg, dim);
        for (std::array<double, 2>& cell : cells) {
            cell = polish_cell(objective, dim, cell, K, final_step);
            if (dim == 1) cell[1] = 0.0;
        }
        return cells;
    };

    const int dim = (regime == NeutralityRegime::non_neutral) ? 2 : 1;
    std::vector<std::array<double, 2>> cells = polished_cells(dim);
    if (dim == 2) {
        // The neutral strategy set is a slice of the non-neutral one; seeding
        // the final pool with the c = 0 restriction's optimum guarantees the
        // reported profit never falls below the neutral solution.
        for (const std::array<double, 2>& cell : polished_cells(1)) {
            cells.push_back(cell);
        }
    }

    // Re-score the retained cells with the full platform search; the winner's
    // stored reply is exactly platform_best_response at the reported prices.
    double best_value = -std::numeric_limits<double>::infinity();
    std::array<double, 2> best_bc{0.0, 0.0};
    PlatformReply best_reply;
    bool have = false;
    for (const std::array<double, 2>& bc : cells) {
        const PlatformReply reply = platform_best_response(params, bc[0], bc[1], mode, cfg);
        const double value = (bc[0] + bc[1]) * reply.part.subscribers * reply.part.joined_cps;
        if (!have || value > best_value + cfg.value_tie_tol ||
            (value >= best_value - cfg.value_tie_tol && bc < best_bc)) {
            have = true;
            best_value = value;
            best_bc = bc;
            best_reply = reply;
        }
    }
    if (!have) {
        best_reply = platform_best_response(params, 0.0, 0.0, mode, cfg);
        best_bc = {0.0, 0.0};
    }

    ScenarioResult result;
    result.kind = kind_of(mode, regime);
    result.prices = best_reply.prices;
    result.participation = best_reply.part;
    result.outcome = welfare(params, result.prices, result.participation);
    result.diagnostic = best_reply.diagnostic;
    return result;
}

} // namespace netecon
