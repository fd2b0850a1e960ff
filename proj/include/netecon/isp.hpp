// Stage-1 optimization: the access ISP commits to its prices first,
// anticipating the platform's best response and the induced participation.
// Under neutrality the CP-side price is pinned to zero.
#pragma once

#include "netecon/market.hpp"
#include "netecon/platform.hpp"

#include <string>

namespace netecon {

enum class NeutralityRegime { neutral, non_neutral };

/// The four regulatory scenarios: platform present/absent crossed with the
/// ISP neutral/non-neutral.
enum class ScenarioKind { pnn, pn, ann, an };

const char* to_string(ScenarioKind kind);
bool scenario_from_string(const std::string& name, ScenarioKind& out);
PlatformMode mode_of(ScenarioKind kind);
NeutralityRegime regime_of(ScenarioKind kind);
ScenarioKind kind_of(PlatformMode mode, NeutralityRegime regime);

struct ScenarioResult {
    ScenarioKind kind = ScenarioKind::an;
    PriceVector prices;
    Participation participation;
    Outcome outcome;
    std::string diagnostic; // optimizer non-convergence reports, empty when clean
};

/// Leader optimization of (b, c) -- b alone under neutrality -- where every
/// probed price pair is scored by the follower's reply and the selected
/// participation equilibrium. The outer scan uses the lean nested platform
/// settings; the retained top cells are then re-scored with the full platform
/// search and the winner is reported (ties toward lexicographically smaller
/// (b, c)). The stored platform reply is exactly platform_best_response at
/// the returned prices.
ScenarioResult isp_optimize(const MarketParams& params, NeutralityRegime regime,
                            PlatformMode mode, const OptimizerConfig& cfg);

} // namespace netecon
