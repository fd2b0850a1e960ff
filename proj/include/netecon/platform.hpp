// Stage-2 best response: the platform picks its two-sided price (alpha, beta)
// against fixed ISP prices. Within each participation-clipping regime the
// induced masses are affine in (alpha, beta), so platform revenue is
// piecewise quadratic; exact regime candidates (stationary points, boundary
// maximizers, polygon vertices) are cross-checked against a zooming grid.
#pragma once

#include "netecon/grid_search.hpp"
#include "netecon/market.hpp"

#include <array>
#include <string>
#include <vector>

namespace netecon {

enum class PlatformMode { present, absent };

struct PlatformReply {
    PriceVector prices;   // chosen alpha/beta with the given b/c carried along
    Participation part;   // selected equilibrium at those prices
    double profit = 0.0;  // alpha*n_c + beta*n_u
    std::string diagnostic; // set when candidate and grid optima disagree
};

/// Exact (alpha, beta) candidates from the piecewise-quadratic structure at
/// ISP prices (b, c), restricted to the box [-halfwidth, +halfwidth]^2,
/// filtered by each regime's validity inequalities and deduplicated.
/// The doubly-interior regime is skipped when its 2x2 system is singular.
std::vector<std::array<double, 2>> enumerate_platform_candidates(const MarketParams& params,
                                                                 double isp_user_price,
                                                                 double isp_cp_price,
                                                                 double halfwidth);

/// Full best response: candidate enumeration and the configured refined grid,
/// each scored by the true (selected-equilibrium) revenue; the better point
/// wins, ties resolved toward lexicographically smaller (alpha, beta). In
/// `absent` mode both fees are zero. A diagnostic is attached when the two
/// methods disagree by more than 0.1% in value after full refinement.
PlatformReply platform_best_response(const MarketParams& params, double isp_user_price,
                                     double isp_cp_price, PlatformMode mode,
                                     const OptimizerConfig& cfg);

/// Same search with the lean nested-grid settings and no disagreement
/// diagnostic; used for the inner evaluations of the ISP-stage scan.
PlatformReply platform_best_response_nested(const MarketParams& params, double isp_user_price,
                                            double isp_cp_price, PlatformMode mode,
                                            const OptimizerConfig& cfg);

/// True platform revenue at one price point, under the selected equilibrium.
double platform_profit_at(const MarketParams& params, double isp_user_price, double isp_cp_price,
                          double platform_cp_fee, double platform_user_fee);

} // namespace netecon
