// Fulfilled-expectations participation: both sides' joining decisions form a
// clipped linear fixed-point system. This module enumerates every fixed point
// across the nine clipping-regime combinations and applies a deterministic
// selection rule.
#pragma once

#include "netecon/market.hpp"

#include <vector>

namespace netecon {

inline constexpr double kFixedPointResidualTol = 1e-9;
inline constexpr double kFixedPointDistinctTol = 1e-9;
inline constexpr double kSingularTol = 1e-12;

/// All fixed points of the clipped participation map, sorted descending by
/// (subscribers, joined_cps). `degenerate` marks the continuum case where the
/// doubly-interior system is singular but consistent; the two segment
/// endpoints stand in for the continuum.
struct FixedPointSet {
    std::vector<Participation> points;
    bool degenerate = false;
};

/// One application of the joint participation map at a guessed profile:
///   n_u' = N_u * clip01(r_u - beta + (delta - b) * n_c)
///   n_c' = N_c * clip01(r_c - alpha + (gamma - c - a) * n_u)
Participation clipped_map(const MarketParams& params, const PriceVector& prices,
                          const Participation& guess);

FixedPointSet enumerate_fixed_points(const MarketParams& params, const PriceVector& prices);

/// The selected equilibrium: the first element of the enumeration's
/// descending order, i.e. the profile with maximal subscribers (ties broken
/// by maximal joined CPs). Whenever a componentwise-maximal fixed point
/// exists it is exactly this one. Throws std::logic_error if enumeration
/// comes back empty, which the regime case analysis rules out.
Participation solve_participation(const MarketParams& params, const PriceVector& prices);

} // namespace netecon
