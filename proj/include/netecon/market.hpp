// Core market model: exogenous parameters, strategic prices, participation
// state and the closed-form utility / profit / revenue / welfare expressions
// of the two-sided users-platform-ISP market.
#pragma once

#include <string>
#include <vector>

namespace netecon {

/// Exogenous market environment.
///
/// Users and content providers (CPs) are non-atomic masses with outside
/// options drawn uniformly from [0, 1]. Cross-group effects are linear:
/// each joined CP adds `cp_to_user_effect` to a subscriber's utility, and
/// each subscriber is worth `ad_revenue_per_user` to a CP.
struct MarketParams {
    double n_users_total = 10.0;      // N_u, total user mass
    double n_cps_total = 1.0;         // N_c, total CP mass
    double standalone_user = 0.9;     // r_u, user value of the bundled service alone
    double standalone_cp = 0.9;       // r_c, CP value of the bundled service alone
    double cp_to_user_effect = 2.0;   // delta, utility per joined CP
    double ad_revenue_per_user = 4.0; // gamma, CP ad revenue per subscriber
    double cp_isp_price = 0.5;        // a, what a CP pays its own ISP per subscriber
};

/// Throws std::invalid_argument when a hard invariant is violated
/// (non-positive masses, non-finite fields).
void validate(const MarketParams& params);

/// Soft checks: the model stays well-defined outside the usual calibration,
/// but values such as standalone worth beyond [0, 1] deserve a warning.
std::vector<std::string> calibration_warnings(const MarketParams& params);

/// The four strategic prices. Negative values are legal on either side.
struct PriceVector {
    double platform_cp_fee = 0.0;   // alpha, platform fee per joined CP
    double platform_user_fee = 0.0; // beta, platform fee per subscriber
    double isp_user_price = 0.0;    // b, access-ISP price per subscriber per CP
    double isp_cp_price = 0.0;      // c, access-ISP price per CP per subscriber
};

void validate(const PriceVector& prices);

enum class Regime { zero, interior, full };

const char* to_string(Regime regime);

/// A fulfilled-expectations participation profile: masses of subscribers and
/// joined CPs, each tagged with the clipping regime it sits in.
struct Participation {
    double subscribers = 0.0; // n_u in [0, N_u]
    double joined_cps = 0.0;  // n_c in [0, N_c]
    Regime user_regime = Regime::zero;
    Regime cp_regime = Regime::zero;
};

/// Per-agent values and aggregate surplus at a participation profile.
struct Outcome {
    double user_utility = 0.0;      // u for a subscriber
    double cp_profit = 0.0;         // per-CP profit for a joined CP
    double platform_profit = 0.0;   // alpha*n_c + beta*n_u
    double access_isp_profit = 0.0; // (b+c)*n_u*n_c
    double consumer_surplus = 0.0;
    double cp_surplus = 0.0;
    double social_welfare = 0.0;    // CS + CPS + platform + access ISP
};

/// Utility of a subscribing user given the joined-CP mass:
///   u = r_u - beta + (delta - b) * n_c
double user_utility(const MarketParams& params, const PriceVector& prices, double joined_cps);

/// Profit of a joined CP given the subscriber mass:
///   pi_c = r_c - alpha + (gamma - c - a) * n_u
double cp_profit(const MarketParams& params, const PriceVector& prices, double subscribers);

double platform_revenue(const PriceVector& prices, const Participation& part);

double access_isp_revenue(const PriceVector& prices, const Participation& part);

/// Revenue of the CP-side ISP, a * n_u * n_c. Informational only: it is not
/// part of social welfare.
double cp_isp_revenue(const MarketParams& params, const Participation& part);

/// Aggregate outcome at a participation profile. Surpluses integrate the
/// gross per-agent value over the mass that joins, so CS = max(u, 0) * n_u
/// and CPS = max(pi_c, 0) * n_c, and social welfare is the literal sum
/// CS + CPS + platform profit + access-ISP profit.
Outcome welfare(const MarketParams& params, const PriceVector& prices, const Participation& part);

} // namespace netecon
