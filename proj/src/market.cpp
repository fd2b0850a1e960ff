#include "netecon/market.hpp"

#include <cmath>
#include <stdexcept>

namespace netecon {

namespace {

bool finite(double v) { return std::isfinite(v); }

} // namespace

void validate(const MarketParams& params) {
    if (!(params.n_users_total > 0.0) || !(params.n_cps_total > 0.0)) {
        throw std::invalid_argument("MarketParams: total masses must be positive");
    }
    if (!finite(params.n_users_total) || !finite(params.n_cps_total) ||
        !finite(params.standalone_user) || !finite(params.standalone_cp) ||
        !finite(params.cp_to_user_effect) || !finite(params.ad_revenue_per_user) ||
        !finite(params.cp_isp_price)) {
        throw std::invalid_argument("MarketParams: all fields must be finite");
    }
}

std::vector<std::string> calibration_warnings(const MarketParams& params) {
    std::vector<std::string> warnings;
    if (params.standalone_user < 0.0 || params.standalone_user > 1.0) {
        warnings.push_back("r_u outside [0, 1]: outside the usual calibration");
    }
    if (params.standalone_cp < 0.0 || params.standalone_cp > 1.0) {
        warnings.push_back("r_c outside [0, 1]: outside the usual calibration");
    }
    return warnings;
}

void validate(const PriceVector& prices) {
    if (!finite(prices.platform_cp_fee) || !finite(prices.platform_user_fee) ||
        !finite(prices.isp_user_price) || !finite(prices.isp_cp_price)) {
        throw std::invalid_argument("PriceVector: all prices must be finite");
    }
}

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::zero: return "zero";
        case Regime::interior: return "interior";
        case Regime::full: return "full";
    }
    return "?";
}

double user_utility(const MarketParams& params, const PriceVector& prices, double joined_cps) {
    return params.standalone_user - prices.platform_user_fee +
           (params.cp_to_user_effect - prices.isp_user_price) * joined_cps;
}

double cp_profit(const MarketParams& params, const PriceVector& prices, double subscribers) {
    return params.standalone_cp - prices.platform_cp_fee +
           (params.ad_revenue_per_user - prices.isp_cp_price - params.cp_isp_price) * subscribers;
}

double platform_revenue(const PriceVector& prices, const Participation& part) {
    return prices.platform_cp_fee * part.joined_cps + prices.platform_user_fee * part.subscribers;
}

double access_isp_revenue(const PriceVector& prices, const Participation& part) {
    return (prices.isp_user_price + prices.isp_cp_price) * part.subscribers * part.joined_cps;
}

double cp_isp_revenue(const MarketParams& params, const Participation& part) {
    return params.cp_isp_price * part.subscribers * part.joined_cps;
}

Outcome welfare(const MarketParams& params, const PriceVector& prices, const Participation& part) {
    Outcome out;
    out.user_utility = user_utility(params, prices, part.joined_cps);
    out.cp_profit = cp_profit(params, prices, part.subscribers);
    out.platform_profit = platform_revenue(prices, part);
    out.access_isp_profit = access_isp_revenue(prices, part);
    out.consumer_surplus = std::max(out.user_utility, 0.0) * part.subscribers;
    out.cp_surplus = std::max(out.cp_profit, 0.0) * part.joined_cps;
    out.social_welfare =
        out.consumer_surplus + out.cp_surplus + out.platform_profit + out.access_isp_profit;
    return out;
}

} // namespace netecon
