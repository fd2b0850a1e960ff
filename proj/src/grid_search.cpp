#include "netecon/grid_search.hpp"

#include <cstdlib>
#include <stdexcept>

namespace netecon {

void validate(const OptimizerConfig& cfg) {
    if (cfg.search_halfwidth < 0.0 || !std::isfinite(cfg.search_halfwidth)) {
        throw std::invalid_argument("OptimizerConfig: search_halfwidth must be >= 0");
    }
    if (cfg.coarse_grid < 3 || cfg.outer_coarse_grid < 3 || cfg.nested_coarse_grid < 3) {
        throw std::invalid_argument("OptimizerConfig: grids need at least 3 points per axis");
    }
    if (cfg.refine_rounds < 0 || cfg.outer_refine_rounds < 0 || cfg.nested_refine_rounds < 0) {
        throw std::invalid_argument("OptimizerConfig: refine rounds must be >= 0");
    }
    if (!(cfg.zoom_factor > 0.0) || !(cfg.zoom_factor < 1.0)) {
        throw std::invalid_argument("OptimizerConfig: zoom_factor must lie in (0, 1)");
    }
    if (cfg.value_tie_tol < 0.0) {
        throw std::invalid_argument("OptimizerConfig: value_tie_tol must be >= 0");
    }
    if (cfg.outer_top_cells < 1) {
        throw std::invalid_argument("OptimizerConfig: outer_top_cells must be >= 1");
    }
    if (cfg.threads < 0) {
        throw std::invalid_argument("OptimizerConfig: threads must be >= 0");
    }
}

double search_halfwidth_for(const MarketParams& params, const OptimizerConfig& cfg) {
    if (cfg.search_halfwidth > 0.0) return cfg.search_halfwidth;
    const double standalone = std::max(std::abs(params.standalone_user),
                                       std::abs(params.standalone_cp));
    const double cross = std::max(std::abs(params.cp_to_user_effect) * params.n_cps_total,
                                  std::abs(params.ad_revenue_per_user) * params.n_users_total);
    return std::max(10.0, standalone + cross + 1.0);
}

int resolve_threads(const OptimizerConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    if (const char* env = std::getenv("NETECON_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<GridPoint> maximize_on_box(const std::function<double(const double*)>& objective,
                                       int dim, const std::array<double, 2>& lo,
                                       const std::array<double, 2>& hi,
                                       const GridSettings& settings) {
    if (dim != 1 && dim != 2) {
        throw std::invalid_argument("maximize_on_box: dim must be 1 or 2");
    }
    return maximize_on_box_impl(objective, dim, lo, hi, settings);
}

} // namespace netecon
