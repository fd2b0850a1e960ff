// Deterministic zooming grid maximizer for 1-D and 2-D boxes, plus the shared
// optimizer configuration. Grid scans use a total order (value, then
// lexicographic coordinates) so results do not depend on chunking or thread
// count; the documented tie tolerance is applied once at the end.
#pragma once

#include "netecon/market.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <thread>
#include <vector>

namespace netecon {

struct OptimizerConfig {
    // Half-width K of every price search box [-K, K]. 0 means "derive from
    // the market parameters": standalone worth plus cross-effect headroom,
    // max(|r_u|,|r_c|) + max(|delta|*N_c, |gamma|*N_u) + 1, floored at 10.
    double search_halfwidth = 0.0;

    // Platform stage (inner follower problem).
    int coarse_grid = 201;
    int refine_rounds = 6;

    // ISP stage (outer leader problem). Each outer point nests a platform
    // solve, so the outer grid is coarser and refinement keeps the top 3
    // cells to survive jumps where the follower's best response switches.
    int outer_coarse_grid = 101;
    int outer_refine_rounds = 5;
    int outer_top_cells = 3;

    // Lean platform-response settings used while scanning the outer grid.
    // The exact regime candidates carry the precision; this small grid only
    // backstops them. The reported solution is always re-evaluated with the
    // full platform settings above.
    int nested_coarse_grid = 9;
    int nested_refine_rounds = 2;

    double zoom_factor = 0.2;
    double value_tie_tol = 1e-9;

    // Worker threads for grid scans; 0 = NETECON_THREADS env, then hardware.
    int threads = 0;
};

/// Throws std::invalid_argument on out-of-range settings.
void validate(const OptimizerConfig& cfg);

double search_halfwidth_for(const MarketParams& params, const OptimizerConfig& cfg);

int resolve_threads(const OptimizerConfig& cfg);

struct GridPoint {
    std::array<double, 2> x{0.0, 0.0};
    double value = 0.0;
};

struct GridSettings {
    int points_per_axis = 201;
    int refine_rounds = 6;
    int top_cells = 1;
    double zoom_factor = 0.2;
    double value_tie_tol = 1e-9;
    int threads = 1;
};

namespace detail {

// Total order used while scanning: larger value first, then lexicographically
// smaller coordinates. Chunk-merge under a total order is order-independent.
inline bool grid_better(const GridPoint& a, const GridPoint& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.x[0] != b.x[0]) return a.x[0] < b.x[0];
    return a.x[1] < b.x[1];
}

class TopPool {
public:
    explicit TopPool(int capacity) : capacity_(std::max(1, capacity)) {}

    int capacity() const { return capacity_; }

    void offer(const GridPoint& p) {
        for (const GridPoint& q : pool_) {
            if (q.x == p.x) return;
        }
        pool_.push_back(p);
        std::sort(pool_.begin(), pool_.end(), grid_better);
        if (static_cast<int>(pool_.size()) > capacity_) pool_.resize(capacity_);
    }

    void merge(const TopPool& other) {
        for (const GridPoint& p : other.pool_) offer(p);
    }

    const std::vector<GridPoint>& points() const { return pool_; }

private:
    int capacity_;
    std::vector<GridPoint> pool_;
};

template <class F>
void scan_box(F& objective, int dim, const std::array<double, 2>& lo,
              const std::array<double, 2>& hi, int n, int threads, TopPool& pool) {
    const long total = (dim == 1) ? n : static_cast<long>(n) * n;
    auto point_at = [&](long idx, std::array<double, 2>& x) {
        const long i = (dim == 1) ? idx : idx / n;
        const long j = (dim == 1) ? 0 : idx % n;
        x[0] = (n == 1) ? lo[0] : lo[0] + (hi[0] - lo[0]) * static_cast<double>(i) / (n - 1);
        x[1] = (dim == 1) ? 0.0
                          : ((n == 1) ? lo[1]
                                      : lo[1] + (hi[1] - lo[1]) * static_cast<double>(j) / (n - 1));
    };
    auto scan_range = [&](long begin, long end, TopPool& local) {
        GridPoint p;
        for (long idx = begin; idx < end; ++idx) {
            point_at(idx, p.x);
            p.value = objective(p.x.data());
            if (std::isnan(p.value)) continue;
            local.offer(p);
        }
    };
    if (threads <= 1 || total < 1024) {
        scan_range(0, total, pool);
        return;
    }
    std::vector<TopPool> locals(threads, TopPool(pool.capacity()));
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        const long begin = total * t / threads;
        const long end = total * (t + 1) / threads;
        workers.emplace_back([&, begin, end, t] { scan_range(begin, end, locals[t]); });
    }
    for (auto& w : workers) w.join();
    for (const TopPool& local : locals) pool.merge(local);
}

} // namespace detail

/// Maximize `objective` over an axis-aligned box (dim 1 or 2): one coarse
/// scan, then `refine_rounds` of re-gridding shrunken windows around the
/// current top cells. Returns the retained top points sorted best-first,
/// with the front entry chosen lexicographically among values within
/// `value_tie_tol` of the maximum.
template <class F>
std::vector<GridPoint> maximize_on_box_impl(F&& objective, int dim,
                                            const std::array<double, 2>& lo,
                                            const std::array<double, 2>& hi,
                                            const GridSettings& settings) {
    detail::TopPool pool(settings.top_cells);
    detail::scan_box(objective, dim, lo, hi, settings.points_per_axis, settings.threads, pool);
    for (int round = 1; round <= settings.refine_rounds; ++round) {
        const std::vector<GridPoint> incumbents = pool.points();
        for (const GridPoint& inc : incumbents) {
            std::array<double, 2> wlo = lo;
            std::array<double, 2> whi = hi;
            for (int axis = 0; axis < dim; ++axis) {
                double width = (hi[axis] - lo[axis]);
                for (int r = 0; r < round; ++r) width *= settings.zoom_factor;
                wlo[axis] = std::max(lo[axis], inc.x[axis] - width / 2.0);
                whi[axis] = std::min(hi[axis], inc.x[axis] + width / 2.0);
            }
            detail::scan_box(objective, dim, wlo, whi, settings.points_per_axis,
                             settings.threads, pool);
        }
    }
    std::vector<GridPoint> result = pool.points();
    if (!result.empty()) {
        int pick = 0;
        for (int i = 1; i < static_cast<int>(result.size()); ++i) {
            if (result[i].value >= result[0].value - settings.value_tie_tol &&
                result[i].x < result[pick].x) {
                pick = i;
            }
        }
        std::rotate(result.begin(), result.begin() + pick, result.begin() + pick + 1);
    }
    return result;
}

/// Type-erased convenience wrapper around maximize_on_box_impl.
std::vector<GridPoint> maximize_on_box(const std::function<double(const double*)>& objective,
                                       int dim, const std::array<double, 2>& lo,
                                       const std::array<double, 2>& hi,
                                       const GridSettings& settings);

} // namespace netecon
