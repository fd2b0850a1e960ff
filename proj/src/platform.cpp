#include "netecon/platform.hpp"

#include "netecon/numeric.hpp"
#include "netecon/participation.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace netecon {

namespace {

// Affine expression in the platform's two fees: c0 + cA*alpha + cB*beta.
struct Affine {
    double c0 = 0.0, cA = 0.0, cB = 0.0;
};

Affine operator+(const Affine& a, const Affine& b) {
    return {a.c0 + b.c0, a.cA + b.cA, a.cB + b.cB};
}

Affine operator*(double k, const Affine& a) { return {k * a.c0, k * a.cA, k * a.cB}; }

// gA*alpha + gB*beta <= h
struct HalfPlane {
    double gA = 0.0, gB = 0.0, h = 0.0;
};

HalfPlane at_most(const Affine& e, double upper) { return {e.cA, e.cB, upper - e.c0}; }
HalfPlane at_least(const Affine& e, double lower) { return {-e.cA, -e.cB, e.c0 - lower}; }

struct RegimeSystem {
    Affine n_u, n_c;
    HalfPlane cons[4];
    int ncons = 0;
    bool usable = false;
};

void push(RegimeSystem& r, const HalfPlane& hp) { r.cons[r.ncons++] = hp; }

// The nine regime combinations of the participation map at fixed (b, c).
// user_drive = r_u - beta + s*n_c and cp_drive = r_c - alpha + t*n_u decide
// the clipping on each side.
std::array<RegimeSystem, 9> build_regimes(const MarketParams& m, double b, double c) {
    const double nu = m.n_users_total;
    const double nc = m.n_cps_total;
    const double s = m.cp_to_user_effect - b;
    const double t = m.ad_revenue_per_user - c - m.cp_isp_price;
    const Affine user_base{m.standalone_user, 0.0, -1.0}; // r_u - beta
    const Affine cp_base{m.standalone_cp, -1.0, 0.0};     // r_c - alpha
    const Affine zero{};

    std::array<RegimeSystem, 9> out{};
    int k = 0;

    auto make = [&](const Affine& n_u, const Affine& n_c) -> RegimeSystem& {
        RegimeSystem& r = out[k++];
        r.n_u = n_u;
        r.n_c = n_c;
        r.usable = true;
        return r;
    };

    { // full / full
        RegimeSystem& r = make(Affine{nu, 0, 0}, Affine{nc, 0, 0});
        push(r, at_least(user_base + Affine{s * nc, 0, 0}, 1.0));
        push(r, at_least(cp_base + Affine{t * nu, 0, 0}, 1.0));
    }
    { // full / interior
        const Affine n_c = nc * (cp_base + Affine{t * nu, 0, 0});
        RegimeSystem& r = make(Affine{nu, 0, 0}, n_c);
        push(r, at_least(cp_base + Affine{t * nu, 0, 0}, 0.0));
        push(r, at_most(cp_base + Affine{t * nu, 0, 0}, 1.0));
        push(r, at_least(user_base + s * n_c, 1.0));
    }
    { // full / zero
        RegimeSystem& r = make(Affine{nu, 0, 0}, zero);
        push(r, at_least(user_base, 1.0));
        push(r, at_most(cp_base + Affine{t * nu, 0, 0}, 0.0));
    }
    { // interior / full
        const Affine drive = user_base + Affine{s * nc, 0, 0};
        const Affine n_u = nu * drive;
        RegimeSystem& r = make(n_u, Affine{nc, 0, 0});
        push(r, at_least(drive, 0.0));
        push(r, at_most(drive, 1.0));
        push(r, at_least(cp_base + t * n_u, 1.0));
    }
    { // interior / interior (skipped when the joint system is singular)
        RegimeSystem& r = out[k++];
        const double det = 1.0 - s * t * nu * nc;
        if (std::abs(det) > kSingularTol) {
            const Affine num_u = user_base + (s * nc) * cp_base;
            const Affine num_c = cp_base + (t * nu) * user_base;
            r.n_u = (nu / det) * num_u;
            r.n_c = (nc / det) * num_c;
            r.usable = true;
            if (det > 0.0) {
                push(r, at_least(num_u, 0.0));
                push(r, at_most(num_u, det));
                push(r, at_least(num_c, 0.0));
                push(r, at_most(num_c, det));
            } else {
                push(r, at_most(num_u, 0.0));
                push(r, at_least(num_u, det));
                push(r, at_most(num_c, 0.0));
                push(r, at_least(num_c, det));
            }
        }
    }
    { // interior / zero
        const Affine n_u = nu * user_base;
        RegimeSystem& r = make(n_u, zero);
        push(r, at_least(user_base, 0.0));
        push(r, at_most(user_base, 1.0));
        push(r, at_most(cp_base + t * n_u, 0.0));
    }
    { // zero / full
        RegimeSystem& r = make(zero, Affine{nc, 0, 0});
        push(r, at_least(cp_base, 1.0));
        push(r, at_most(user_base + Affine{s * nc, 0, 0}, 0.0));
    }
    { // zero / interior
        const Affine n_c = nc * cp_base;
        RegimeSystem& r = make(zero, n_c);
        push(r, at_least(cp_base, 0.0));
        push(r, at_most(cp_base, 1.0));
        push(r, at_most(user_base + s * n_c, 0.0));
    }
    { // zero / zero
        RegimeSystem& r = make(zero, zero);
        push(r, at_most(user_base, 0.0));
        push(r, at_most(cp_base, 0.0));
    }
    return out;
}

// Platform revenue restricted to one regime:
//   Q(A, B) = A*n_c(A,B) + B*n_u(A,B)
struct Quadratic {
    double aa, bb, ab, a, b; // aa*A^2 + bb*B^2 + ab*A*B + a*A + b*B
};

Quadratic revenue_quadratic(const RegimeSystem& r) {
    return {r.n_c.cA, r.n_u.cB, r.n_c.cB + r.n_u.cA, r.n_c.c0, r.n_u.c0};
}

bool feasible(const RegimeSystem& r, double A, double B, double halfwidth) {
    const double box_slack = 1e-9 * std::max(1.0, halfwidth);
    if (std::abs(A) > halfwidth + box_slack || std::abs(B) > halfwidth + box_slack) return false;
    for (int i = 0; i < r.ncons; ++i) {
        const HalfPlane& hp = r.cons[i];
        const double slack = 1e-9 * std::max(1.0, std::abs(hp.h));
        if (hp.gA * A + hp.gB * B > hp.h + slack) return false;
    }
    return true;
}

// Enumerates every exact candidate for one (b, c): per regime the stationary
// point of the restricted quadratic, the 1-D stationary points along every
// boundary line (regime constraints plus box edges), and all pairwise line
// intersections, each filtered by the regime's inequalities and clamped into
// the box. Candidates are reported through `fn(alpha, beta)`; duplicates may
// repeat.
template <class Fn>
void for_each_platform_candidate(const MarketParams& m, double b, double c, double halfwidth,
                                 Fn&& fn) {
    const std::array<RegimeSystem, 9> regimes = build_regimes(m, b, c);
    const double K = halfwidth;

    for (const RegimeSystem& r : regimes) {
        if (!r.usable) continue;
        const Quadratic q = revenue_quadratic(r);

        auto emit = [&](double A, double B) {
            if (!std::isfinite(A) || !std::isfinite(B)) return;
            if (!feasible(r, A, B, K)) return;
            fn(std::clamp(A, -K, K), std::clamp(B, -K, K));
        };

        // Unconstrained stationary point of the restricted quadratic.
        {
            const double det = 4.0 * q.aa * q.bb - q.ab * q.ab;
            const double scale = std::max({std::abs(q.aa), std::abs(q.bb), std::abs(q.ab), 1e-9});
            if (std::abs(det) > 1e-12 * scale * scale) {
                emit((q.b * q.ab - 2.0 * q.bb * q.a) / det,
                     (q.a * q.ab - 2.0 * q.aa * q.b) / det);
            }
        }

        // Boundary lines: regime constraints plus the four box edges.
        HalfPlane lines[8];
        int nlines = 0;
        for (int i = 0; i < r.ncons; ++i) lines[nlines++] = r.cons[i];
        lines[nlines++] = {1.0, 0.0, K};
        lines[nlines++] = {-1.0, 0.0, K};
        lines[nlines++] = {0.0, 1.0, K};
        lines[nlines++] = {0.0, -1.0, K};

        // 1-D stationary point along each line (only when strictly concave
        // along the line; convex or flat directions peak at vertices).
        for (int i = 0; i < nlines; ++i) {
            const double gA = lines[i].gA, gB = lines[i].gB, h = lines[i].h;
            const double nn = gA * gA + gB * gB;
            if (nn < 1e-24) continue;
            const double px = gA * h / nn, py = gB * h / nn; // closest point to origin
            const double dx = -gB, dy = gA;                  // direction along the line
            const double curv = q.aa * dx * dx + q.ab * dx * dy + q.bb * dy * dy;
            if (curv >= -1e-14) continue;
            const double slope = (2.0 * q.aa * px + q.ab * py + q.a) * dx +
                                 (q.ab * px + 2.0 * q.bb * py + q.b) * dy;
            const double tau = -slope / (2.0 * curv);
            emit(px + tau * dx, py + tau * dy);
        }

        // Polygon vertices: pairwise line intersections.
        for (int i = 0; i < nlines; ++i) {
            for (int j = i + 1; j < nlines; ++j) {
                const double det =
                    lines[i].gA * lines[j].gB - lines[j].gA * lines[i].gB;
                if (std::abs(det) < 1e-12) continue;
                emit((lines[i].h * lines[j].gB - lines[j].h * lines[i].gB) / det,
                     (lines[i].gA * lines[j].h - lines[j].gA * lines[i].h) / det);
            }
        }
    }
}

struct Incumbent {
    bool set = false;
    double value = -std::numeric_limits<double>::infinity();
    std::array<double, 2> x{0.0, 0.0};

    void offer(double v, double A, double B, double tie_tol) {
        const std::array<double, 2> pt{A, B};
        if (!set || v > value + tie_tol || (v >= value - tie_tol && pt < x)) {
            set = true;
            value = v;
            x = pt;
        }
    }
};

PlatformReply best_response_with(const MarketParams& m, double b, double c, PlatformMode mode,
                                 const OptimizerConfig& cfg, int grid, int rounds,
                                 bool diagnose) {
    PlatformReply reply;
    reply.prices = PriceVector{0.0, 0.0, b, c};
    if (mode == PlatformMode::absent) {
        reply.part = solve_participation(m, reply.prices);
        reply.profit = 0.0;
        return reply;
    }

    const double K = search_halfwidth_for(m, cfg);
    auto objective = [&](double A, double B) {
        const Participation part =
            solve_participation(m, PriceVector{A, B, b, c});
        return A * part.joined_cps + B * part.subscribers;
    };

    Incumbent cand;
    for_each_platform_candidate(m, b, c, K,
                                [&](double A, double B) { cand.offer(objective(A, B), A, B, cfg.value_tie_tol); });

    GridSettings settings;
    settings.points_per_axis = grid;
    settings.refine_rounds = rounds;
    settings.top_cells = 1;
    settings.zoom_factor = cfg.zoom_factor;
    settings.value_tie_tol = cfg.value_tie_tol;
    settings.threads = resolve_threads(cfg);
    auto grid_objective = [&](const double* x) { return objective(x[0], x[1]); };
    const std::vector<GridPoint> grid_top = maximize_on_box_impl(
        grid_objective, 2, {-K, -K}, {K, K}, settings);

    Incumbent best = cand;
    if (!grid_top.empty()) {
        best.offer(grid_top[0].value, grid_top[0].x[0], grid_top[0].x[1], cfg.value_tie_tol);
    }
    if (!best.set) {
        // Cannot happen with a sane grid, but keep the reply well-defined.
        best.offer(objective(0.0, 0.0), 0.0, 0.0, cfg.value_tie_tol);
    }

    if (diagnose && cand.set && !grid_top.empty() &&
        !rel_close(cand.value, grid_top[0].value, 1e-3)) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "platform best response did not converge at b=" << b << " c=" << c
            << ": candidate optimum " << cand.value << " vs grid optimum "
            << grid_top[0].value;
        reply.diagnostic = msg.str();
    }

    reply.prices = PriceVector{best.x[0], best.x[1], b, c};
    reply.part = solve_participation(m, reply.prices);
    reply.profit = best.x[0] * reply.part.joined_cps + best.x[1] * reply.part.subscribers;
    return reply;
}

} // namespace

std::vector<std::array<double, 2>> enumerate_platform_candidates(const MarketParams& params,
                                                                 double isp_user_price,
                                                                 double isp_cp_price,
                                                                 double halfwidth) {
    std::vector<std::array<double, 2>> raw;
    for_each_platform_candidate(params, isp_user_price, isp_cp_price, halfwidth,
                                [&](double A, double B) { raw.push_back({A, B}); });
    std::sort(raw.begin(), raw.end());
    std::vector<std::array<double, 2>> out;
    out.reserve(raw.size());
    for (const auto& p : raw) {
        if (!out.empty() && std::abs(out.back()[0] - p[0]) <= 1e-12 &&
            std::abs(out.back()[1] - p[1]) <= 1e-12) {
            continue;
        }
        out.push_back(p);
    }
    return out;
}

PlatformReply platform_best_response(const MarketParams& params, double isp_user_price,
                                     double isp_cp_price, PlatformMode mode,
                                     const OptimizerConfig& cfg) {
    return best_response_with(params, isp_user_price, isp_cp_price, mode, cfg, cfg.coarse_grid,
                              cfg.refine_rounds, true);
}

PlatformReply platform_best_response_nested(const MarketParams& params, double isp_user_price,
                                            double isp_cp_price, PlatformMode mode,
                                            const OptimizerConfig& cfg) {
    return best_response_with(params, isp_user_price, isp_cp_price, mode, cfg,
                              cfg.nested_coarse_grid, cfg.nested_refine_rounds, false);
}

double platform_profit_at(const MarketParams& params, double isp_user_price, double isp_cp_price,
                          double platform_cp_fee, double platform_user_fee) {
    const Participation part = solve_participation(
        params, PriceVector{platform_cp_fee, platform_user_fee, isp_user_price, isp_cp_price});
    return platform_cp_fee * part.joined_cps + platform_user_fee * part.subscribers;
}

} // namespace netecon
