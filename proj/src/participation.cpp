#include "netecon/participation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace netecon {

namespace {

double clip01(double v) {
    if (v < 0.0) return 0.0;
    if (v > 1.0) return 1.0;
    return v;
}

Regime tag(double mass, double total) {
    if (mass == 0.0) return Regime::zero;
    if (mass == total) return Regime::full;
    return Regime::interior;
}

// Reduced coefficients of the participation system:
//   n_u = N_u * clip01(p + s * n_c),   n_c = N_c * clip01(q + t * n_u)
struct SystemCoeffs {
    double nu, nc; // masses
    double p, s;   // user-side intercept and cross slope
    double q, t;   // CP-side intercept and cross slope
};

SystemCoeffs coeffs(const MarketParams& params, const PriceVector& prices) {
    SystemCoeffs k;
    k.nu = params.n_users_total;
    k.nc = params.n_cps_total;
    k.p = params.standalone_user - prices.platform_user_fee;
    k.s = params.cp_to_user_effect - prices.isp_user_price;
    k.q = params.standalone_cp - prices.platform_cp_fee;
    k.t = params.ad_revenue_per_user - prices.isp_cp_price - params.cp_isp_price;
    return k;
}

// Fixed-size candidate buffer; the hot path must not allocate.
struct CandidateBuffer {
    std::array<Participation, 12> pts{};
    int count = 0;
    bool degenerate = false;
};

// Snap near-boundary values onto the boundary exactly so regime tags and
// dedup behave; reject candidates outside the admissible box.
bool snap_into(double& v, double total) {
    const double eps = 1e-12 * std::max(1.0, total);
    if (std::abs(v) <= eps) v = 0.0;
    if (std::abs(v - total) <= eps) v = total;
    return v >= 0.0 && v <= total;
}

void try_add(const SystemCoeffs& k, double x, double y, CandidateBuffer& buf) {
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    if (!snap_into(x, k.nu) || !snap_into(y, k.nc)) return;
    // Fixed-point residual check against the clipped map.
    const double fx = k.nu * clip01(k.p + k.s * y);
    const double fy = k.nc * clip01(k.q + k.t * x);
    if (std::abs(fx - x) > kFixedPointResidualTol || std::abs(fy - y) > kFixedPointResidualTol) {
        return;
    }
    for (int i = 0; i < buf.count; ++i) {
        if (std::abs(buf.pts[i].subscribers - x) <= kFixedPointDistinctTol &&
            std::abs(buf.pts[i].joined_cps - y) <= kFixedPointDistinctTol) {
            return;
        }
    }
    if (buf.count >= static_cast<int>(buf.pts.size())) return;
    Participation part;
    part.subscribers = x;
    part.joined_cps = y;
    part.user_regime = tag(x, k.nu);
    part.cp_regime = tag(y, k.nc);
    buf.pts[buf.count++] = part;
}

void enumerate_into(const SystemCoeffs& k, CandidateBuffer& buf) {
    // Corner and mixed regimes first so their exact boundary values are the
    // representatives kept by dedup.
    try_add(k, k.nu, k.nc, buf);                          // full / full
    try_add(k, k.nu, k.nc * (k.q + k.t * k.nu), buf);     // full / interior
    try_add(k, k.nu, 0.0, buf);                           // full / zero
    try_add(k, k.nu * (k.p + k.s * k.nc), k.nc, buf);     // interior / full
    try_add(k, k.nu * k.p, 0.0, buf);                     // interior / zero
    try_add(k, 0.0, k.nc, buf);                           // zero / full
    try_add(k, 0.0, k.nc * k.q, buf);                     // zero / interior
    try_add(k, 0.0, 0.0, buf);                            // zero / zero

    // Doubly interior: solve the 2x2 linear system.
    const double det = 1.0 - k.s * k.t * k.nu * k.nc;
    if (std::abs(det) > kSingularTol) {
        const double x = k.nu * (k.p + k.s * k.nc * k.q) / det;
        const double y = k.nc * (k.q + k.t * k.nu * k.p) / det;
        try_add(k, x, y, buf);
        return;
    }
    // Singular system. The two interior lines coincide exactly when
    // p + s * N_c * q = 0; then every point of the in-box segment is a fixed
    // point and we record the segment endpoints.
    if (std::abs(k.p + k.s * k.nc * k.q) * std::max(1.0, k.nu) > 1e-9) return;
    // s != 0 here, because s*t*N_u*N_c == 1.
    const double y_a = -k.p / k.s;
    const double y_b = (1.0 - k.p) / k.s;
    double y_lo = std::max(0.0, std::min(y_a, y_b));
    double y_hi = std::min(k.nc, std::max(y_a, y_b));
    if (y_lo > y_hi) return;
    buf.degenerate = true;
    try_add(k, k.nu * (k.p + k.s * y_hi), y_hi, buf);
    try_add(k, k.nu * (k.p + k.s * y_lo), y_lo, buf);
}

bool descending(const Participation& a, const Participation& b) {
    if (a.subscribers != b.subscribers) return a.subscribers > b.subscribers;
    return a.joined_cps > b.joined_cps;
}

} // namespace

Participation clipped_map(const MarketParams& params, const PriceVector& prices,
                          const Participation& guess) {
    const SystemCoeffs k = coeffs(params, prices);
    Participation next;
    next.subscribers = k.nu * clip01(k.p + k.s * guess.joined_cps);
    next.joined_cps = k.nc * clip01(k.q + k.t * guess.subscribers);
    next.user_regime = tag(next.subscribers, k.nu);
    next.cp_regime = tag(next.joined_cps, k.nc);
    return next;
}

FixedPointSet enumerate_fixed_points(const MarketParams& params, const PriceVector& prices) {
    CandidateBuffer buf;
    enumerate_into(coeffs(params, prices), buf);
    FixedPointSet set;
    set.degenerate = buf.degenerate;
    set.points.assign(buf.pts.begin(), buf.pts.begin() + buf.count);
    std::sort(set.points.begin(), set.points.end(), descending);
    return set;
}

Participation solve_participation(const MarketParams& params, const PriceVector& prices) {
    const SystemCoeffs k = coeffs(params, prices);
    // When full participation is self-consistent on both sides it dominates
    // every other fixed point, so it is the selected one.
    if (k.p + k.s * k.nc >= 1.0 && k.q + k.t * k.nu >= 1.0) {
        Participation part;
        part.subscribers = k.nu;
        part.joined_cps = k.nc;
        part.user_regime = Regime::full;
        part.cp_regime = Regime::full;
        return part;
    }
    CandidateBuffer buf;
    enumerate_into(k, buf);
    if (buf.count == 0) {
        throw std::logic_error("participation: fixed-point enumeration came back empty");
    }
    int best = 0;
    for (int i = 1; i < buf.count; ++i) {
        if (descending(buf.pts[i], buf.pts[best])) best = i;
    }
    return buf.pts[best];
}

} // namespace netecon
