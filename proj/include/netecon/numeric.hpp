#pragma once

#include <algorithm>
#include <cmath>

namespace netecon {

/// Relative closeness with a magnitude floor of 1, so near-zero values
/// compare in absolute terms: |a-b| <= tol * max(1, |a|, |b|).
inline bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline double clip01(double v) {
    if (v < 0.0) return 0.0;
    if (v > 1.0) return 1.0;
    return v;
}

} // namespace netecon
