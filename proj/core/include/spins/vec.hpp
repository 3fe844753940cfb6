#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace spins {

/// Dense point in R^n. Dimensions in this library are small (n <= ~10),
/// so a plain vector of doubles is used throughout.
using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double squared_norm(const Vec& a) { return dot(a, a); }

inline double norm(const Vec& a) { return std::sqrt(squared_norm(a)); }

inline double squared_distance(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double distance(const Vec& a, const Vec& b) {
    return std::sqrt(squared_distance(a, b));
}

inline double sum(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += v;
    return s;
}

inline bool all_finite(const Vec& a) {
    for (double v : a) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

}  // namespace spins
