#pragma once

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace spins::detail {

inline constexpr double kLogTwoPi = 1.8378770664093454836;

/// Log density of N(mean, sd^2) at x.
inline double log_normal_pdf(double x, double mean, double sd) {
    const double z = (x - mean) / sd;
    return -0.5 * kLogTwoPi - std::log(sd) - 0.5 * z * z;
}

/// Log of the standard normal CDF, stable far into the lower tail.
inline double log_normal_cdf(double t) {
    if (t > -10.0) {
        return std::log(0.5 * std::erfc(-t * (std::numbers::sqrt2_v<double> * 0.5)));
    }
    const double t2 = t * t;
    // Asymptotic expansion of the Mills ratio.
    return -0.5 * t2 - 0.5 * kLogTwoPi - std::log(-t) +
           std::log1p(-1.0 / t2 + 3.0 / (t2 * t2));
}

/// Shortest decimal form that round-trips the exact double value.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace spins::detail
