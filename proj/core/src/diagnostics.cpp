#include "spins/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spins {

namespace {

/// Autocovariance at the given lag of a centered series.
double autocovariance(const std::vector<double>& centered, std::size_t lag) {
    const std::size_t n = centered.size();
    double s = 0.0;
    for (std::size_t t = 0; t + lag < n; ++t) {
        s += centered[t] * centered[t + lag];
    }
    return s / static_cast<double>(n);
}

}  // namespace

double ess_geyer(const std::vector<double>& series) {
    const std::size_t n = series.size();
    if (n == 0) {
        throw std::invalid_argument("ess_geyer: empty series");
    }
    if (n < 4) {
        return static_cast<double>(n);
    }
    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= static_cast<double>(n);
    std::vector<double> centered(n);
    for (std::size_t t = 0; t < n; ++t) centered[t] = series[t] - mean;

    const double gamma0 = autocovariance(centered, 0);
    if (!(gamma0 > 0.0)) {
        return 1.0;  // constant series carries one effective sample
    }

    // Sum of paired autocovariances while the pairs stay positive.
    double pair_sum = 0.0;
    for (std::size_t m = 0; 2 * m + 1 < n; ++m) {
        const double pair = autocovariance(centered, 2 * m) +
                            autocovariance(centered, 2 * m + 1);
        if (pair <= 0.0) break;
        pair_sum += pair;
    }
    const double tau = std::max(1.0, -1.0 + 2.0 * pair_sum / gamma0);
    return std::clamp(static_cast<double>(n) / tau, 1.0,
                      static_cast<double>(n));
}

Diagnostics compute_diagnostics(const Trace& trace, std::int64_t burn_in,
                                const std::optional<Ball>& ball) {
    const auto total = static_cast<std::int64_t>(trace.states.size());
    if (total == 0 || burn_in < 0 || burn_in >= total) {
        throw std::invalid_argument(
            "compute_diagnostics: trace must be nonempty after burn-in");
    }
    const auto dim = trace.states.front().size();

    Diagnostics diag;
    std::int64_t accepted = 0;
    for (auto a : trace.accepted) accepted += a;
    diag.acceptance_rate =
        trace.accepted.empty()
            ? 0.0
            : static_cast<double>(accepted) /
                  static_cast<double>(trace.accepted.size());

    const auto kept = static_cast<std::size_t>(total - burn_in);
    std::vector<double> series(kept);
    diag.ess.resize(dim);
    diag.posterior_mean.resize(dim);
    diag.posterior_sd.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t t = 0; t < kept; ++t) {
            series[t] = trace.states[burn_in + t][j];
        }
        diag.ess[j] = ess_geyer(series);
        double mean = 0.0;
        for (double v : series) mean += v;
        mean /= static_cast<double>(kept);
        double ss = 0.0;
        for (double v : series) ss += (v - mean) * (v - mean);
        diag.posterior_mean[j] = mean;
        diag.posterior_sd[j] =
            kept > 1 ? std::sqrt(ss / static_cast<double>(kept - 1)) : 0.0;
    }

    if (ball) {
        if (ball->center.size() != dim) {
            throw std::invalid_argument(
                "compute_diagnostics: ball dimension mismatch");
        }
        for (std::int64_t t = 0; t < total; ++t) {
            if (distance(trace.states[t], ball->center) <= ball->radius) {
                diag.iterations_to_ball = t + 1;  // 1-based iteration index
                break;
            }
        }
    }
    return diag;
}

}  // namespace spins
