#pragma once

#include <cstdint>
#include <optional>

#include "spins/engine.hpp"

namespace spins {

/// Target region for the iterations_to_ball convergence measure.
struct Ball {
    Vec center;
    double radius = 0.0;
};

struct Diagnostics {
    double acceptance_rate = 0.0;        // accepted / all decisions
    std::vector<double> ess;             // per dimension, post burn-in
    std::vector<double> posterior_mean;  // post burn-in
    std::vector<double> posterior_sd;    // post burn-in
    std::optional<std::int64_t> iterations_to_ball;  // 1-based, full trace
};

/// Effective sample size of one scalar series: N / (-1 + 2 * sum of paired
/// autocovariances), truncated at the first nonpositive pair (Geyer initial
/// positive sequence). Clamped to [1, N].
double ess_geyer(const std::vector<double>& series);

/// Acceptance rate over all decisions; ESS and posterior moments over the
/// iterations after burn_in; first 1-based iteration whose state enters the
/// ball, if one is given.
Diagnostics compute_diagnostics(const Trace& trace, std::int64_t burn_in,
                                const std::optional<Ball>& ball = {});

}  // namespace spins
