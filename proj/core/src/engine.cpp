#include "spins/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spins/error.hpp"

namespace spins {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// One MH decision with the current log posterior already known. Returns
/// the new log posterior through `lp`.
bool step_inplace(const TargetDensity& target, const ProposalKernel& kernel,
                  Vec& state, double& lp, int component, RandomSource& rng) {
    ProposalOutcome outcome = kernel.propose(state, component, rng);
    if (!outcome.valid) {
        return false;  // rejected outright, no uniform draw consumed
    }
    const double lp_candidate = target(outcome.candidate);
    const double log_ratio = (lp_candidate + outcome.log_q_reverse) -
                             (lp + outcome.log_q_forward);
    const double u = rng.uniform();
    // NaN ratios (e.g. -inf minus -inf) compare false and reject.
    if (std::log(u) < std::min(0.0, log_ratio)) {
        state = std::move(outcome.candidate);
        lp = lp_candidate;
        return true;
    }
    return false;
}

}  // namespace

int space_dimension(const StateSpace& space) {
    if (const auto* simplex = std::get_if<SimplexSpace>(&space)) {
        return simplex->k;
    }
    return dimension(std::get<Domain>(space));
}

bool space_contains(const StateSpace& space, const Vec& x) {
    if (const auto* simplex = std::get_if<SimplexSpace>(&space)) {
        return static_cast<int>(x.size()) == simplex->k &&
               is_simplex_point(x);
    }
    return contains(std::get<Domain>(space), x);
}

bool space_contains_interior(const StateSpace& space, const Vec& x) {
    if (!space_contains(space, x)) return false;
    if (std::holds_alternative<SimplexSpace>(space)) {
        double min_w = std::numeric_limits<double>::infinity();
        for (double v : x) min_w = std::min(min_w, v);
        return min_w > 1e-12;
    }
    const auto& domain = std::get<Domain>(space);
    return boundary_distance(domain, x) > interior_tolerance(domain);
}

StepResult mh_step(const TargetDensity& target, const ProposalKernel& kernel,
                   const Vec& state, int component, RandomSource& rng) {
    double lp = target(state);
    if (!std::isfinite(lp)) {
        throw NonFiniteTargetError(
            "mh_step: current state has non-finite log posterior");
    }
    StepResult result;
    result.state = state;
    result.accepted =
        step_inplace(target, kernel, result.state, lp, component, rng);
    return result;
}

Trace run_chain(const StateSpace& space, const TargetDensity& target,
                const ProposalKernel& kernel, const ChainConfig& cfg) {
    if (cfg.iterations <= 0) {
        throw std::invalid_argument("run_chain: iterations must be positive");
    }
    if (cfg.burn_in < 0 || cfg.burn_in >= cfg.iterations) {
        throw std::invalid_argument(
            "run_chain: burn_in must lie in [0, iterations)");
    }
    if (static_cast<int>(cfg.initial_state.size()) != space_dimension(space)) {
        throw std::invalid_argument(
            "run_chain: initial state dimension mismatch");
    }
    if (!space_contains_interior(space, cfg.initial_state)) {
        throw BoundaryPointError(
            "run_chain: initial state must lie strictly inside the space");
    }

    Vec state = cfg.initial_state;
    double lp = target(state);
    if (!std::isfinite(lp)) {
        throw NonFiniteTargetError(
            "run_chain: initial state has non-finite log posterior");
    }

    RandomSource rng(cfg.seed);
    const int decisions =
        kernel.mode() == UpdateMode::Componentwise
            ? static_cast<int>(state.size())
            : 1;

    Trace trace;
    trace.decisions_per_iteration = decisions;
    trace.states.reserve(cfg.iterations);
    trace.log_posterior.reserve(cfg.iterations);
    trace.accepted.reserve(cfg.iterations * decisions);

    for (std::int64_t it = 0; it < cfg.iterations; ++it) {
        for (int c = 0; c < decisions; ++c) {
            const bool accepted =
                step_inplace(target, kernel, state, lp, c, rng);
            trace.accepted.push_back(accepted ? 1 : 0);
        }
        trace.states.push_back(state);
        trace.log_posterior.push_back(lp);
    }
    return trace;
}

}  // namespace spins
