#pragma once

#include <cstdint>
#include <functional>
#include <variant>

#include "spins/proposals.hpp"

namespace spins {

/// Log posterior evaluator over chain states. Must return -inf outside the
/// support and finite values on the interior.
using TargetDensity = std::function<double(const Vec&)>;

/// The full probability simplex in R^k (componentwise and Dirichlet chains
/// keep their states here rather than in projected coordinates).
struct SimplexSpace {
    int k = 2;
};

/// State space of a chain: a Domain sampled in ambient coordinates, or the
/// full simplex.
using StateSpace = std::variant<Domain, SimplexSpace>;

int space_dimension(const StateSpace& space);
bool space_contains(const StateSpace& space, const Vec& x);

/// True when x is inside the space with positive margin from the boundary;
/// only such points are admissible chain states.
bool space_contains_interior(const StateSpace& space, const Vec& x);

struct ChainConfig {
    std::int64_t iterations = 0;
    std::int64_t burn_in = 0;
    std::uint64_t seed = 0;
    Vec initial_state;
};

/// Recorded chain history. `states` and `log_posterior` hold one entry per
/// iteration (post-update); `accepted` holds one entry per MH decision,
/// which in componentwise mode is k decisions per iteration.
struct Trace {
    std::vector<Vec> states;
    std::vector<std::uint8_t> accepted;
    std::vector<double> log_posterior;
    int decisions_per_iteration = 1;
};

struct StepResult {
    Vec state;
    bool accepted = false;
};

/// One Metropolis-Hastings decision. Invalid proposals are rejected outright
/// without consuming a uniform draw; otherwise the candidate is accepted
/// with probability min(1, exp[(log pi(x*) + log q_rev) - (log pi(x) +
/// log q_fwd)]). Throws NonFiniteTargetError when the current state has
/// non-finite log posterior.
StepResult mh_step(const TargetDensity& target, const ProposalKernel& kernel,
                   const Vec& state, int component, RandomSource& rng);

/// Run a chain for cfg.iterations iterations. Joint kernels take one MH
/// decision per iteration; componentwise kernels take k sequential
/// per-component decisions in fixed ascending order. Fully deterministic
/// given cfg.seed.
Trace run_chain(const StateSpace& space, const TargetDensity& target,
                const ProposalKernel& kernel, const ChainConfig& cfg);

}  // namespace spins
