#pragma once

#include <memory>
#include <optional>
#include <string>

#include "spins/domain.hpp"
#include "spins/random.hpp"

namespace spins {

/// Scaling divisor for the SPInS Gaussian step: proposal sd = eta / d.
struct SpinsConfig {
    double d = 3.0;
};

/// Scale of the Gaussian step on the logit axis.
struct SaltConfig {
    double h = 0.4;
};

/// Multiplier for the adaptive Dirichlet concentration lambda = tau * 10^m.
struct DirichletConfig {
    double tau = 10.0;
};

/// Result of one proposal draw. When valid is false the candidate violates
/// domain membership and the MH step rejects it outright; the log densities
/// are only meaningful when valid.
struct ProposalOutcome {
    Vec candidate;
    double log_q_forward = 0.0;
    double log_q_reverse = 0.0;
    bool valid = true;
    std::optional<int> removed_index;  // joint simplex proposals only
};

// --- SPInS joint proposal on a Domain -----------------------------------
//
// For the simplex, x is the already-projected point theta_minus; the caller
// removes a uniformly chosen component per iteration and restores it after.

ProposalOutcome spins_joint_propose(const Domain& domain, const Vec& x,
                                    const SpinsConfig& cfg, RandomSource& rng);

/// Deterministic core of the joint proposal: the Gaussian step uses the
/// supplied standard normal vector instead of drawing one.
ProposalOutcome spins_joint_propose_with_noise(const Domain& domain,
                                               const Vec& x,
                                               const SpinsConfig& cfg,
                                               const Vec& noise);

/// Log proposal density q(x_to | x_from). The inversion sphere and eta are
/// recomputed from x_from, the move's origin. Returns -inf when x_to lies
/// outside the domain.
double spins_joint_log_density(const Domain& domain, const Vec& x_from,
                               const Vec& x_to, const SpinsConfig& cfg);

// --- SPInS componentwise proposal on the unit interval ------------------
//
// theta is a full simplex point; component i is moved through the interval
// inversion and the others are rescaled to preserve ratios.

/// Interval inversion T: 1/t for t <= 1/2 (center 0), t/(t-1) for t > 1/2
/// (center 1); radius 1 in both branches.
double spins_cw_transform(double theta_i);

/// Radius eta_i of the maximal interval around T(theta_i) inside the image
/// of (0,1): (1-t)/t for t <= 1/2, t/(1-t) for t > 1/2.
double spins_cw_interval_radius(double theta_i);

/// Back map U for the branch selected by theta_i (the move's origin).
double spins_cw_back_map(double theta_i, double delta_star);

/// Back-map Jacobian factor |dU/dtheta*|: 1/theta*^2 on the lower branch,
/// 1/(theta*-1)^2 on the upper branch.
double spins_cw_jacobian(double theta_i, double theta_star_i);

ProposalOutcome spins_cw_propose(const Vec& theta, int i,
                                 const SpinsConfig& cfg, RandomSource& rng);

ProposalOutcome spins_cw_propose_with_noise(const Vec& theta, int i,
                                            const SpinsConfig& cfg,
                                            double noise);

double spins_cw_log_density(double theta_i, double theta_star_i,
                            const SpinsConfig& cfg);

// --- SALT componentwise proposal ----------------------------------------

/// SALT Jacobian factor 1/(theta* (1-theta*)).
double salt_jacobian(double theta_star_i);

ProposalOutcome salt_propose(const Vec& theta, int i, const SaltConfig& cfg,
                             RandomSource& rng);

ProposalOutcome salt_propose_with_noise(const Vec& theta, int i,
                                        const SaltConfig& cfg, double noise);

double salt_log_density(double theta_i, double theta_star_i,
                        const SaltConfig& cfg);

// --- adaptive Dirichlet proposal ----------------------------------------

/// lambda = tau * 10^m with m = ceil(-log10(min_j theta_j)), so that every
/// rescaled concentration lambda * theta_j is at least tau.
double dirichlet_rescale_lambda(const Vec& theta, const DirichletConfig& cfg);

ProposalOutcome dirichlet_propose(const Vec& theta, const DirichletConfig& cfg,
                                  RandomSource& rng);

/// Dirichlet log pdf with concentration lambda(theta_from) * theta_from
/// evaluated at theta_to.
double dirichlet_log_density(const Vec& theta_from, const Vec& theta_to,
                             const DirichletConfig& cfg);

// --- uniform baselines (sector and hypercube) ---------------------------

enum class UniformMode { Joint, Componentwise };

/// Hypercube joint: every coordinate redrawn U(0, edge). Hypercube
/// componentwise: only `component` redrawn. Sector: joint draw from the
/// bounding unit box, valid when inside the sector. The density is constant
/// and symmetric, so both log densities are reported as 0.
ProposalOutcome uniform_propose(const Domain& domain, const Vec& x,
                                UniformMode mode, int component,
                                RandomSource& rng);

// --- kernel interface driven by the MH engine ---------------------------

enum class UpdateMode { Joint, Componentwise };

class ProposalKernel {
public:
    virtual ~ProposalKernel() = default;

    virtual UpdateMode mode() const = 0;

    /// Propose from `state`. `component` is the sub-step index in
    /// componentwise mode and is ignored in joint mode.
    virtual ProposalOutcome propose(const Vec& state, int component,
                                    RandomSource& rng) const = 0;

    virtual std::string name() const = 0;
};

/// SPInS joint kernel sampling a sector or hypercube in ambient coordinates.
std::unique_ptr<ProposalKernel> make_spins_joint_kernel(Domain domain,
                                                        SpinsConfig cfg);

/// SPInS joint kernel on the full k-simplex: removes a uniformly drawn
/// component, proposes on ProjectedSimplex(k-1), restores the component.
std::unique_ptr<ProposalKernel> make_simplex_spins_joint_kernel(
    int k, SpinsConfig cfg);

std::unique_ptr<ProposalKernel> make_spins_componentwise_kernel(
    SpinsConfig cfg);

std::unique_ptr<ProposalKernel> make_salt_kernel(SaltConfig cfg);

std::unique_ptr<ProposalKernel> make_dirichlet_kernel(DirichletConfig cfg);

std::unique_ptr<ProposalKernel> make_uniform_kernel(Domain domain,
                                                    UniformMode mode);

}  // namespace spins
