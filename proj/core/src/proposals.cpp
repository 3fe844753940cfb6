#include "spins/proposals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "internal_math.hpp"
#include "spins/error.hpp"

namespace spins {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_component(const Vec& theta, int i) {
    if (i < 0 || i >= static_cast<int>(theta.size())) {
        throw std::invalid_argument("proposal: component index out of range");
    }
}

double require_open_unit(double theta_i, const char* who) {
    if (!(theta_i > 0.0 && theta_i < 1.0)) {
        throw DegenerateStateError(std::string(who) +
                                   ": component must lie strictly in (0,1)");
    }
    return theta_i;
}

ProposalOutcome invalid_outcome(Vec candidate) {
    ProposalOutcome out;
    out.candidate = std::move(candidate);
    out.log_q_forward = kNegInf;
    out.log_q_reverse = kNegInf;
    out.valid = false;
    return out;
}

/// Insert the remainder without the nonnegativity check; used to report
/// out-of-domain joint candidates, which carry a negative weight.
Vec restore_component_unchecked(const Vec& theta_minus, int i) {
    Vec out;
    out.reserve(theta_minus.size() + 1);
    out.insert(out.end(), theta_minus.begin(), theta_minus.begin() + i);
    out.push_back(1.0 - sum(theta_minus));
    out.insert(out.end(), theta_minus.begin() + i, theta_minus.end());
    return out;
}

double logit(double t) { return std::log(t) - std::log1p(-t); }

double expit(double v) {
    if (v >= 0.0) {
        return 1.0 / (1.0 + std::exp(-v));
    }
    const double e = std::exp(v);
    return e / (1.0 + e);
}

}  // namespace

// --- SPInS joint ----------------------------------------------------------

ProposalOutcome spins_joint_propose_with_noise(const Domain& domain,
                                               const Vec& x,
                                               const SpinsConfig& cfg,
                                               const Vec& noise) {
    if (noise.size() != x.size()) {
        throw std::invalid_argument("spins_joint: noise dimension mismatch");
    }
    auto [alpha, face] = project_to_face(domain, x);
    const InversionSphere sphere{std::move(alpha), enveloping_radius(domain)};
    const Vec delta = invert(sphere, x);
    const double sd = eta(domain, sphere, delta) / cfg.d;

    Vec delta_star(delta.size());
    for (std::size_t j = 0; j < delta.size(); ++j) {
        delta_star[j] = delta[j] + sd * noise[j];
    }
    if (distance(delta_star, sphere.center) <= degeneracy_tolerance(sphere)) {
        // The step landed on the inversion center; its back image escapes
        // every bounded domain, so treat it as out of the image.
        return invalid_outcome(x);
    }
    Vec candidate = invert(sphere, delta_star);
    if (!contains(domain, candidate) ||
        boundary_distance(domain, candidate) <= interior_tolerance(domain)) {
        return invalid_outcome(std::move(candidate));
    }

    ProposalOutcome out;
    out.log_q_forward = spins_joint_log_density(domain, x, candidate, cfg);
    out.log_q_reverse = spins_joint_log_density(domain, candidate, x, cfg);
    out.candidate = std::move(candidate);
    out.valid = true;
    return out;
}

ProposalOutcome spins_joint_propose(const Domain& domain, const Vec& x,
                                    const SpinsConfig& cfg,
                                    RandomSource& rng) {
    Vec noise(x.size());
    for (double& z : noise) z = rng.normal();
    return spins_joint_propose_with_noise(domain, x, cfg, noise);
}

double spins_joint_log_density(const Domain& domain, const Vec& x_from,
                               const Vec& x_to, const SpinsConfig& cfg) {
    auto [alpha, face] = project_to_face(domain, x_from);
    const InversionSphere sphere{std::move(alpha), enveloping_radius(domain)};
    if (!contains(domain, x_to) ||
        distance(x_to, sphere.center) <= degeneracy_tolerance(sphere)) {
        return kNegInf;
    }
    const Vec delta_from = invert(sphere, x_from);
    const double sd = eta(domain, sphere, delta_from) / cfg.d;
    const Vec delta_to = invert(sphere, x_to);

    const auto n = static_cast<double>(x_from.size());
    const double d2 = squared_distance(delta_to, delta_from);
    const double log_gauss = -0.5 * n * detail::kLogTwoPi - n * std::log(sd) -
                             0.5 * d2 / (sd * sd);
    return log_gauss + std::log(inversion_abs_jacobian(sphere, x_to));
}

// --- SPInS componentwise ---------------------------------------------------

double spins_cw_transform(double theta_i) {
    return theta_i <= 0.5 ? 1.0 / theta_i : theta_i / (theta_i - 1.0);
}

double spins_cw_interval_radius(double theta_i) {
    return theta_i <= 0.5 ? (1.0 - theta_i) / theta_i
                          : theta_i / (1.0 - theta_i);
}

double spins_cw_back_map(double theta_i, double delta_star) {
    return theta_i <= 0.5 ? 1.0 / delta_star
                          : delta_star / (delta_star - 1.0);
}

double spins_cw_jacobian(double theta_i, double theta_star_i) {
    if (theta_i <= 0.5) {
        return 1.0 / (theta_star_i * theta_star_i);
    }
    const double g = theta_star_i - 1.0;
    return 1.0 / (g * g);
}

ProposalOutcome spins_cw_propose_with_noise(const Vec& theta, int i,
                                            const SpinsConfig& cfg,
                                            double noise) {
    check_component(theta, i);
    const double t = require_open_unit(theta[i], "spins_cw_propose");
    const double sd = spins_cw_interval_radius(t) / cfg.d;
    const double delta_star = spins_cw_transform(t) + sd * noise;

    // The image of (0,1) is (1, inf) on the lower branch and (-inf, 0) on
    // the upper branch; steps landing elsewhere map outside the interval.
    const bool in_image = t <= 0.5 ? delta_star > 1.0 : delta_star < 0.0;
    if (!in_image) {
        return invalid_outcome(theta);
    }
    const double t_star = spins_cw_back_map(t, delta_star);
    if (!(t_star > 0.0 && t_star < 1.0)) {
        return invalid_outcome(theta);
    }

    ProposalOutcome out;
    out.candidate = rescale_complement(theta, i, t_star);
    out.log_q_forward = spins_cw_log_density(t, t_star, cfg);
    out.log_q_reverse = spins_cw_log_density(t_star, t, cfg);
    out.valid = true;
    return out;
}

ProposalOutcome spins_cw_propose(const Vec& theta, int i,
                                 const SpinsConfig& cfg, RandomSource& rng) {
    return spins_cw_propose_with_noise(theta, i, cfg, rng.normal());
}

double spins_cw_log_density(double theta_i, double theta_star_i,
                            const SpinsConfig& cfg) {
    require_open_unit(theta_i, "spins_cw_log_density");
    require_open_unit(theta_star_i, "spins_cw_log_density");
    const double sd = spins_cw_interval_radius(theta_i) / cfg.d;
    // U is an involution on the origin's branch, so U^-1(theta*) = U(theta*).
    const double u = spins_cw_back_map(theta_i, theta_star_i);
    return detail::log_normal_pdf(u, spins_cw_transform(theta_i), sd) +
           std::log(spins_cw_jacobian(theta_i, theta_star_i));
}

// --- SALT -------------------------------------------------------------------

double salt_jacobian(double theta_star_i) {
    return 1.0 / (theta_star_i * (1.0 - theta_star_i));
}

ProposalOutcome salt_propose_with_noise(const Vec& theta, int i,
                                        const SaltConfig& cfg, double noise) {
    check_component(theta, i);
    const double t = require_open_unit(theta[i], "salt_propose");
    const double t_star = expit(logit(t) + cfg.h * noise);
    if (!(t_star > 0.0 && t_star < 1.0)) {
        // Only reachable by floating underflow at extreme draws.
        return invalid_outcome(theta);
    }
    ProposalOutcome out;
    out.candidate = rescale_complement(theta, i, t_star);
    out.log_q_forward = salt_log_density(t, t_star, cfg);
    out.log_q_reverse = salt_log_density(t_star, t, cfg);
    out.valid = true;
    return out;
}

ProposalOutcome salt_propose(const Vec& theta, int i, const SaltConfig& cfg,
                             RandomSource& rng) {
    return salt_propose_with_noise(theta, i, cfg, rng.normal());
}

double salt_log_density(double theta_i, double theta_star_i,
                        const SaltConfig& cfg) {
    require_open_unit(theta_i, "salt_log_density");
    require_open_unit(theta_star_i, "salt_log_density");
    return detail::log_normal_pdf(logit(theta_star_i), logit(theta_i), cfg.h) -
           std::log(theta_star_i) - std::log1p(-theta_star_i);
}

// --- adaptive Dirichlet -----------------------------------------------------

double dirichlet_rescale_lambda(const Vec& theta, const DirichletConfig& cfg) {
    double min_c = std::numeric_limits<double>::infinity();
    for (double v : theta) min_c = std::min(min_c, v);
    if (!(min_c > 0.0)) {
        throw DegenerateStateError(
            "dirichlet proposal: a component is zero or negative");
    }
    // Smallest integer m with 10^m >= 1/min; the epsilon keeps exact powers
    // of ten from rounding up.
    const double m = std::ceil(-std::log10(min_c) - 1e-9);
    return cfg.tau * std::pow(10.0, m);
}

ProposalOutcome dirichlet_propose(const Vec& theta,
                                  const DirichletConfig& cfg,
                                  RandomSource& rng) {
    const double lambda = dirichlet_rescale_lambda(theta, cfg);
    Vec concentration(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) {
        concentration[j] = lambda * theta[j];
    }
    Vec candidate = dirichlet_sample(rng, concentration);

    double min_c = std::numeric_limits<double>::infinity();
    for (double v : candidate) min_c = std::min(min_c, v);
    if (!(min_c > 1e-12) || !all_finite(candidate)) {
        return invalid_outcome(std::move(candidate));
    }
    ProposalOutcome out;
    out.log_q_forward = dirichlet_log_density(theta, candidate, cfg);
    out.log_q_reverse = dirichlet_log_density(candidate, theta, cfg);
    out.candidate = std::move(candidate);
    out.valid = true;
    return out;
}

double dirichlet_log_density(const Vec& theta_from, const Vec& theta_to,
                             const DirichletConfig& cfg) {
    if (theta_from.size() != theta_to.size()) {
        throw std::invalid_argument("dirichlet_log_density: size mismatch");
    }
    const double lambda = dirichlet_rescale_lambda(theta_from, cfg);
    double log_pdf = 0.0;
    double conc_total = 0.0;
    for (std::size_t j = 0; j < theta_from.size(); ++j) {
        if (!(theta_to[j] > 0.0)) return kNegInf;
        const double a = lambda * theta_from[j];
        conc_total += a;
        log_pdf += (a - 1.0) * std::log(theta_to[j]) - std::lgamma(a);
    }
    return log_pdf + std::lgamma(conc_total);
}

// --- uniform baselines -------------------------------------------------------

ProposalOutcome uniform_propose(const Domain& domain, const Vec& x,
                                UniformMode mode, int component,
                                RandomSource& rng) {
    if (static_cast<int>(x.size()) != dimension(domain)) {
        throw std::invalid_argument("uniform_propose: dimension mismatch");
    }
    ProposalOutcome out;
    if (const auto* cube = std::get_if<Hypercube>(&domain)) {
        if (mode == UniformMode::Joint) {
            Vec candidate(x.size());
            for (double& v : candidate) v = rng.uniform(0.0, cube->edge);
            out.candidate = std::move(candidate);
        } else {
            check_component(x, component);
            Vec candidate = x;
            candidate[component] = rng.uniform(0.0, cube->edge);
            out.candidate = std::move(candidate);
        }
    } else if (std::holds_alternative<SphereSector>(domain)) {
        if (mode != UniformMode::Joint) {
            throw std::invalid_argument(
                "uniform_propose: componentwise mode applies to the hypercube "
                "only");
        }
        Vec candidate(x.size());
        for (double& v : candidate) v = rng.uniform(0.0, 1.0);
        out.candidate = std::move(candidate);
    } else {
        throw std::invalid_argument(
            "uniform_propose: domain must be a sector or hypercube");
    }
    out.valid = contains(domain, out.candidate) &&
                boundary_distance(domain, out.candidate) >
                    interior_tolerance(domain);
    if (!out.valid) {
        out.log_q_forward = kNegInf;
        out.log_q_reverse = kNegInf;
    }
    return out;  // constant symmetric density: both log q are 0 when valid
}

// --- kernel adapters ----------------------------------------------------------

namespace {

class SpinsJointKernel final : public ProposalKernel {
public:
    SpinsJointKernel(Domain domain, SpinsConfig cfg)
        : domain_(std::move(domain)), cfg_(cfg) {}

    UpdateMode mode() const override { return UpdateMode::Joint; }

    ProposalOutcome propose(const Vec& state, int, RandomSource& rng) const
        override {
        return spins_joint_propose(domain_, state, cfg_, rng);
    }

    std::string name() const override { return "spins_joint"; }

private:
    Domain domain_;
    SpinsConfig cfg_;
};

class SimplexSpinsJointKernel final : public ProposalKernel {
public:
    SimplexSpinsJointKernel(int k, SpinsConfig cfg)
        : k_(k), projected_(ProjectedSimplex{k - 1}), cfg_(cfg) {
        if (k < 2) {
            throw std::invalid_argument(
                "simplex joint kernel needs at least two components");
        }
    }

    UpdateMode mode() const override { return UpdateMode::Joint; }

    ProposalOutcome propose(const Vec& state, int, RandomSource& rng) const
        override {
        if (static_cast<int>(state.size()) != k_) {
            throw std::invalid_argument(
                "simplex joint kernel: state dimension mismatch");
        }
        const int removed = static_cast<int>(rng.uniform_index(state.size()));
        const Vec projected = drop_component(state, removed);
        ProposalOutcome inner =
            spins_joint_propose(projected_, projected, cfg_, rng);
        ProposalOutcome out;
        out.removed_index = removed;
        out.valid = inner.valid;
        out.log_q_forward = inner.log_q_forward;
        out.log_q_reverse = inner.log_q_reverse;
        out.candidate = inner.valid
                            ? restore_component(inner.candidate, removed)
                            : restore_component_unchecked(inner.candidate,
                                                          removed);
        return out;
    }

    std::string name() const override { return "spins_joint"; }

private:
    int k_;
    Domain projected_;
    SpinsConfig cfg_;
};

class SpinsComponentwiseKernel final : public ProposalKernel {
public:
    explicit SpinsComponentwiseKernel(SpinsConfig cfg) : cfg_(cfg) {}

    UpdateMode mode() const override { return UpdateMode::Componentwise; }

    ProposalOutcome propose(const Vec& state, int component,
                            RandomSource& rng) const override {
        return spins_cw_propose(state, component, cfg_, rng);
    }

    std::string name() const override { return "spins_cw"; }

private:
    SpinsConfig cfg_;
};

class SaltKernel final : public ProposalKernel {
public:
    explicit SaltKernel(SaltConfig cfg) : cfg_(cfg) {}

    UpdateMode mode() const override { return UpdateMode::Componentwise; }

    ProposalOutcome propose(const Vec& state, int component,
                            RandomSource& rng) const override {
        return salt_propose(state, component, cfg_, rng);
    }

    std::string name() const override { return "salt"; }

private:
    SaltConfig cfg_;
};

class DirichletKernel final : public ProposalKernel {
public:
    explicit DirichletKernel(DirichletConfig cfg) : cfg_(cfg) {}

    UpdateMode mode() const override { return UpdateMode::Joint; }

    ProposalOutcome propose(const Vec& state, int, RandomSource& rng) const
        override {
        return dirichlet_propose(state, cfg_, rng);
    }

    std::string name() const override { return "dirichlet"; }

private:
    DirichletConfig cfg_;
};

class UniformKernel final : public ProposalKernel {
public:
    UniformKernel(Domain domain, UniformMode mode)
        : domain_(std::move(domain)), uniform_mode_(mode) {
        if (std::holds_alternative<ProjectedSimplex>(domain_)) {
            throw std::invalid_argument(
                "uniform kernel: domain must be a sector or hypercube");
        }
        if (uniform_mode_ == UniformMode::Componentwise &&
            !std::holds_alternative<Hypercube>(domain_)) {
            throw std::invalid_argument(
                "uniform kernel: componentwise mode applies to the hypercube "
                "only");
        }
    }

    UpdateMode mode() const override {
        return uniform_mode_ == UniformMode::Joint
                   ? UpdateMode::Joint
                   : UpdateMode::Componentwise;
    }

    ProposalOutcome propose(const Vec& state, int component,
                            RandomSource& rng) const override {
        return uniform_propose(domain_, state, uniform_mode_, component, rng);
    }

    std::string name() const override {
        return uniform_mode_ == UniformMode::Joint ? "uniform_joint"
                                                   : "uniform_cw";
    }

private:
    Domain domain_;
    UniformMode uniform_mode_;
};

}  // namespace

std::unique_ptr<ProposalKernel> make_spins_joint_kernel(Domain domain,
                                                        SpinsConfig cfg) {
    return std::make_unique<SpinsJointKernel>(std::move(domain), cfg);
}

std::unique_ptr<ProposalKernel> make_simplex_spins_joint_kernel(
    int k, SpinsConfig cfg) {
    return std::make_unique<SimplexSpinsJointKernel>(k, cfg);
}

std::unique_ptr<ProposalKernel> make_spins_componentwise_kernel(
    SpinsConfig cfg) {
    return std::make_unique<SpinsComponentwiseKernel>(cfg);
}

std::unique_ptr<ProposalKernel> make_salt_kernel(SaltConfig cfg) {
    return std::make_unique<SaltKernel>(cfg);
}

std::unique_ptr<ProposalKernel> make_dirichlet_kernel(DirichletConfig cfg) {
    return std::make_unique<DirichletKernel>(cfg);
}

std::unique_ptr<ProposalKernel> make_uniform_kernel(Domain domain,
                                                    UniformMode mode) {
    return std::make_unique<UniformKernel>(std::move(domain), mode);
}

}  // namespace spins
