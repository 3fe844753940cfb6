#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>

#include "spins/random.hpp"
#include "spins/vec.hpp"

namespace spins {

/// Multivariate skew-normal parameters: density
///   f(y) = 2 phi_k(y - location; scale) Phi(slant^T w^-1 (y - location)),
/// with w = diag(sqrt(scale_jj)).
struct MsnParams {
    Vec location;
    Eigen::MatrixXd scale;
    Vec slant;
};

/// N observations in R^k plus a JSON meta record (generator kind,
/// parameters, seed) carried alongside the values.
struct Dataset {
    std::vector<Vec> observations;
    std::string meta;
};

struct StickAngles {
    double elevation = 0.0;  // polar angle from +z, radians
    double azimuth = 0.0;
};

/// Ball-and-stick signal model configuration. One entry of b_values and
/// gradients per measured signal; sticks.size() = K anisotropic compartments.
struct BallStickConfig {
    double s0 = 1.0;
    double diffusivity = 1.5e-3;
    std::vector<double> b_values;
    std::vector<std::array<double, 3>> gradients;
    std::vector<StickAngles> sticks;
    double sigma = 0.05;

    int stick_count() const { return static_cast<int>(sticks.size()); }
    int signal_count() const { return static_cast<int>(gradients.size()); }
};

/// Throws when gradients are not unit vectors or the counts disagree.
void validate_ball_stick_config(const BallStickConfig& cfg);

double msn_log_pdf(const Vec& y, const MsnParams& params);

/// Sum over observations of msn_log_pdf(y_i - theta).
double loglik_additive_msn(const Vec& theta, const Dataset& data,
                           const MsnParams& params);

/// Log likelihood of y_ij = theta_j * eps_ij with eps iid N(0, sigma^2),
/// up to an additive constant.
double loglik_multiplicative_gaussian(const Vec& theta, const Dataset& data,
                                      double sigma);

/// Gaussian log likelihood -sum_i |y_i - theta|^2 / (2 sigma^2), up to an
/// additive constant.
double loglik_additive_gaussian(const Vec& theta, const Dataset& data,
                                double sigma);

/// Unit direction (sin e cos a, sin e sin a, cos e).
std::array<double, 3> stick_direction(const StickAngles& angles);

/// Expected signal i:
///   s0 [ f_0 exp(-b l) + sum_j f_j exp(-b l (g_i . v_j)^2) ].
double ball_stick_mu(const BallStickConfig& cfg, const Vec& f, int i);

/// Gaussian log likelihood of the observed signals around ball_stick_mu,
/// with every parameter except f known.
double loglik_ballstick(const Vec& f, const Dataset& data,
                        const BallStickConfig& cfg);

/// n approximately evenly spread unit vectors (Fibonacci lattice).
std::vector<std::array<double, 3>> fibonacci_sphere_directions(int n);

/// Desk-scale defaults: s0 = 1, b = 1000, diffusivity = 1.5e-3, Fibonacci
/// gradients, fixed non-orthogonal stick angles, sigma = s0 / snr.
BallStickConfig make_default_ball_stick_config(int n_signals, int sticks,
                                               double snr);

// --- synthetic dataset generators ----------------------------------------

struct MsnGenerator {
    Vec theta;
    MsnParams noise;
};

struct MultiplicativeGaussianGenerator {
    Vec theta;
    double sigma = 10.0;
};

struct AdditiveGaussianGenerator {
    Vec theta;
    double sigma = 1.0;
};

/// Rician corruption of ball-and-stick signals:
/// S_i = sqrt((mu_i + e1)^2 + e2^2), e ~ N(0, sigma^2).
struct BallStickGenerator {
    Vec f;
    BallStickConfig config;
};

using DatasetGenerator =
    std::variant<MsnGenerator, MultiplicativeGaussianGenerator,
                 AdditiveGaussianGenerator, BallStickGenerator>;

/// Draw `count` observations; deterministic per seed. For the ball-stick
/// generator `count` must equal the configured signal count and each row
/// holds one signal.
Dataset generate_dataset(const DatasetGenerator& generator, int count,
                         std::uint64_t seed);

/// One observation per row, header y_1..y_k, full double precision; the
/// meta JSON is written next to the CSV with extension ".meta.json".
void write_dataset_csv(const Dataset& data,
                       const std::filesystem::path& csv_path);

Dataset read_dataset_csv(const std::filesystem::path& csv_path);

}  // namespace spins
