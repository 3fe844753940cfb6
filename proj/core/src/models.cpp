#include "spins/models.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "internal_math.hpp"
#include "spins/error.hpp"

namespace spins {

namespace {

using json = nlohmann::ordered_json;

Eigen::VectorXd to_eigen(const Vec& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(),
                                             static_cast<Eigen::Index>(v.size()));
}

/// Pieces of the skew-normal density that do not depend on the data point.
struct MsnDensity {
    Eigen::LLT<Eigen::MatrixXd> chol;
    Eigen::VectorXd location;
    Eigen::VectorXd slant_over_omega;  // slant_j / sqrt(scale_jj)
    double log_norm = 0.0;             // log 2 - k/2 log(2 pi) - log|L|
};

MsnDensity prepare_msn(const MsnParams& params) {
    const auto k = static_cast<Eigen::Index>(params.location.size());
    if (params.scale.rows() != k || params.scale.cols() != k ||
        static_cast<Eigen::Index>(params.slant.size()) != k) {
        throw std::invalid_argument("msn: parameter dimensions disagree");
    }
    MsnDensity d;
    d.chol.compute(params.scale);
    if (d.chol.info() != Eigen::Success) {
        throw NonSpdScaleError("msn: scale matrix is not positive definite");
    }
    d.location = to_eigen(params.location);
    d.slant_over_omega.resize(k);
    double log_det_l = 0.0;
    const auto& l = d.chol.matrixL();
    for (Eigen::Index j = 0; j < k; ++j) {
        d.slant_over_omega[j] =
            params.slant[j] / std::sqrt(params.scale(j, j));
        log_det_l += std::log(l(j, j));
    }
    d.log_norm = std::numbers::ln2_v<double> -
                 0.5 * static_cast<double>(k) * detail::kLogTwoPi - log_det_l;
    return d;
}

double msn_log_pdf_prepared(const MsnDensity& d, const Eigen::VectorXd& y) {
    const Eigen::VectorXd z = y - d.location;
    const Eigen::VectorXd w = d.chol.matrixL().solve(z);
    const double quad = w.squaredNorm();
    const double t = d.slant_over_omega.dot(z);
    return d.log_norm - 0.5 * quad + detail::log_normal_cdf(t);
}

void check_data_width(const Dataset& data, std::size_t k, const char* who) {
    if (data.observations.empty()) {
        throw std::invalid_argument(std::string(who) + ": empty dataset");
    }
    for (const Vec& row : data.observations) {
        if (row.size() != k) {
            throw std::invalid_argument(std::string(who) +
                                        ": observation width mismatch");
        }
    }
}

/// Skewness direction of the standardized skew normal:
/// delta = corr * slant / sqrt(1 + slant' corr slant).
Eigen::VectorXd msn_delta(const Eigen::MatrixXd& corr,
                          const Eigen::VectorXd& slant) {
    const Eigen::VectorXd cs = corr * slant;
    return cs / std::sqrt(1.0 + slant.dot(cs));
}

json dataset_meta(const char* kind, std::uint64_t seed, int count,
                  json parameters) {
    json meta;
    meta["kind"] = kind;
    meta["seed"] = seed;
    meta["count"] = count;
    meta["parameters"] = std::move(parameters);
    return meta;
}

}  // namespace

void validate_ball_stick_config(const BallStickConfig& cfg) {
    if (cfg.signal_count() == 0 ||
        cfg.b_values.size() != cfg.gradients.size()) {
        throw std::invalid_argument(
            "ball-stick: need one b-value per gradient");
    }
    if (cfg.sticks.empty()) {
        throw std::invalid_argument("ball-stick: need at least one stick");
    }
    if (!(cfg.s0 > 0.0) || !(cfg.sigma > 0.0) || !(cfg.diffusivity > 0.0)) {
        throw std::invalid_argument(
            "ball-stick: s0, sigma and diffusivity must be positive");
    }
    for (const auto& g : cfg.gradients) {
        const double n2 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
        if (std::abs(n2 - 1.0) > 2e-10) {
            throw std::invalid_argument(
                "ball-stick: gradients must be unit vectors");
        }
    }
}

double msn_log_pdf(const Vec& y, const MsnParams& params) {
    if (y.size() != params.location.size()) {
        throw std::invalid_argument("msn_log_pdf: dimension mismatch");
    }
    return msn_log_pdf_prepared(prepare_msn(params), to_eigen(y));
}

double loglik_additive_msn(const Vec& theta, const Dataset& data,
                           const MsnParams& params) {
    check_data_width(data, theta.size(), "loglik_additive_msn");
    if (theta.size() != params.location.size()) {
        throw std::invalid_argument("loglik_additive_msn: dimension mismatch");
    }
    const MsnDensity density = prepare_msn(params);
    const Eigen::VectorXd t = to_eigen(theta);
    double total = 0.0;
    Eigen::VectorXd residual(t.size());
    for (const Vec& row : data.observations) {
        residual = to_eigen(row) - t;
        total += msn_log_pdf_prepared(density, residual);
    }
    return total;
}

double loglik_multiplicative_gaussian(const Vec& theta, const Dataset& data,
                                      double sigma) {
    check_data_width(data, theta.size(), "loglik_multiplicative_gaussian");
    for (double v : theta) {
        if (!(v > 0.0)) {
            throw DegenerateStateError(
                "loglik_multiplicative_gaussian: scale components must be "
                "positive");
        }
    }
    // y_j = theta_j eps_j with eps ~ N(0, sigma^2), so y_j ~ N(0, (sigma
    // theta_j)^2); the -log sqrt(2 pi) constant is dropped.
    double total = 0.0;
    const auto n = static_cast<double>(data.observations.size());
    for (std::size_t j = 0; j < theta.size(); ++j) {
        const double s = sigma * theta[j];
        double ss = 0.0;
        for (const Vec& row : data.observations) ss += row[j] * row[j];
        total += -n * std::log(s) - ss / (2.0 * s * s);
    }
    return total;
}

double loglik_additive_gaussian(const Vec& theta, const Dataset& data,
                                double sigma) {
    check_data_width(data, theta.size(), "loglik_additive_gaussian");
    double ss = 0.0;
    for (const Vec& row : data.observations) {
        ss += squared_distance(row, theta);
    }
    return -ss / (2.0 * sigma * sigma);
}

std::array<double, 3> stick_direction(const StickAngles& angles) {
    const double se = std::sin(angles.elevation);
    return {se * std::cos(angles.azimuth), se * std::sin(angles.azimuth),
            std::cos(angles.elevation)};
}

double ball_stick_mu(const BallStickConfig& cfg, const Vec& f, int i) {
    const double attenuation = cfg.b_values[i] * cfg.diffusivity;
    double signal = f[0] * std::exp(-attenuation);
    const auto& g = cfg.gradients[i];
    for (int j = 0; j < cfg.stick_count(); ++j) {
        const auto v = stick_direction(cfg.sticks[j]);
        const double align = g[0] * v[0] + g[1] * v[1] + g[2] * v[2];
        signal += f[j + 1] * std::exp(-attenuation * align * align);
    }
    return cfg.s0 * signal;
}

double loglik_ballstick(const Vec& f, const Dataset& data,
                        const BallStickConfig& cfg) {
    check_data_width(data, 1, "loglik_ballstick");
    if (static_cast<int>(f.size()) != cfg.stick_count() + 1) {
        throw std::invalid_argument(
            "loglik_ballstick: f must have one weight per compartment");
    }
    if (static_cast<int>(data.observations.size()) != cfg.signal_count()) {
        throw std::invalid_argument(
            "loglik_ballstick: signal count mismatch");
    }
    double ss = 0.0;
    for (int i = 0; i < cfg.signal_count(); ++i) {
        const double r = data.observations[i][0] - ball_stick_mu(cfg, f, i);
        ss += r * r;
    }
    return -ss / (2.0 * cfg.sigma * cfg.sigma);
}

std::vector<std::array<double, 3>> fibonacci_sphere_directions(int n) {
    if (n <= 0) {
        throw std::invalid_argument("fibonacci_sphere_directions: n > 0");
    }
    const double golden_angle =
        std::numbers::pi_v<double> * (3.0 - std::sqrt(5.0));
    std::vector<std::array<double, 3>> dirs(n);
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / static_cast<double>(n);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        std::array<double, 3> v{rho * std::cos(phi), rho * std::sin(phi), z};
        const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        for (double& c : v) c /= len;
        dirs[i] = v;
    }
    return dirs;
}

BallStickConfig make_default_ball_stick_config(int n_signals, int sticks,
                                               double snr) {
    if (sticks < 1 || sticks > 4) {
        throw std::invalid_argument(
            "make_default_ball_stick_config: 1 to 4 sticks supported");
    }
    if (!(snr > 0.0)) {
        throw std::invalid_argument(
            "make_default_ball_stick_config: snr must be positive");
    }
    // Fixed, mutually non-orthogonal principal directions.
    static const StickAngles kAngles[4] = {
        {1.0, 0.5}, {1.8, 2.4}, {0.5, 4.3}, {2.2, 5.5}};
    BallStickConfig cfg;
    cfg.s0 = 1.0;
    cfg.diffusivity = 1.5e-3;
    cfg.b_values.assign(n_signals, 1000.0);
    cfg.gradients = fibonacci_sphere_directions(n_signals);
    cfg.sticks.assign(kAngles, kAngles + sticks);
    cfg.sigma = cfg.s0 / snr;
    validate_ball_stick_config(cfg);
    return cfg;
}

Dataset generate_dataset(const DatasetGenerator& generator, int count,
                         std::uint64_t seed) {
    if (count <= 0) {
        throw std::invalid_argument("generate_dataset: count must be positive");
    }
    RandomSource rng(seed);
    Dataset data;
    data.observations.reserve(count);

    if (const auto* gen = std::get_if<MsnGenerator>(&generator)) {
        const auto k = static_cast<Eigen::Index>(gen->theta.size());
        const MsnDensity density = prepare_msn(gen->noise);  // validates
        Eigen::VectorXd omega(k);
        for (Eigen::Index j = 0; j < k; ++j) {
            omega[j] = std::sqrt(gen->noise.scale(j, j));
        }
        const Eigen::MatrixXd corr =
            omega.cwiseInverse().asDiagonal() * gen->noise.scale *
            omega.cwiseInverse().asDiagonal();
        const Eigen::VectorXd delta = msn_delta(corr, to_eigen(gen->noise.slant));
        const Eigen::MatrixXd residual_cov =
            corr - delta * delta.transpose();
        Eigen::LLT<Eigen::MatrixXd> residual_chol(residual_cov);
        if (residual_chol.info() != Eigen::Success) {
            throw NonSpdScaleError(
                "msn generator: residual covariance is not positive definite");
        }
        const Eigen::MatrixXd l = residual_chol.matrixL();
        Eigen::VectorXd z(k);
        for (int i = 0; i < count; ++i) {
            const double z0 = std::abs(rng.normal());
            for (Eigen::Index j = 0; j < k; ++j) z[j] = rng.normal();
            const Eigen::VectorXd u = delta * z0 + l * z;
            Vec row(k);
            for (Eigen::Index j = 0; j < k; ++j) {
                row[j] = gen->theta[j] + gen->noise.location[j] +
                         omega[j] * u[j];
            }
            data.observations.push_back(std::move(row));
        }
        json params;
        params["theta"] = gen->theta;
        params["xi"] = gen->noise.location;
        json omega_rows = json::array();
        for (Eigen::Index r = 0; r < k; ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < k; ++c) {
                row.push_back(gen->noise.scale(r, c));
            }
            omega_rows.push_back(std::move(row));
        }
        params["omega"] = std::move(omega_rows);
        params["alpha"] = gen->noise.slant;
        data.meta =
            dataset_meta("additive_msn", seed, count, std::move(params))
                .dump(2);
        return data;
    }

    if (const auto* gen =
            std::get_if<MultiplicativeGaussianGenerator>(&generator)) {
        for (int i = 0; i < count; ++i) {
            Vec row(gen->theta.size());
            for (std::size_t j = 0; j < row.size(); ++j) {
                row[j] = gen->theta[j] * rng.normal(0.0, gen->sigma);
            }
            data.observations.push_back(std::move(row));
        }
        json params;
        params["theta"] = gen->theta;
        params["sigma"] = gen->sigma;
        data.meta = dataset_meta("multiplicative_gaussian", seed, count,
                                 std::move(params))
                        .dump(2);
        return data;
    }

    if (const auto* gen = std::get_if<AdditiveGaussianGenerator>(&generator)) {
        for (int i = 0; i < count; ++i) {
            Vec row(gen->theta.size());
            for (std::size_t j = 0; j < row.size(); ++j) {
                row[j] = gen->theta[j] + rng.normal(0.0, gen->sigma);
            }
            data.observations.push_back(std::move(row));
        }
        json params;
        params["theta"] = gen->theta;
        params["sigma"] = gen->sigma;
        data.meta = dataset_meta("additive_gaussian", seed, count,
                                 std::move(params))
                        .dump(2);
        return data;
    }

    const auto& gen = std::get<BallStickGenerator>(generator);
    validate_ball_stick_config(gen.config);
    if (count != gen.config.signal_count()) {
        throw std::invalid_argument(
            "generate_dataset: ball-stick count must equal the signal count");
    }
    if (static_cast<int>(gen.f.size()) != gen.config.stick_count() + 1) {
        throw std::invalid_argument(
            "generate_dataset: f must have one weight per compartment");
    }
    for (int i = 0; i < count; ++i) {
        const double mu = ball_stick_mu(gen.config, gen.f, i);
        const double e1 = rng.normal(0.0, gen.config.sigma);
        const double e2 = rng.normal(0.0, gen.config.sigma);
        data.observations.push_back({std::hypot(mu + e1, e2)});
    }
    json params;
    params["f"] = gen.f;
    params["s0"] = gen.config.s0;
    params["diffusivity"] = gen.config.diffusivity;
    params["b_value"] = gen.config.b_values.front();
    params["sigma"] = gen.config.sigma;
    params["snr"] = gen.config.s0 / gen.config.sigma;
    json sticks = json::array();
    for (const auto& s : gen.config.sticks) {
        sticks.push_back({{"elevation", s.elevation}, {"azimuth", s.azimuth}});
    }
    params["sticks"] = std::move(sticks);
    data.meta =
        dataset_meta("ball_stick", seed, count, std::move(params)).dump(2);
    return data;
}

void write_dataset_csv(const Dataset& data,
                       const std::filesystem::path& csv_path) {
    if (data.observations.empty()) {
        throw std::invalid_argument("write_dataset_csv: empty dataset");
    }
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) {
        throw Error("write_dataset_csv: cannot open " + csv_path.string());
    }
    const std::size_t k = data.observations.front().size();
    for (std::size_t j = 0; j < k; ++j) {
        out << (j ? ",y_" : "y_") << (j + 1);
    }
    out << '\n';
    for (const Vec& row : data.observations) {
        for (std::size_t j = 0; j < k; ++j) {
            if (j) out << ',';
            out << detail::format_double(row[j]);
        }
        out << '\n';
    }
    if (!data.meta.empty()) {
        std::filesystem::path meta_path = csv_path;
        meta_path.replace_extension(".meta.json");
        std::ofstream meta(meta_path, std::ios::binary);
        if (!meta) {
            throw Error("write_dataset_csv: cannot open " +
                        meta_path.string());
        }
        meta << data.meta << '\n';
    }
}

Dataset read_dataset_csv(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) {
        throw Error("read_dataset_csv: cannot open " + csv_path.string());
    }
    Dataset data;
    std::string line;
    if (!std::getline(in, line)) {
        throw Error("read_dataset_csv: empty file " + csv_path.string());
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Vec row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        data.observations.push_back(std::move(row));
    }
    std::filesystem::path meta_path = csv_path;
    meta_path.replace_extension(".meta.json");
    if (std::filesystem::exists(meta_path)) {
        std::ifstream meta(meta_path);
        std::stringstream buffer;
        buffer << meta.rdbuf();
        data.meta = buffer.str();
        while (!data.meta.empty() && data.meta.back() == '\n') {
            data.meta.pop_back();
        }
    }
    return data;
}

}  // namespace spins
