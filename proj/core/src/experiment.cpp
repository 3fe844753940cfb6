#include "spins/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "internal_math.hpp"
#include "spins/error.hpp"

namespace spins {

namespace {

using json = nlohmann::ordered_json;

json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open " + path.string());
    }
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) {
        throw ValidationError("invalid JSON in " + path.string());
    }
    return j;
}

const json& require_field(const json& j, const char* key,
                          const std::string& where) {
    if (!j.contains(key)) {
        throw ValidationError(where + ": missing field '" + key + "'");
    }
    return j.at(key);
}

double require_number(const json& j, const char* key,
                      const std::string& where) {
    const json& v = require_field(j, key, where);
    if (!v.is_number()) {
        throw ValidationError(where + ": field '" + key + "' must be a number");
    }
    return v.get<double>();
}

Vec require_vector(const json& j, const char* key, const std::string& where) {
    const json& v = require_field(j, key, where);
    if (!v.is_array() || v.empty()) {
        throw ValidationError(where + ": field '" + key +
                              "' must be a non-empty array");
    }
    Vec out;
    for (const auto& e : v) {
        if (!e.is_number()) {
            throw ValidationError(where + ": field '" + key +
                                  "' must hold numbers");
        }
        out.push_back(e.get<double>());
    }
    return out;
}

StateSpace parse_space(const json& j) {
    const std::string kind =
        require_field(j, "kind", "domain").get<std::string>();
    if (kind == "simplex") {
        const int k = static_cast<int>(require_number(j, "k", "domain"));
        if (k < 2) throw ValidationError("domain: simplex needs k >= 2");
        return SimplexSpace{k};
    }
    if (kind == "sector") {
        const int n = static_cast<int>(require_number(j, "n", "domain"));
        if (n < 1) throw ValidationError("domain: sector needs n >= 1");
        return Domain{SphereSector{n}};
    }
    if (kind == "cube") {
        const int n = static_cast<int>(require_number(j, "n", "domain"));
        const double edge = require_number(j, "edge", "domain");
        if (n < 1 || !(edge > 0.0)) {
            throw ValidationError("domain: cube needs n >= 1 and edge > 0");
        }
        return Domain{Hypercube{n, edge}};
    }
    throw ValidationError("domain: unknown kind '" + kind + "'");
}

DatasetGenerator parse_generator(const json& j, const StateSpace& space) {
    const std::string kind =
        require_field(j, "kind", "model").get<std::string>();
    const int dim = space_dimension(space);
    const bool simplex = std::holds_alternative<SimplexSpace>(space);

    if (kind == "additive_msn") {
        if (!simplex) {
            throw ValidationError("model: additive_msn requires the simplex");
        }
        MsnGenerator gen;
        gen.theta = require_vector(j, "theta", "model");
        gen.noise.location = require_vector(j, "xi", "model");
        gen.noise.slant = require_vector(j, "alpha", "model");
        const json& omega = require_field(j, "omega", "model");
        const auto k = static_cast<Eigen::Index>(gen.theta.size());
        if (!omega.is_array() ||
            static_cast<Eigen::Index>(omega.size()) != k) {
            throw ValidationError("model: omega must be a k x k matrix");
        }
        gen.noise.scale.resize(k, k);
        for (Eigen::Index r = 0; r < k; ++r) {
            const auto& row = omega.at(r);
            if (!row.is_array() ||
                static_cast<Eigen::Index>(row.size()) != k) {
                throw ValidationError("model: omega must be a k x k matrix");
            }
            for (Eigen::Index c = 0; c < k; ++c) {
                gen.noise.scale(r, c) = row.at(c).get<double>();
            }
        }
        if (static_cast<int>(gen.theta.size()) != dim ||
            gen.noise.location.size() != gen.theta.size() ||
            gen.noise.slant.size() != gen.theta.size()) {
            throw ValidationError("model: additive_msn dimensions disagree");
        }
        if (!is_simplex_point(gen.theta)) {
            throw ValidationError("model: theta must be a simplex point");
        }
        return gen;
    }
    if (kind == "multiplicative_gaussian") {
        if (!simplex) {
            throw ValidationError(
                "model: multiplicative_gaussian requires the simplex");
        }
        MultiplicativeGaussianGenerator gen;
        gen.theta = require_vector(j, "theta", "model");
        gen.sigma = require_number(j, "sigma", "model");
        if (static_cast<int>(gen.theta.size()) != dim ||
            !is_simplex_point(gen.theta) || !(gen.sigma > 0.0)) {
            throw ValidationError("model: bad multiplicative_gaussian spec");
        }
        return gen;
    }
    if (kind == "additive_gaussian") {
        if (simplex) {
            throw ValidationError(
                "model: additive_gaussian applies to sector or cube domains");
        }
        AdditiveGaussianGenerator gen;
        gen.theta = require_vector(j, "theta", "model");
        gen.sigma = require_number(j, "sigma", "model");
        const auto& domain = std::get<Domain>(space);
        if (static_cast<int>(gen.theta.size()) != dim ||
            !contains(domain, gen.theta) || !(gen.sigma > 0.0)) {
            throw ValidationError("model: bad additive_gaussian spec");
        }
        return gen;
    }
    if (kind == "ball_stick") {
        if (!simplex) {
            throw ValidationError("model: ball_stick requires the simplex");
        }
        BallStickGenerator gen;
        gen.f = require_vector(j, "f", "model");
        if (static_cast<int>(gen.f.size()) != dim ||
            !is_simplex_point(gen.f)) {
            throw ValidationError(
                "model: f must be a simplex point matching the domain");
        }
        const double snr = require_number(j, "snr", "model");
        const int signals =
            static_cast<int>(require_number(j, "signals", "model"));
        gen.config = make_default_ball_stick_config(
            signals, static_cast<int>(gen.f.size()) - 1, snr);
        if (j.contains("s0")) gen.config.s0 = j.at("s0").get<double>();
        if (j.contains("b_value")) {
            gen.config.b_values.assign(signals, j.at("b_value").get<double>());
        }
        if (j.contains("diffusivity")) {
            gen.config.diffusivity = j.at("diffusivity").get<double>();
        }
        if (j.contains("sticks")) {
            const auto& sticks = j.at("sticks");
            if (!sticks.is_array() ||
                sticks.size() != gen.f.size() - 1) {
                throw ValidationError("model: need one stick per f weight");
            }
            gen.config.sticks.clear();
            for (const auto& s : sticks) {
                gen.config.sticks.push_back(
                    {s.at("elevation").get<double>(),
                     s.at("azimuth").get<double>()});
            }
        }
        gen.config.sigma = gen.config.s0 / snr;
        validate_ball_stick_config(gen.config);
        return gen;
    }
    throw ValidationError("model: unknown kind '" + kind + "'");
}

Vec generator_truth(const DatasetGenerator& generator) {
    if (const auto* g = std::get_if<MsnGenerator>(&generator)) return g->theta;
    if (const auto* g =
            std::get_if<MultiplicativeGaussianGenerator>(&generator)) {
        return g->theta;
    }
    if (const auto* g = std::get_if<AdditiveGaussianGenerator>(&generator)) {
        return g->theta;
    }
    return std::get<BallStickGenerator>(generator).f;
}

void validate_sampler(const SamplerSpec& spec, const StateSpace& space) {
    const bool simplex = std::holds_alternative<SimplexSpace>(space);
    const bool cube =
        !simplex && std::holds_alternative<Hypercube>(std::get<Domain>(space));
    if (spec.kind == "spins_cw" || spec.kind == "salt" ||
        spec.kind == "dirichlet") {
        if (!simplex) {
            throw ValidationError("sampler '" + spec.kind +
                                  "' applies to the simplex only");
        }
    } else if (spec.kind == "spins_joint") {
        // valid everywhere
    } else if (spec.kind == "uniform_joint") {
        if (simplex) {
            throw ValidationError(
                "sampler 'uniform_joint' applies to sector or cube domains");
        }
    } else if (spec.kind == "uniform_cw") {
        if (!cube) {
            throw ValidationError(
                "sampler 'uniform_cw' applies to the hypercube only");
        }
    } else {
        throw ValidationError("unknown sampler kind '" + spec.kind + "'");
    }
    if (spec.kind != "uniform_joint" && spec.kind != "uniform_cw" &&
        !(spec.scale > 0.0)) {
        throw ValidationError("sampler '" + spec.kind +
                              "' needs a positive tuning scale");
    }
}

json diagnostics_to_json(const Diagnostics& d) {
    json j;
    j["acceptance_rate"] = d.acceptance_rate;
    j["ess"] = d.ess;
    j["posterior_mean"] = d.posterior_mean;
    j["posterior_sd"] = d.posterior_sd;
    if (d.iterations_to_ball) {
        j["iterations_to_ball"] = *d.iterations_to_ball;
    } else {
        j["iterations_to_ball"] = nullptr;
    }
    return j;
}

std::string sanitize_component(std::string s) {
    for (char& c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
    }
    return s;
}

}  // namespace

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    const json j = parse_json_file(path);
    ExperimentConfig cfg;
    cfg.raw_json = j.dump(2);
    cfg.name = j.value("name", path.stem().string());
    cfg.space = parse_space(require_field(j, "domain", cfg.name));
    cfg.generator =
        parse_generator(require_field(j, "model", cfg.name), cfg.space);
    cfg.observations =
        static_cast<int>(require_number(j, "observations", cfg.name));
    if (cfg.observations < 1) {
        throw ValidationError(cfg.name + ": observations must be positive");
    }
    cfg.data_seed = require_field(j, "data_seed", cfg.name).get<std::uint64_t>();
    cfg.dataset_file = j.value("dataset", cfg.name + "_data.csv");

    const json& samplers = require_field(j, "samplers", cfg.name);
    if (!samplers.is_array() || samplers.empty()) {
        throw ValidationError(cfg.name + ": samplers must be a non-empty list");
    }
    for (const auto& s : samplers) {
        SamplerSpec spec;
        spec.kind = require_field(s, "kind", "sampler").get<std::string>();
        for (const char* key : {"d", "h", "tau"}) {
            if (s.contains(key)) spec.scale = s.at(key).get<double>();
        }
        validate_sampler(spec, cfg.space);
        cfg.samplers.push_back(std::move(spec));
    }

    const json& chain = require_field(j, "chain", cfg.name);
    cfg.chain.iterations =
        static_cast<std::int64_t>(require_number(chain, "iterations", "chain"));
    cfg.chain.burn_in =
        static_cast<std::int64_t>(chain.value("burn_in", 0.0));
    cfg.chain.seed = require_field(chain, "seed", "chain").get<std::uint64_t>();
    cfg.chain.initial_state = require_vector(chain, "initial_state", "chain");
    if (cfg.chain.iterations <= 0 || cfg.chain.burn_in < 0 ||
        cfg.chain.burn_in >= cfg.chain.iterations) {
        throw ValidationError("chain: need 0 <= burn_in < iterations");
    }
    if (static_cast<int>(cfg.chain.initial_state.size()) !=
        space_dimension(cfg.space)) {
        throw ValidationError("chain: initial_state dimension mismatch");
    }
    if (!space_contains_interior(cfg.space, cfg.chain.initial_state)) {
        throw ValidationError(
            "chain: initial_state must lie strictly inside the domain");
    }

    if (j.contains("ball") && !j.at("ball").is_null()) {
        Ball ball;
        ball.center = require_vector(j.at("ball"), "center", "ball");
        ball.radius = require_number(j.at("ball"), "radius", "ball");
        if (static_cast<int>(ball.center.size()) !=
                space_dimension(cfg.space) ||
            !(ball.radius > 0.0)) {
            throw ValidationError("ball: bad center or radius");
        }
        cfg.convergence_ball = std::move(ball);
    } else {
        cfg.convergence_ball = Ball{generator_truth(cfg.generator), 0.05};
    }

    cfg.output_dir = j.value("output", std::string("out/") + cfg.name);
    return cfg;
}

std::unique_ptr<ProposalKernel> make_kernel(const StateSpace& space,
                                            const SamplerSpec& spec) {
    validate_sampler(spec, space);
    if (spec.kind == "spins_cw") {
        return make_spins_componentwise_kernel({spec.scale});
    }
    if (spec.kind == "salt") {
        return make_salt_kernel({spec.scale});
    }
    if (spec.kind == "dirichlet") {
        return make_dirichlet_kernel({spec.scale});
    }
    if (spec.kind == "spins_joint") {
        if (const auto* simplex = std::get_if<SimplexSpace>(&space)) {
            return make_simplex_spins_joint_kernel(simplex->k, {spec.scale});
        }
        return make_spins_joint_kernel(std::get<Domain>(space), {spec.scale});
    }
    if (spec.kind == "uniform_joint") {
        return make_uniform_kernel(std::get<Domain>(space),
                                   UniformMode::Joint);
    }
    return make_uniform_kernel(std::get<Domain>(space),
                               UniformMode::Componentwise);
}

TargetDensity make_target(const ExperimentConfig& cfg, const Dataset& data) {
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    const StateSpace space = cfg.space;

    // Flat prior on the state space in every study; the posterior is the
    // likelihood restricted to the (open) domain.
    if (const auto* gen = std::get_if<MsnGenerator>(&cfg.generator)) {
        const MsnParams params = gen->noise;
        return [space, data, params, neg_inf](const Vec& x) {
            if (!space_contains_interior(space, x)) return neg_inf;
            return loglik_additive_msn(x, data, params);
        };
    }
    if (const auto* gen =
            std::get_if<MultiplicativeGaussianGenerator>(&cfg.generator)) {
        const double sigma = gen->sigma;
        return [space, data, sigma, neg_inf](const Vec& x) {
            if (!space_contains_interior(space, x)) return neg_inf;
            return loglik_multiplicative_gaussian(x, data, sigma);
        };
    }
    if (const auto* gen =
            std::get_if<AdditiveGaussianGenerator>(&cfg.generator)) {
        const double sigma = gen->sigma;
        return [space, data, sigma, neg_inf](const Vec& x) {
            if (!space_contains_interior(space, x)) return neg_inf;
            return loglik_additive_gaussian(x, data, sigma);
        };
    }
    const BallStickConfig bs = std::get<BallStickGenerator>(cfg.generator).config;
    return [space, data, bs, neg_inf](const Vec& x) {
        if (!space_contains_interior(space, x)) return neg_inf;
        return loglik_ballstick(x, data, bs);
    };
}

GenerateResult run_generate(const ExperimentConfig& cfg, bool quiet) {
    std::filesystem::create_directories(cfg.output_dir);
    const Dataset data =
        generate_dataset(cfg.generator, cfg.observations, cfg.data_seed);
    GenerateResult result;
    result.csv_path = cfg.output_dir / cfg.dataset_file;
    write_dataset_csv(data, result.csv_path);
    result.meta_path = result.csv_path;
    result.meta_path.replace_extension(".meta.json");
    if (!quiet) {
        std::cout << "wrote " << data.observations.size() << " observations to "
                  << result.csv_path.string() << '\n';
    }
    return result;
}

RunReport run_experiment(const ExperimentConfig& cfg, bool quiet) {
    std::filesystem::create_directories(cfg.output_dir);
    const std::filesystem::path dataset_path = cfg.output_dir / cfg.dataset_file;
    Dataset data;
    if (std::filesystem::exists(dataset_path)) {
        data = read_dataset_csv(dataset_path);
        if (!quiet) {
            std::cout << "using existing dataset " << dataset_path.string()
                      << '\n';
        }
    } else {
        data = generate_dataset(cfg.generator, cfg.observations, cfg.data_seed);
        write_dataset_csv(data, dataset_path);
        if (!quiet) {
            std::cout << "generated dataset " << dataset_path.string() << '\n';
        }
    }

    const TargetDensity target = make_target(cfg, data);

    RunReport report;
    report.dataset_file = dataset_path;
    json report_json;
    report_json["name"] = cfg.name;
    report_json["dataset"] = dataset_path.string();
    report_json["burn_in"] = cfg.chain.burn_in;
    if (cfg.convergence_ball) {
        report_json["ball"] = {{"center", cfg.convergence_ball->center},
                               {"radius", cfg.convergence_ball->radius}};
    } else {
        report_json["ball"] = nullptr;
    }
    report_json["config"] = json::parse(cfg.raw_json);
    json sampler_array = json::array();

    for (std::size_t i = 0; i < cfg.samplers.size(); ++i) {
        const SamplerSpec& spec = cfg.samplers[i];
        const auto kernel = make_kernel(cfg.space, spec);
        ChainConfig chain_cfg = cfg.chain;
        chain_cfg.seed = cfg.chain.seed + i;

        const auto start = std::chrono::steady_clock::now();
        const Trace trace = run_chain(cfg.space, target, *kernel, chain_cfg);
        const auto stop = std::chrono::steady_clock::now();

        SamplerRun run;
        run.spec = spec;
        run.seed = chain_cfg.seed;
        run.trace_file =
            cfg.output_dir / ("trace_" + std::to_string(i) + "_" +
                              sanitize_component(spec.kind) + ".csv");
        write_trace_csv(trace, run.trace_file);
        run.diagnostics = compute_diagnostics(trace, cfg.chain.burn_in,
                                              cfg.convergence_ball);
        run.wall_seconds =
            std::chrono::duration<double>(stop - start).count();
        if (!quiet) {
            std::cout << spec.kind << ": acceptance "
                      << run.diagnostics.acceptance_rate << ", wrote "
                      << run.trace_file.string() << '\n';
        }

        json entry;
        entry["kind"] = spec.kind;
        entry["scale"] = spec.scale;
        entry["seed"] = run.seed;
        entry["trace"] = run.trace_file.string();
        entry["wall_seconds"] = run.wall_seconds;
        entry["diagnostics"] = diagnostics_to_json(run.diagnostics);
        sampler_array.push_back(std::move(entry));
        report.samplers.push_back(std::move(run));
    }
    report_json["samplers"] = std::move(sampler_array);

    report.report_file = cfg.output_dir / "report.json";
    std::ofstream out(report.report_file, std::ios::binary);
    if (!out) {
        throw Error("run_experiment: cannot open " +
                    report.report_file.string());
    }
    out << report_json.dump(2) << '\n';
    return report;
}

void write_trace_csv(const Trace& trace, const std::filesystem::path& path) {
    if (trace.states.empty()) {
        throw std::invalid_argument("write_trace_csv: empty trace");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("write_trace_csv: cannot open " + path.string());
    }
    const std::size_t k = trace.states.front().size();
    const std::size_t decisions = trace.decisions_per_iteration;
    out << "iter";
    for (std::size_t j = 0; j < k; ++j) out << ",theta_" << (j + 1);
    out << ",accepted,log_post\n";
    for (std::size_t t = 0; t < trace.states.size(); ++t) {
        out << (t + 1);
        for (std::size_t j = 0; j < k; ++j) {
            out << ',' << detail::format_double(trace.states[t][j]);
        }
        out << ',';
        for (std::size_t c = 0; c < decisions; ++c) {
            out << (trace.accepted[t * decisions + c] ? '1' : '0');
        }
        out << ',' << detail::format_double(trace.log_posterior[t]) << '\n';
    }
}

Trace read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("read_trace_csv: cannot open " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw Error("read_trace_csv: empty file " + path.string());
    }
    std::size_t columns = 1;
    for (char c : line) {
        if (c == ',') ++columns;
    }
    if (columns < 4) {
        throw Error("read_trace_csv: malformed header in " + path.string());
    }
    const std::size_t k = columns - 3;

    Trace trace;
    trace.decisions_per_iteration = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');  // iteration index
        Vec state(k);
        for (std::size_t j = 0; j < k; ++j) {
            if (!std::getline(ss, cell, ',')) {
                throw Error("read_trace_csv: short row in " + path.string());
            }
            state[j] = std::stod(cell);
        }
        if (!std::getline(ss, cell, ',')) {
            throw Error("read_trace_csv: short row in " + path.string());
        }
        if (trace.decisions_per_iteration == 0) {
            trace.decisions_per_iteration = static_cast<int>(cell.size());
        }
        for (char c : cell) {
            trace.accepted.push_back(c == '1' ? 1 : 0);
        }
        if (!std::getline(ss, cell, ',')) {
            throw Error("read_trace_csv: short row in " + path.string());
        }
        trace.log_posterior.push_back(std::stod(cell));
        trace.states.push_back(std::move(state));
    }
    if (trace.states.empty()) {
        throw Error("read_trace_csv: no rows in " + path.string());
    }
    return trace;
}

std::vector<SummaryRow> summarize_report(
    const std::filesystem::path& report_path) {
    const json report = parse_json_file(report_path);
    const auto burn_in = static_cast<std::int64_t>(report.value("burn_in", 0));
    std::optional<Ball> ball;
    if (report.contains("ball") && !report.at("ball").is_null()) {
        Ball b;
        b.center = report.at("ball").at("center").get<Vec>();
        b.radius = report.at("ball").at("radius").get<double>();
        ball = std::move(b);
    }
    std::vector<SummaryRow> rows;
    for (const auto& entry : require_field(report, "samplers", "report")) {
        const std::filesystem::path trace_path =
            entry.at("trace").get<std::string>();
        const Trace trace = read_trace_csv(trace_path);
        const Diagnostics diag = compute_diagnostics(trace, burn_in, ball);
        SummaryRow row;
        row.sampler = entry.at("kind").get<std::string>();
        row.acceptance_rate = diag.acceptance_rate;
        row.ess = diag.ess;
        row.posterior_mean = diag.posterior_mean;
        row.posterior_sd = diag.posterior_sd;
        row.iterations_to_ball = diag.iterations_to_ball;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SummaryRow> summarize_traces(
    const std::vector<std::filesystem::path>& trace_paths,
    std::int64_t burn_in, const std::optional<Ball>& ball) {
    std::vector<SummaryRow> rows;
    for (const auto& path : trace_paths) {
        const Trace trace = read_trace_csv(path);
        const Diagnostics diag = compute_diagnostics(trace, burn_in, ball);
        SummaryRow row;
        row.sampler = path.stem().string();
        row.acceptance_rate = diag.acceptance_rate;
        row.ess = diag.ess;
        row.posterior_mean = diag.posterior_mean;
        row.posterior_sd = diag.posterior_sd;
        row.iterations_to_ball = diag.iterations_to_ball;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_summary_table(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    std::size_t name_width = 8;
    for (const auto& row : rows) {
        name_width = std::max(name_width, row.sampler.size() + 2);
    }
    out << std::left;
    out.width(name_width);
    out << "sampler";
    out << "accept   min_ess    to_ball   posterior_mean (sd)\n";
    char buf[64];
    for (const auto& row : rows) {
        out.width(name_width);
        out << row.sampler;
        std::snprintf(buf, sizeof buf, "%-9.4f", row.acceptance_rate);
        out << buf;
        const double min_ess =
            row.ess.empty() ? 0.0
                            : *std::min_element(row.ess.begin(), row.ess.end());
        std::snprintf(buf, sizeof buf, "%-11.1f", min_ess);
        out << buf;
        if (row.iterations_to_ball) {
            std::snprintf(buf, sizeof buf, "%-10lld",
                          static_cast<long long>(*row.iterations_to_ball));
        } else {
            std::snprintf(buf, sizeof buf, "%-10s", "-");
        }
        out << buf;
        for (std::size_t j = 0; j < row.posterior_mean.size(); ++j) {
            std::snprintf(buf, sizeof buf, " %.4f(%.4f)",
                          row.posterior_mean[j], row.posterior_sd[j]);
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

std::string summary_to_json(const std::vector<SummaryRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json entry;
        entry["sampler"] = row.sampler;
        entry["acceptance_rate"] = row.acceptance_rate;
        entry["ess"] = row.ess;
        entry["posterior_mean"] = row.posterior_mean;
        entry["posterior_sd"] = row.posterior_sd;
        if (row.iterations_to_ball) {
            entry["iterations_to_ball"] = *row.iterations_to_ball;
        } else {
            entry["iterations_to_ball"] = nullptr;
        }
        out.push_back(std::move(entry));
    }
    return out.dump(2);
}

}  // namespace spins
