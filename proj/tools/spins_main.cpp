// Command line front end: dataset generation, experiment execution and
// trace summaries. Exit codes: 0 success, 1 validation error, 2 runtime
// failure.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "spins/error.hpp"
#include "spins/experiment.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    bool quiet = false;
};

spins::ExperimentConfig load_with_overrides(const CommonArgs& args,
                                            bool seed_is_data_seed) {
    auto cfg = spins::load_experiment_config(args.config_path);
    if (!args.out_dir.empty()) {
        cfg.output_dir = args.out_dir;
    }
    if (args.seed) {
        if (seed_is_data_seed) {
            cfg.data_seed = *args.seed;
        } else {
            cfg.chain.seed = *args.seed;
        }
    }
    return cfg;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "experiment config JSON")
        ->required();
    cmd->add_option("--out", args.out_dir, "override the output directory");
    cmd->add_option("--seed", args.seed,
                    "override the seed (dataset seed for generate, chain base "
                    "seed for run)");
    cmd->add_flag("--quiet", args.quiet, "suppress progress output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metropolis-Hastings sampling in constrained domains"};
    app.require_subcommand(1);

    CommonArgs generate_args;
    auto* generate = app.add_subcommand(
        "generate", "generate the configured synthetic dataset");
    add_common(generate, generate_args);

    CommonArgs run_args;
    auto* run = app.add_subcommand(
        "run", "run every configured sampler and write traces + report");
    add_common(run, run_args);

    auto* summarize = app.add_subcommand(
        "summarize", "recompute a comparison table from a report or traces");
    std::string report_path;
    std::vector<std::string> trace_paths;
    std::int64_t burn_in = 0;
    std::vector<double> ball_center;
    double ball_radius = 0.0;
    std::string json_out;
    bool summarize_quiet = false;
    summarize->add_option("--report", report_path, "report.json from `run`");
    summarize->add_option("--trace", trace_paths,
                          "trace CSV files (alternative to --report)");
    summarize->add_option("--burn-in", burn_in,
                          "burn-in for --trace summaries");
    summarize->add_option("--ball-center", ball_center,
                          "convergence ball center for --trace summaries");
    summarize->add_option("--ball-radius", ball_radius,
                          "convergence ball radius for --trace summaries");
    summarize->add_option("--json", json_out,
                          "also write the summary as JSON to this path");
    summarize->add_flag("--quiet", summarize_quiet,
                        "suppress the text table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            const auto cfg = load_with_overrides(generate_args, true);
            spins::run_generate(cfg, generate_args.quiet);
            return 0;
        }
        if (run->parsed()) {
            const auto cfg = load_with_overrides(run_args, false);
            const auto report = spins::run_experiment(cfg, run_args.quiet);
            if (!run_args.quiet) {
                std::cout << "report: " << report.report_file.string() << '\n';
            }
            return 0;
        }

        // summarize
        std::vector<spins::SummaryRow> rows;
        if (!report_path.empty()) {
            rows = spins::summarize_report(report_path);
        } else if (!trace_paths.empty()) {
            std::optional<spins::Ball> ball;
            if (!ball_center.empty()) {
                if (!(ball_radius > 0.0)) {
                    throw spins::ValidationError(
                        "summarize: --ball-center needs --ball-radius > 0");
                }
                ball = spins::Ball{ball_center, ball_radius};
            }
            std::vector<std::filesystem::path> paths(trace_paths.begin(),
                                                     trace_paths.end());
            rows = spins::summarize_traces(paths, burn_in, ball);
        } else {
            throw spins::ValidationError(
                "summarize: provide --report or --trace");
        }
        if (!summarize_quiet) {
            std::cout << spins::format_summary_table(rows);
        }
        if (!json_out.empty()) {
            std::ofstream out(json_out, std::ios::binary);
            if (!out) {
                throw spins::Error("summarize: cannot open " + json_out);
            }
            out << spins::summary_to_json(rows) << '\n';
        }
        return 0;
    } catch (const spins::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
