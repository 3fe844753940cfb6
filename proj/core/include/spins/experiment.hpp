#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spins/diagnostics.hpp"
#include "spins/models.hpp"

namespace spins {

/// One sampler to run: kind is one of spins_cw, spins_joint, salt,
/// dirichlet, uniform_joint, uniform_cw; scale carries d, h or tau and is
/// unused by the uniform kernels.
struct SamplerSpec {
    std::string kind;
    double scale = 0.0;
};

struct ExperimentConfig {
    std::string name;
    StateSpace space;
    DatasetGenerator generator;
    int observations = 0;
    std::uint64_t data_seed = 0;
    std::string dataset_file;  // relative to output_dir
    std::vector<SamplerSpec> samplers;
    ChainConfig chain;  // chain.seed is the base; sampler i runs at seed + i
    std::optional<Ball> convergence_ball;
    std::filesystem::path output_dir;
    std::string raw_json;  // config file contents, echoed into reports
};

/// Parse and validate a JSON experiment config. Throws ValidationError on
/// schema violations (unknown kinds, dimension mismatches, sampler kinds
/// that do not apply to the domain).
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

std::unique_ptr<ProposalKernel> make_kernel(const StateSpace& space,
                                            const SamplerSpec& spec);

/// Log posterior: model log likelihood plus a flat prior on the state space
/// (-inf outside it).
TargetDensity make_target(const ExperimentConfig& cfg, const Dataset& data);

struct GenerateResult {
    std::filesystem::path csv_path;
    std::filesystem::path meta_path;
};

/// Generate the configured dataset and write it under output_dir.
/// Idempotent per seed: rerunning produces byte-identical files.
GenerateResult run_generate(const ExperimentConfig& cfg, bool quiet = false);

struct SamplerRun {
    SamplerSpec spec;
    std::uint64_t seed = 0;
    std::filesystem::path trace_file;
    Diagnostics diagnostics;
    double wall_seconds = 0.0;
};

struct RunReport {
    std::filesystem::path report_file;
    std::filesystem::path dataset_file;
    std::vector<SamplerRun> samplers;
};

/// Run every configured sampler against the dataset (generating it first if
/// the file is missing), write one trace CSV per sampler plus report.json.
RunReport run_experiment(const ExperimentConfig& cfg, bool quiet = false);

// --- trace serialization --------------------------------------------------
//
// Header: iter,theta_1,...,theta_k,accepted,log_post. The accepted column
// holds one character per MH decision of the iteration ('1' accept), so a
// joint trace shows plain 0/1 and a componentwise trace a k-character mask.

void write_trace_csv(const Trace& trace, const std::filesystem::path& path);
Trace read_trace_csv(const std::filesystem::path& path);

// --- summaries --------------------------------------------------------------

struct SummaryRow {
    std::string sampler;
    double acceptance_rate = 0.0;
    std::vector<double> ess;
    std::vector<double> posterior_mean;
    std::vector<double> posterior_sd;
    std::optional<std::int64_t> iterations_to_ball;
};

/// Recompute diagnostics from the trace files referenced by a report,
/// using the burn-in and ball recorded there.
std::vector<SummaryRow> summarize_report(
    const std::filesystem::path& report_path);

std::vector<SummaryRow> summarize_traces(
    const std::vector<std::filesystem::path>& trace_paths,
    std::int64_t burn_in, const std::optional<Ball>& ball = {});

std::string format_summary_table(const std::vector<SummaryRow>& rows);
std::string summary_to_json(const std::vector<SummaryRow>& rows);

}  // namespace spins
