#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "squidopt/baselines.hpp"
#include "squidopt/core.hpp"
#include "squidopt/ssa.hpp"

namespace squidopt {

/// Invalid experiment configuration (CLI exit code 2).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Algorithm { ssa, pso, ga };

std::string_view to_string(Algorithm algorithm) noexcept;
Algorithm parse_algorithm(std::string_view name);
/// "all" expands to ssa, pso, ga; otherwise a comma-separated list.
std::vector<Algorithm> parse_algorithm_list(std::string_view text);

struct ExperimentConfig {
    std::string function;
    std::optional<std::size_t> dim;
    std::vector<Algorithm> algorithms{Algorithm::ssa, Algorithm::pso, Algorithm::ga};
    std::size_t trials = 100;
    std::uint64_t base_seed = 0;
    std::optional<std::size_t> budget_evals = 50000;
    std::optional<double> budget_secs;
    double success_tolerance = 5e-7;
    std::size_t workers = 1;

    // Per-algorithm settings; their budget fields are replaced by the
    // experiment budget above.
    SsaParams ssa;
    PsoParams pso;
    GaParams ga;

    std::string output_csv;
    std::string output_json;

    void validate() const;
    Budget budget() const;
};

/// Sets one field by its config-file key (e.g. "trials", "ssa.alpha").
/// Throws ConfigError for unknown keys or unparsable values.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

struct TrialOutcome {
    std::uint64_t seed = 0;
    bool ok = true;
    double final_fitness = 0.0;
    std::size_t evaluations = 0;
    std::string diagnostic;
};

struct TrialStats {
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double std_dev = 0.0;  ///< sample (n-1) standard deviation; 0 when n == 1
    double success_rate = 0.0;
    /// Success rate from a normal model on mean and std_dev (informational).
    double normal_success_rate = 0.0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t failed = 0;
    bool single_trial = false;  ///< std_dev is the n == 1 convention
};

/// Statistics over completed trial finals. `failed` trials count against
/// the success rate but not against best/worst/mean/std_dev.
TrialStats compute_stats(std::span<const double> finals, double optimum_value, double tolerance,
                         std::size_t failed = 0);

/// Standard competition ranking (1, 1, 3): lower value is better, ties share
/// the lower rank, NaN sorts last.
std::vector<int> competition_ranks(std::span<const double> values);

struct AlgorithmReport {
    Algorithm algorithm = Algorithm::ssa;
    TrialStats stats;
    int rank = 0;
    std::vector<TrialOutcome> trials;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::string function;
    std::size_t dim = 0;
    double optimum_value = 0.0;
    std::vector<AlgorithmReport> reports;

    std::vector<int> ranks() const;
};

/// One run of `algorithm` with the experiment's parameters and budget.
OptResult run_single(Algorithm algorithm, const Objective& objective, const ExperimentConfig& config,
                     std::uint64_t seed, bool record_trace = false);

/// All trials for every configured algorithm, then statistics and ranks.
/// Trial k of algorithm a uses derive_trial_seed(base_seed, a, k).
ExperimentResult run_experiment(const ExperimentConfig& config);

struct SummaryRow {
    Algorithm algorithm = Algorithm::ssa;
    double average_rank = 0.0;
    int final_rank = 0;
    double pooled_success_rate = 0.0;
    double normal_success_rate = 0.0;  ///< mean of per-function normal-model rates
    std::size_t successes = 0;
    std::size_t trials = 0;
};

struct Summary {
    std::vector<SummaryRow> rows;
    bool has_tie = false;
};

/// Average rank per column over functions, and final ranks from those averages.
struct RankAggregate {
    std::vector<double> average;
    std::vector<int> final_rank;
    bool has_tie = false;
};

RankAggregate aggregate_ranks(std::span<const std::vector<int>> per_function_ranks);

/// Rank aggregate plus pooled success rates over every trial of every function.
/// All results must list the same algorithms in the same order.
Summary aggregate_summary(std::span<const ExperimentResult> results);

// Export -----------------------------------------------------------------------

/// I/O failure while writing or reading results; message names the path.
class ExportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kResultsCsvHeader =
    "function,dim,algorithm,trials,budget_evals,best,worst,mean,std_dev,success_rate,rank";

/// Shortest text for `value` with 17 significant digits.
std::string format_number(double value);

std::string results_csv(std::span<const ExperimentResult> results);
std::string results_json(std::span<const ExperimentResult> results);
std::string summary_csv(const Summary& summary);
std::string summary_json(const Summary& summary);

/// Writes CSV or JSON; picks the format from `format` ("csv" or "json").
void export_results(std::span<const ExperimentResult> results, std::string_view format,
                    const std::filesystem::path& path);

/// Re-reads a JSON file written by export_results. Stats and per-trial finals
/// round-trip exactly; the config echo is restored for known fields.
std::vector<ExperimentResult> read_results_json(const std::filesystem::path& path);

std::string trace_csv(const OptResult& result);
void export_trace(const OptResult& result, const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, std::string_view contents);

// Config files -------------------------------------------------------------------

/// Function entry of a suite: registry name with an optional dimension.
struct FunctionEntry {
    std::string name;
    std::optional<std::size_t> dim;
};

struct SuiteConfig {
    ExperimentConfig base;
    std::vector<FunctionEntry> functions;
};

/// Every setting of `config` as (key, text) pairs in config-file syntax;
/// `apply_setting` parses each text back to the same value. `workers` is
/// left out because it never changes results.
std::vector<std::pair<std::string, std::string>> config_settings(const ExperimentConfig& config);

/// Parses `key = value` lines ('#' starts a comment). Keys are the
/// ExperimentConfig field names; `function` takes a comma-separated list of
/// `name` or `name:dim`. Unknown keys and malformed lines throw ConfigError.
SuiteConfig parse_config(std::string_view text);
SuiteConfig load_config(const std::filesystem::path& path);

/// Runs every function of the suite in order.
std::vector<ExperimentResult> run_suite(const SuiteConfig& suite);

}  // namespace squidopt
