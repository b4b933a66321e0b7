// squidopt: run SSA / PSO / GA experiments on the benchmark registry.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime abort
// (non-finite objective value).

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "squidopt/benchmarks.hpp"
#include "squidopt/harness.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct RunOptions {
    std::string function;
    std::optional<std::size_t> dim;
    std::string algo = "all";
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::size_t budget_evals = 50000;
    std::optional<double> budget_secs;
    double tolerance = 5e-7;
    std::size_t workers = 1;
    std::vector<std::string> settings;
    std::string out_csv;
    std::string out_json;
};

struct TraceOptions {
    std::string function;
    std::optional<std::size_t> dim;
    std::string algo = "ssa";
    std::uint64_t seed = 0;
    std::size_t budget_evals = 5000;
    std::vector<std::string> settings;
    std::string out;
};

struct SuiteOptions {
    std::string config;
    std::string out_dir;
};

void apply_overrides(squidopt::ExperimentConfig& cfg, const std::vector<std::string>& settings) {
    for (const auto& s : settings) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw squidopt::ConfigError("--set expects key=value, got '" + s + "'");
        squidopt::apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
    }
}

void print_table(const squidopt::ExperimentResult& r) {
    std::printf("%s (d=%zu, optimum %.6g)\n", r.function.c_str(), r.dim, r.optimum_value);
    std::printf("  %-4s %12s %12s %12s %12s %8s %5s\n", "alg", "best", "worst", "mean", "std_dev", "success", "rank");
    for (const auto& a : r.reports) {
        std::printf("  %-4s %12.4e %12.4e %12.4e %12.4e %7.2f%% %5d%s\n", std::string(to_string(a.algorithm)).c_str(),
                    a.stats.best, a.stats.worst, a.stats.mean, a.stats.std_dev, 100.0 * a.stats.success_rate, a.rank,
                    a.stats.single_trial ? "  (single trial: std_dev set to 0)" : "");
        if (a.stats.failed)
            std::printf("       %zu trial(s) aborted, first: %s\n", a.stats.failed,
                        [&] {
                            for (const auto& t : a.trials)
                                if (!t.ok) return t.diagnostic;
                            return std::string();
                        }()
                            .c_str());
    }
}

bool any_failed(const std::vector<squidopt::ExperimentResult>& results) {
    for (const auto& r : results)
        for (const auto& a : r.reports)
            if (a.stats.failed) return true;
    return false;
}

int cmd_run(const RunOptions& o) {
    squidopt::ExperimentConfig cfg;
    cfg.function = o.function;
    cfg.dim = o.dim;
    cfg.algorithms = squidopt::parse_algorithm_list(o.algo);
    cfg.trials = o.trials;
    cfg.base_seed = o.seed;
    cfg.budget_evals = o.budget_evals;
    cfg.budget_secs = o.budget_secs;
    cfg.success_tolerance = o.tolerance;
    cfg.workers = o.workers;
    cfg.output_csv = o.out_csv;
    cfg.output_json = o.out_json;
    apply_overrides(cfg, o.settings);

    std::vector<squidopt::ExperimentResult> results{squidopt::run_experiment(cfg)};
    print_table(results.front());
    if (!o.out_csv.empty()) squidopt::export_results(results, "csv", o.out_csv);
    if (!o.out_json.empty()) squidopt::export_results(results, "json", o.out_json);
    return any_failed(results) ? kExitRuntime : 0;
}

int cmd_trace(const TraceOptions& o) {
    squidopt::ExperimentConfig cfg;
    cfg.function = o.function;
    cfg.dim = o.dim;
    cfg.budget_evals = o.budget_evals;
    apply_overrides(cfg, o.settings);
    cfg.validate();
    const squidopt::Algorithm alg = squidopt::parse_algorithm(o.algo);
    const squidopt::Objective objective = [&] {
        try {
            return squidopt::bench::registry_lookup(cfg.function, cfg.dim);
        } catch (const std::invalid_argument& e) {
            throw squidopt::ConfigError(e.what());
        }
    }();
    const squidopt::OptResult result = squidopt::run_single(alg, objective, cfg, o.seed, true);
    squidopt::export_trace(result, o.out);
    std::printf("%s on %s: best %.10g after %zu evaluations, %zu generations; %zu trace rows -> %s\n",
                o.algo.c_str(), objective.name().c_str(), result.best_fitness, result.evaluations, result.generations,
                result.trace->size(), o.out.c_str());
    return 0;
}

int cmd_suite(const SuiteOptions& o) {
    const squidopt::SuiteConfig suite = squidopt::load_config(o.config);
    suite.base.validate();
    const std::filesystem::path dir(o.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw squidopt::ExportError("cannot create " + dir.string() + ": " + ec.message());

    const std::vector<squidopt::ExperimentResult> results = squidopt::run_suite(suite);
    for (const auto& r : results) print_table(r);
    squidopt::export_results(results, "csv", dir / "results.csv");
    squidopt::export_results(results, "json", dir / "results.json");

    const squidopt::Summary summary = squidopt::aggregate_summary(results);
    squidopt::write_text_file(dir / "summary.csv", squidopt::summary_csv(summary));
    squidopt::write_text_file(dir / "summary.json", squidopt::summary_json(summary));
    std::printf("\nsummary%s\n", summary.has_tie ? " (tie in final ranks)" : "");
    std::printf("  %-4s %8s %6s %10s %10s\n", "alg", "avg rank", "final", "success", "normal");
    for (const auto& row : summary.rows)
        std::printf("  %-4s %8.2f %6d %9.2f%% %9.2f%%\n", std::string(to_string(row.algorithm)).c_str(),
                    row.average_rank, row.final_rank, 100.0 * row.pooled_success_rate,
                    100.0 * row.normal_success_rate);
    return any_failed(results) ? kExitRuntime : 0;
}

int cmd_list() {
    std::printf("%-16s %-8s %-8s %-22s %s\n", "name", "dim", "default", "bounds", "optimum");
    for (const auto& spec : squidopt::bench::registry()) {
        char bounds[64];
        std::snprintf(bounds, sizeof bounds, "[%g, %g]", spec.lower, spec.upper);
        const squidopt::Objective obj = squidopt::bench::registry_lookup(spec.name);
        std::printf("%-16s %-8s %-8zu %-22s %.10g  (%s)\n", spec.name.c_str(), spec.variable_dim ? "variable" : "fixed",
                    spec.default_dim, bounds, obj.known_optimum()->value, spec.optimum_note.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparkling Squid Algorithm with PSO and GA baselines"};
    app.require_subcommand(1);

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Repeated seeded trials on one function");
    run_cmd->add_option("--function", run.function, "Benchmark name")->required();
    run_cmd->add_option("--dim", run.dim, "Dimension (variable-dimension functions only)");
    run_cmd->add_option("--algo", run.algo, "ssa, pso, ga, a comma list, or all")->capture_default_str();
    run_cmd->add_option("--trials", run.trials, "Trials per algorithm")->capture_default_str();
    run_cmd->add_option("--seed", run.seed, "Base seed")->capture_default_str();
    run_cmd->add_option("--budget-evals", run.budget_evals, "Evaluations per trial")->capture_default_str();
    run_cmd->add_option("--budget-secs", run.budget_secs, "Wall-time cap per trial");
    run_cmd->add_option("--tolerance", run.tolerance, "Success tolerance")->capture_default_str();
    run_cmd->add_option("--workers", run.workers, "Parallel trial workers")->capture_default_str();
    run_cmd->add_option("--set", run.settings, "Config override key=value (repeatable)");
    run_cmd->add_option("--out", run.out_csv, "CSV output path");
    run_cmd->add_option("--json", run.out_json, "JSON output path");

    TraceOptions trace;
    auto* trace_cmd = app.add_subcommand("trace", "Record per-generation positions of one run");
    trace_cmd->add_option("--function", trace.function, "Benchmark name")->required();
    trace_cmd->add_option("--dim", trace.dim, "Dimension");
    trace_cmd->add_option("--algo", trace.algo, "ssa, pso or ga")->capture_default_str();
    trace_cmd->add_option("--seed", trace.seed, "Seed")->capture_default_str();
    trace_cmd->add_option("--budget-evals", trace.budget_evals, "Evaluation budget")->capture_default_str();
    trace_cmd->add_option("--set", trace.settings, "Config override key=value (repeatable)");
    trace_cmd->add_option("--out", trace.out, "Trace CSV path")->required();

    SuiteOptions suite;
    auto* suite_cmd = app.add_subcommand("suite", "Run a multi-function protocol from a config file");
    suite_cmd->add_option("--config", suite.config, "Config file")->required();
    suite_cmd->add_option("--out-dir", suite.out_dir, "Output directory")->required();

    auto* list_cmd = app.add_subcommand("list-functions", "Print the benchmark registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*run_cmd) return cmd_run(run);
        if (*trace_cmd) return cmd_trace(trace);
        if (*suite_cmd) return cmd_suite(suite);
        if (*list_cmd) return cmd_list();
    } catch (const squidopt::NonFiniteObjective& e) {
        std::cerr << "error: run aborted: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const squidopt::ExportError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return 0;
}
