#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <vector>

#include "squidopt/baselines.hpp"
#include "squidopt/benchmarks.hpp"
#include "squidopt/harness.hpp"
#include "squidopt/ssa.hpp"

namespace py = pybind11;
using namespace squidopt;

namespace {

ExperimentConfig make_config(const std::string& function, std::optional<std::size_t> dim,
                             const std::string& algorithms, std::size_t trials, std::uint64_t seed,
                             std::optional<std::size_t> budget_evals, std::optional<double> budget_secs,
                             double tolerance, std::size_t workers, const py::dict& settings) {
    ExperimentConfig cfg;
    cfg.function = function;
    cfg.dim = dim;
    cfg.algorithms = parse_algorithm_list(algorithms);
    cfg.trials = trials;
    cfg.base_seed = seed;
    cfg.budget_evals = budget_evals;
    cfg.budget_secs = budget_secs;
    cfg.success_tolerance = tolerance;
    cfg.workers = workers;
    for (const auto& [k, v] : settings) apply_setting(cfg, py::str(k).cast<std::string>(), py::str(v).cast<std::string>());
    return cfg;
}

py::dict stats_dict(const TrialStats& s) {
    py::dict d;
    d["best"] = s.best;
    d["worst"] = s.worst;
    d["mean"] = s.mean;
    d["std_dev"] = s.std_dev;
    d["success_rate"] = s.success_rate;
    d["normal_success_rate"] = s.normal_success_rate;
    d["trials"] = s.trials;
    d["successes"] = s.successes;
    d["failed"] = s.failed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_squidopt, m) {
    m.doc() = "Sparkling Squid Algorithm with PSO and GA baselines";

    py::register_exception<NonFiniteObjective>(m, "NonFiniteObjective", PyExc_RuntimeError);
    py::register_exception<ExportError>(m, "ExportError", PyExc_OSError);

    py::class_<TraceRecord>(m, "TraceRecord")
        .def_readonly("generation", &TraceRecord::generation)
        .def_readonly("squid_id", &TraceRecord::squid_id)
        .def_property_readonly("swarm_tag", [](const TraceRecord& r) { return std::string(to_string(r.swarm_tag)); })
        .def_readonly("position", &TraceRecord::position)
        .def_readonly("fitness", &TraceRecord::fitness);

    py::class_<OptResult>(m, "OptResult")
        .def_readonly("best_position", &OptResult::best_position)
        .def_readonly("best_fitness", &OptResult::best_fitness)
        .def_readonly("evaluations", &OptResult::evaluations)
        .def_readonly("generations", &OptResult::generations)
        .def_readonly("best_history", &OptResult::best_history)
        .def_readonly("trace", &OptResult::trace)
        .def("trace_csv", &trace_csv)
        .def("__repr__", [](const OptResult& r) {
            return "<OptResult best_fitness=" + format_number(r.best_fitness) +
                   " evaluations=" + std::to_string(r.evaluations) + ">";
        });

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("function", &ExperimentResult::function)
        .def_readonly("dim", &ExperimentResult::dim)
        .def_readonly("optimum_value", &ExperimentResult::optimum_value)
        .def_property_readonly("algorithms",
                               [](const ExperimentResult& r) {
                                   std::vector<std::string> out;
                                   for (const auto& rep : r.reports) out.emplace_back(to_string(rep.algorithm));
                                   return out;
                               })
        .def_property_readonly("ranks", &ExperimentResult::ranks)
        .def("stats",
             [](const ExperimentResult& r, const std::string& algorithm) {
                 const Algorithm a = parse_algorithm(algorithm);
                 for (const auto& rep : r.reports)
                     if (rep.algorithm == a) return stats_dict(rep.stats);
                 throw py::key_error(algorithm);
             })
        .def("finals", [](const ExperimentResult& r, const std::string& algorithm) {
            const Algorithm a = parse_algorithm(algorithm);
            for (const auto& rep : r.reports)
                if (rep.algorithm == a) {
                    std::vector<double> out;
                    for (const auto& t : rep.trials) out.push_back(t.final_fitness);
                    return out;
                }
            throw py::key_error(algorithm);
        });

    m.def(
        "list_functions",
        [] {
            py::list out;
            for (const auto& s : bench::registry()) {
                py::dict d;
                d["name"] = s.name;
                d["variable_dim"] = s.variable_dim;
                d["default_dim"] = s.default_dim;
                d["bounds"] = py::make_tuple(s.lower, s.upper);
                d["optimum_value"] = bench::registry_lookup(s.name).known_optimum()->value;
                out.append(d);
            }
            return out;
        },
        "Registered benchmarks as a list of dicts.");

    m.def(
        "evaluate",
        [](const std::string& name, const std::vector<double>& x) {
            const bool variable = [&] {
                for (const auto& s : bench::registry())
                    if (s.name == name) return s.variable_dim;
                return false;
            }();
            const Objective obj = bench::registry_lookup(name, variable ? std::optional(x.size()) : std::nullopt);
            if (obj.dim() != x.size()) throw DimensionError(name + " takes " + std::to_string(obj.dim()) + " values");
            return obj(x);
        },
        py::arg("name"), py::arg("x"), "Benchmark value at x.");

    m.def(
        "known_optimum",
        [](const std::string& name, std::optional<std::size_t> dim) {
            const Objective obj = bench::registry_lookup(name, dim);
            const auto& opt = *obj.known_optimum();
            return py::make_tuple(opt.position, opt.value);
        },
        py::arg("name"), py::arg("dim") = py::none(), "(position, value) of the registered minimum.");

    m.def(
        "minimize",
        [](const std::string& function, const std::string& algorithm, std::optional<std::size_t> dim,
           std::uint64_t seed, std::optional<std::size_t> budget_evals, const py::dict& settings, bool trace) {
            ExperimentConfig cfg = make_config(function, dim, algorithm, 1, seed, budget_evals, std::nullopt, 0.0, 1,
                                               settings);
            cfg.validate();
            const Objective obj = bench::registry_lookup(function, dim);
            py::gil_scoped_release release;
            return run_single(cfg.algorithms.front(), obj, cfg, seed, trace);
        },
        py::arg("function"), py::arg("algorithm") = "ssa", py::arg("dim") = py::none(), py::arg("seed") = 0,
        py::arg("budget_evals") = 50000, py::arg("settings") = py::dict(), py::arg("trace") = false,
        "One seeded run of ssa, pso or ga on a registered benchmark.");

    m.def(
        "minimize_callable",
        [](const std::function<double(std::vector<double>)>& fn, const std::vector<double>& lower,
           const std::vector<double>& upper, const std::string& algorithm, std::uint64_t seed,
           std::size_t budget_evals, const py::dict& settings, bool trace) {
            const Objective obj("callable", SearchSpace(lower, upper), [fn](std::span<const double> x) {
                return fn(std::vector<double>(x.begin(), x.end()));
            });
            ExperimentConfig cfg =
                make_config("callable", std::nullopt, algorithm, 1, seed, budget_evals, std::nullopt, 0.0, 1, settings);
            return run_single(cfg.algorithms.front(), obj, cfg, seed, trace);
        },
        py::arg("fn"), py::arg("lower"), py::arg("upper"), py::arg("algorithm") = "ssa", py::arg("seed") = 0,
        py::arg("budget_evals") = 10000, py::arg("settings") = py::dict(), py::arg("trace") = false,
        "Minimize a Python callable over the box [lower, upper].");

    m.def(
        "run_experiment",
        [](const std::string& function, std::optional<std::size_t> dim, const std::string& algorithms,
           std::size_t trials, std::uint64_t seed, std::optional<std::size_t> budget_evals,
           std::optional<double> budget_secs, double tolerance, std::size_t workers, const py::dict& settings) {
            const ExperimentConfig cfg = make_config(function, dim, algorithms, trials, seed, budget_evals,
                                                     budget_secs, tolerance, workers, settings);
            py::gil_scoped_release release;
            return run_experiment(cfg);
        },
        py::arg("function"), py::arg("dim") = py::none(), py::arg("algorithms") = "all", py::arg("trials") = 100,
        py::arg("seed") = 0, py::arg("budget_evals") = 50000, py::arg("budget_secs") = py::none(),
        py::arg("tolerance") = 5e-7, py::arg("workers") = 1, py::arg("settings") = py::dict(),
        "Seeded trials of each algorithm on one benchmark.");

    m.def(
        "run_suite",
        [](const std::string& config_text) {
            const SuiteConfig suite = parse_config(config_text);
            py::gil_scoped_release release;
            return run_suite(suite);
        },
        py::arg("config_text"), "Runs a suite given as `key = value` config text.");

    m.def(
        "summary",
        [](const std::vector<ExperimentResult>& results) {
            const Summary s = aggregate_summary(results);
            py::list rows;
            for (const auto& r : s.rows) {
                py::dict d;
                d["algorithm"] = std::string(to_string(r.algorithm));
                d["average_rank"] = r.average_rank;
                d["final_rank"] = r.final_rank;
                d["pooled_success_rate"] = r.pooled_success_rate;
                d["normal_success_rate"] = r.normal_success_rate;
                rows.append(d);
            }
            return rows;
        },
        py::arg("results"));

    m.def("results_csv", [](const std::vector<ExperimentResult>& r) { return results_csv(r); }, py::arg("results"));
    m.def("results_json", [](const std::vector<ExperimentResult>& r) { return results_json(r); }, py::arg("results"));
    m.def(
        "export_results",
        [](const std::vector<ExperimentResult>& r, const std::string& format, const std::filesystem::path& path) {
            export_results(r, format, path);
        },
        py::arg("results"), py::arg("format"), py::arg("path"));

    m.def("sample_arcsine", [](std::uint64_t seed, std::size_t n) {
        RngStream rng(seed);
        std::vector<double> out(n);
        for (auto& v : out) v = sample_arcsine(rng);
        return out;
    }, py::arg("seed"), py::arg("n"));
}
