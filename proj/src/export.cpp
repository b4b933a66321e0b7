#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "squidopt/harness.hpp"

namespace squidopt {

using nlohmann::json;

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

namespace {

std::string budget_text(const ExperimentConfig& c) {
    return c.budget_evals ? std::to_string(*c.budget_evals) : "";
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_from(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json stats_row(const ExperimentResult& r, const AlgorithmReport& a) {
    json row;
    row["function"] = r.function;
    row["dim"] = r.dim;
    row["algorithm"] = std::string(to_string(a.algorithm));
    row["trials"] = a.stats.trials;
    row["budget_evals"] = r.config.budget_evals ? json(*r.config.budget_evals) : json(nullptr);
    row["best"] = number_or_null(a.stats.best);
    row["worst"] = number_or_null(a.stats.worst);
    row["mean"] = number_or_null(a.stats.mean);
    row["std_dev"] = number_or_null(a.stats.std_dev);
    row["success_rate"] = a.stats.success_rate;
    row["rank"] = a.rank;
    row["normal_success_rate"] = a.stats.normal_success_rate;
    row["successes"] = a.stats.successes;
    row["failed"] = a.stats.failed;
    row["std_dev_single_trial"] = a.stats.single_trial;
    json finals = json::array(), seeds = json::array(), failures = json::array();
    for (std::size_t k = 0; k < a.trials.size(); ++k) {
        const TrialOutcome& t = a.trials[k];
        finals.push_back(number_or_null(t.final_fitness));
        seeds.push_back(t.seed);
        if (!t.ok) failures.push_back({{"trial", k}, {"diagnostic", t.diagnostic}});
    }
    row["finals"] = std::move(finals);
    row["trial_seeds"] = std::move(seeds);
    row["failures"] = std::move(failures);
    return row;
}

}  // namespace

std::string results_csv(std::span<const ExperimentResult> results) {
    std::string out(kResultsCsvHeader);
    out += '\n';
    for (const auto& r : results) {
        for (const auto& a : r.reports) {
            out += r.function + ',' + std::to_string(r.dim) + ',' + std::string(to_string(a.algorithm)) + ',' +
                   std::to_string(a.stats.trials) + ',' + budget_text(r.config) + ',' + format_number(a.stats.best) +
                   ',' + format_number(a.stats.worst) + ',' + format_number(a.stats.mean) + ',' +
                   format_number(a.stats.std_dev) + ',' + format_number(a.stats.success_rate) + ',' +
                   std::to_string(a.rank) + '\n';
        }
    }
    return out;
}

std::string results_json(std::span<const ExperimentResult> results) {
    json doc;
    doc["experiments"] = json::array();
    for (const auto& r : results) {
        json e;
        json config = json::object();
        for (const auto& [k, v] : config_settings(r.config)) config[k] = v;
        e["config"] = std::move(config);
        e["function"] = r.function;
        e["dim"] = r.dim;
        e["optimum_value"] = r.optimum_value;
        e["rows"] = json::array();
        for (const auto& a : r.reports) e["rows"].push_back(stats_row(r, a));
        doc["experiments"].push_back(std::move(e));
    }
    return doc.dump(2) + '\n';
}

std::string summary_csv(const Summary& summary) {
    std::string out = "algorithm,average_rank,final_rank,pooled_success_rate,normal_success_rate,successes,trials\n";
    for (const auto& row : summary.rows) {
        out += std::string(to_string(row.algorithm)) + ',' + format_number(row.average_rank) + ',' +
               std::to_string(row.final_rank) + ',' + format_number(row.pooled_success_rate) + ',' +
               format_number(row.normal_success_rate) + ',' + std::to_string(row.successes) + ',' +
               std::to_string(row.trials) + '\n';
    }
    return out;
}

std::string summary_json(const Summary& summary) {
    json doc;
    doc["has_tie"] = summary.has_tie;
    doc["rows"] = json::array();
    for (const auto& row : summary.rows) {
        doc["rows"].push_back({{"algorithm", std::string(to_string(row.algorithm))},
                               {"average_rank", row.average_rank},
                               {"final_rank", row.final_rank},
                               {"pooled_success_rate", row.pooled_success_rate},
                               {"normal_success_rate", row.normal_success_rate},
                               {"successes", row.successes},
                               {"trials", row.trials}});
    }
    return doc.dump(2) + '\n';
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ExportError("cannot open " + path.string() + " for writing: " + std::strerror(errno));
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw ExportError("write to " + path.string() + " failed: " + std::strerror(errno));
}

void export_results(std::span<const ExperimentResult> results, std::string_view format,
                    const std::filesystem::path& path) {
    if (results.empty()) throw ExportError("no results to export to " + path.string());
    for (const auto& r : results)
        if (r.reports.empty()) throw ExportError("experiment on " + r.function + " has no algorithms");
    if (format == "csv") write_text_file(path, results_csv(results));
    else if (format == "json") write_text_file(path, results_json(results));
    else throw ExportError("unknown export format '" + std::string(format) + "'");
}

std::vector<ExperimentResult> read_results_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ExportError("cannot open " + path.string() + ": " + std::strerror(errno));
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ExportError("malformed JSON in " + path.string() + ": " + e.what());
    }

    std::vector<ExperimentResult> out;
    for (const auto& e : doc.at("experiments")) {
        ExperimentResult r;
        for (const auto& [k, v] : e.at("config").items()) apply_setting(r.config, k, v.get<std::string>());
        r.function = e.at("function").get<std::string>();
        r.dim = e.at("dim").get<std::size_t>();
        r.optimum_value = e.at("optimum_value").get<double>();
        for (const auto& row : e.at("rows")) {
            AlgorithmReport a;
            a.algorithm = parse_algorithm(row.at("algorithm").get<std::string>());
            a.rank = row.at("rank").get<int>();
            TrialStats& s = a.stats;
            s.trials = row.at("trials").get<std::size_t>();
            s.best = number_from(row.at("best"));
            s.worst = number_from(row.at("worst"));
            s.mean = number_from(row.at("mean"));
            s.std_dev = number_from(row.at("std_dev"));
            s.success_rate = row.at("success_rate").get<double>();
            s.normal_success_rate = row.at("normal_success_rate").get<double>();
            s.successes = row.at("successes").get<std::size_t>();
            s.failed = row.at("failed").get<std::size_t>();
            s.single_trial = row.at("std_dev_single_trial").get<bool>();
            const auto& finals = row.at("finals");
            const auto& seeds = row.at("trial_seeds");
            for (std::size_t k = 0; k < finals.size(); ++k) {
                TrialOutcome t;
                t.final_fitness = number_from(finals[k]);
                t.seed = seeds.at(k).get<std::uint64_t>();
                a.trials.push_back(std::move(t));
            }
            for (const auto& f : row.at("failures")) {
                TrialOutcome& t = a.trials.at(f.at("trial").get<std::size_t>());
                t.ok = false;
                t.diagnostic = f.at("diagnostic").get<std::string>();
            }
            r.reports.push_back(std::move(a));
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string trace_csv(const OptResult& result) {
    if (!result.trace) throw ExportError("trace not recorded");
    const auto& trace = *result.trace;
    const std::size_t dim = trace.empty() ? result.best_position.size() : trace.front().position.size();
    std::string out = "generation,squid_id,swarm_tag,fitness";
    for (std::size_t k = 0; k < dim; ++k) out += ",x" + std::to_string(k);
    out += '\n';
    for (const auto& rec : trace) {
        out += std::to_string(rec.generation) + ',' + std::to_string(rec.squid_id) + ',' + to_string(rec.swarm_tag) +
               ',' + format_number(rec.fitness);
        for (double v : rec.position) out += ',' + format_number(v);
        out += '\n';
    }
    return out;
}

void export_trace(const OptResult& result, const std::filesystem::path& path) {
    write_text_file(path, trace_csv(result));
}

}  // namespace squidopt
