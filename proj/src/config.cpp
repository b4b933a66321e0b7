#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "squidopt/harness.hpp"

namespace squidopt {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
    throw ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key) + " (expected " +
                      std::string(expected) + ")");
}

double parse_double(std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) bad_value(key, text, "a number");
    return v;
}

std::uint64_t parse_u64(std::string_view key, std::string_view text) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) bad_value(key, text, "a non-negative integer");
    return v;
}

std::size_t parse_size(std::string_view key, std::string_view text) {
    return static_cast<std::size_t>(parse_u64(key, text));
}

bool parse_bool(std::string_view key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    bad_value(key, text, "true or false");
}

bool is_unset(std::string_view text) { return text == "none" || text == "auto" || text.empty(); }

using Setter = std::function<void(ExperimentConfig&, std::string_view key, std::string_view value)>;

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table = {
        {"function", [](auto& c, auto, auto v) { c.function = std::string(v); }},
        {"dim",
         [](auto& c, auto k, auto v) {
             if (is_unset(v)) c.dim.reset();
             else c.dim = parse_size(k, v);
         }},
        {"algorithms", [](auto& c, auto, auto v) { c.algorithms = parse_algorithm_list(v); }},
        {"trials", [](auto& c, auto k, auto v) { c.trials = parse_size(k, v); }},
        {"base_seed", [](auto& c, auto k, auto v) { c.base_seed = parse_u64(k, v); }},
        {"budget_evals",
         [](auto& c, auto k, auto v) {
             if (is_unset(v)) c.budget_evals.reset();
             else c.budget_evals = parse_size(k, v);
         }},
        {"budget_secs",
         [](auto& c, auto k, auto v) {
             if (is_unset(v)) c.budget_secs.reset();
             else c.budget_secs = parse_double(k, v);
         }},
        {"success_tolerance", [](auto& c, auto k, auto v) { c.success_tolerance = parse_double(k, v); }},
        {"workers", [](auto& c, auto k, auto v) { c.workers = parse_size(k, v); }},
        {"output_csv", [](auto& c, auto, auto v) { c.output_csv = std::string(v); }},
        {"output_json", [](auto& c, auto, auto v) { c.output_json = std::string(v); }},

        {"ssa.population", [](auto& c, auto k, auto v) { c.ssa.population = parse_size(k, v); }},
        {"ssa.alpha", [](auto& c, auto k, auto v) { c.ssa.alpha = parse_double(k, v); }},
        {"ssa.delta", [](auto& c, auto k, auto v) { c.ssa.delta = parse_double(k, v); }},
        {"ssa.beta0", [](auto& c, auto k, auto v) { c.ssa.beta0 = parse_double(k, v); }},
        {"ssa.gamma",
         [](auto& c, auto k, auto v) {
             if (is_unset(v)) c.ssa.gamma.reset();
             else c.ssa.gamma = parse_double(k, v);
         }},
        {"ssa.cutoff",
         [](auto& c, auto k, auto v) {
             if (is_unset(v)) c.ssa.cutoff.reset();
             else c.ssa.cutoff = parse_double(k, v);
         }},
        {"ssa.mutation_factor", [](auto& c, auto k, auto v) { c.ssa.mutation_factor = parse_double(k, v); }},
        {"ssa.mutation_mode",
         [](auto& c, auto k, auto v) {
             if (v == "uniform") c.ssa.mutation_mode = MutationMode::uniform;
             else if (v == "fixed") c.ssa.mutation_mode = MutationMode::fixed;
             else bad_value(k, v, "uniform or fixed");
         }},
        {"ssa.greedy_secondary", [](auto& c, auto k, auto v) { c.ssa.greedy_secondary = parse_bool(k, v); }},

        {"pso.population", [](auto& c, auto k, auto v) { c.pso.population = parse_size(k, v); }},
        {"pso.inertia", [](auto& c, auto k, auto v) { c.pso.inertia = parse_double(k, v); }},
        {"pso.cognitive", [](auto& c, auto k, auto v) { c.pso.cognitive = parse_double(k, v); }},
        {"pso.social", [](auto& c, auto k, auto v) { c.pso.social = parse_double(k, v); }},
        {"pso.clamp_k", [](auto& c, auto k, auto v) { c.pso.clamp_k = parse_double(k, v); }},

        {"ga.population", [](auto& c, auto k, auto v) { c.ga.population = parse_size(k, v); }},
        {"ga.crossover_prob", [](auto& c, auto k, auto v) { c.ga.crossover_prob = parse_double(k, v); }},
        {"ga.mutation_prob", [](auto& c, auto k, auto v) { c.ga.mutation_prob = parse_double(k, v); }},
        {"ga.mutation_sigma", [](auto& c, auto k, auto v) { c.ga.mutation_sigma = parse_double(k, v); }},
    };
    return table;
}

template <class T>
std::string optional_text(const std::optional<T>& v, const char* unset) {
    if (!v) return unset;
    if constexpr (std::is_floating_point_v<T>) return format_number(*v);
    else return std::to_string(*v);
}

}  // namespace

void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value) {
    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError("unknown config key '" + std::string(key) + "'");
    it->second(config, key, trim(value));
}

std::vector<std::pair<std::string, std::string>> config_settings(const ExperimentConfig& c) {
    std::string algorithms;
    for (Algorithm a : c.algorithms) {
        if (!algorithms.empty()) algorithms += ',';
        algorithms += to_string(a);
    }
    return {
        {"function", c.function},
        {"dim", optional_text(c.dim, "auto")},
        {"algorithms", algorithms},
        {"trials", std::to_string(c.trials)},
        {"base_seed", std::to_string(c.base_seed)},
        {"budget_evals", optional_text(c.budget_evals, "none")},
        {"budget_secs", optional_text(c.budget_secs, "none")},
        {"success_tolerance", format_number(c.success_tolerance)},
        {"output_csv", c.output_csv},
        {"output_json", c.output_json},
        {"ssa.population", std::to_string(c.ssa.population)},
        {"ssa.alpha", format_number(c.ssa.alpha)},
        {"ssa.delta", format_number(c.ssa.delta)},
        {"ssa.beta0", format_number(c.ssa.beta0)},
        {"ssa.gamma", optional_text(c.ssa.gamma, "auto")},
        {"ssa.cutoff", optional_text(c.ssa.cutoff, "auto")},
        {"ssa.mutation_factor", format_number(c.ssa.mutation_factor)},
        {"ssa.mutation_mode", c.ssa.mutation_mode == MutationMode::fixed ? "fixed" : "uniform"},
        {"ssa.greedy_secondary", c.ssa.greedy_secondary ? "true" : "false"},
        {"pso.population", std::to_string(c.pso.population)},
        {"pso.inertia", format_number(c.pso.inertia)},
        {"pso.cognitive", format_number(c.pso.cognitive)},
        {"pso.social", format_number(c.pso.social)},
        {"pso.clamp_k", format_number(c.pso.clamp_k)},
        {"ga.population", std::to_string(c.ga.population)},
        {"ga.crossover_prob", format_number(c.ga.crossover_prob)},
        {"ga.mutation_prob", format_number(c.ga.mutation_prob)},
        {"ga.mutation_sigma", format_number(c.ga.mutation_sigma)},
    };
}

SuiteConfig parse_config(std::string_view text) {
    SuiteConfig suite;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        try {
            if (key == "function") {
                suite.functions.clear();
                std::size_t p = 0;
                while (p <= value.size()) {
                    const std::size_t comma = std::min(value.find(',', p), value.size());
                    const std::string_view item = trim(value.substr(p, comma - p));
                    p = comma + 1;
                    if (item.empty()) throw ConfigError("empty function name");
                    FunctionEntry entry;
                    if (const auto colon = item.find(':'); colon != std::string_view::npos) {
                        entry.name = std::string(trim(item.substr(0, colon)));
                        entry.dim = parse_size("function", trim(item.substr(colon + 1)));
                    } else {
                        entry.name = std::string(item);
                    }
                    suite.functions.push_back(std::move(entry));
                }
                suite.base.function = suite.functions.front().name;
            } else {
                apply_setting(suite.base, key, value);
            }
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return suite;
}

SuiteConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace squidopt
