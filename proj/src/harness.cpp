#include "squidopt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "squidopt/benchmarks.hpp"

namespace squidopt {

std::string_view to_string(Algorithm algorithm) noexcept {
    switch (algorithm) {
        case Algorithm::ssa: return "ssa";
        case Algorithm::pso: return "pso";
        case Algorithm::ga: return "ga";
    }
    return "ssa";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "ssa") return Algorithm::ssa;
    if (name == "pso") return Algorithm::pso;
    if (name == "ga") return Algorithm::ga;
    throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected ssa, pso or ga)");
}

std::vector<Algorithm> parse_algorithm_list(std::string_view text) {
    if (text == "all") return {Algorithm::ssa, Algorithm::pso, Algorithm::ga};
    std::vector<Algorithm> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        const Algorithm a = parse_algorithm(item);
        if (std::find(out.begin(), out.end(), a) != out.end())
            throw ConfigError("algorithm '" + std::string(item) + "' listed twice");
        out.push_back(a);
        pos = comma + 1;
    }
    return out;
}

void ExperimentConfig::validate() const {
    if (algorithms.empty()) throw ConfigError("no algorithms selected");
    if (trials == 0) throw ConfigError("trials must be at least 1");
    if (!budget_evals && !budget_secs) throw ConfigError("budget needs an evaluation count or a time limit");
    if (budget_evals && *budget_evals == 0) throw ConfigError("budget_evals must be positive");
    if (budget_secs && !(*budget_secs > 0.0)) throw ConfigError("budget_secs must be positive");
    if (!(success_tolerance >= 0.0)) throw ConfigError("success_tolerance must be non-negative");
    if (workers == 0) throw ConfigError("workers must be at least 1");
    try {
        SsaParams s = ssa;
        s.budget = budget();
        s.validate();
        PsoParams p = pso;
        p.budget = budget();
        p.validate();
        GaParams g = ga;
        g.budget = budget();
        g.validate();
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
}

Budget ExperimentConfig::budget() const {
    Budget b;
    b.max_generations = std::numeric_limits<std::size_t>::max();
    b.max_evaluations = budget_evals;
    b.max_seconds = budget_secs;
    return b;
}

TrialStats compute_stats(std::span<const double> finals, double optimum_value, double tolerance,
                         std::size_t failed) {
    TrialStats s;
    s.failed = failed;
    s.trials = finals.size() + failed;
    if (finals.empty()) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        s.best = s.worst = s.mean = s.std_dev = nan;
        return s;
    }
    const auto [lo, hi] = std::minmax_element(finals.begin(), finals.end());
    s.best = *lo;
    s.worst = *hi;
    const double n = static_cast<double>(finals.size());
    s.mean = std::accumulate(finals.begin(), finals.end(), 0.0) / n;
    if (finals.size() == 1) {
        s.std_dev = 0.0;
        s.single_trial = true;
    } else {
        double ss = 0.0;
        for (double v : finals) ss += (v - s.mean) * (v - s.mean);
        s.std_dev = std::sqrt(ss / (n - 1.0));
    }
    for (double v : finals)
        if (v - optimum_value <= tolerance) ++s.successes;
    s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);

    const double gap = tolerance - (s.mean - optimum_value);
    if (s.std_dev > 0.0)
        s.normal_success_rate = 0.5 * std::erfc(-gap / (s.std_dev * std::sqrt(2.0)));
    else
        s.normal_success_rate = gap >= 0.0 ? 1.0 : 0.0;
    return s;
}

std::vector<int> competition_ranks(std::span<const double> values) {
    auto key = [](double v) { return std::isnan(v) ? std::numeric_limits<double>::infinity() : v; };
    std::vector<int> ranks(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        int better = 0;
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (key(values[j]) < key(values[i])) ++better;
            else if (std::isnan(values[i]) && !std::isnan(values[j]) && key(values[j]) == key(values[i])) ++better;
        }
        ranks[i] = better + 1;
    }
    return ranks;
}

std::vector<int> ExperimentResult::ranks() const {
    std::vector<int> out;
    for (const auto& r : reports) out.push_back(r.rank);
    return out;
}

OptResult run_single(Algorithm algorithm, const Objective& objective, const ExperimentConfig& config,
                     std::uint64_t seed, bool record_trace) {
    RngStream rng(seed);
    switch (algorithm) {
        case Algorithm::ssa: {
            SsaParams p = config.ssa;
            p.budget = config.budget();
            return ssa_minimize(objective, p, rng, record_trace);
        }
        case Algorithm::pso: {
            PsoParams p = config.pso;
            p.budget = config.budget();
            return pso_minimize(objective, p, rng, record_trace);
        }
        case Algorithm::ga: {
            GaParams p = config.ga;
            p.budget = config.budget();
            return ga_minimize(objective, p, rng, record_trace);
        }
    }
    throw ConfigError("unknown algorithm");
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    Objective objective = [&] {
        try {
            return bench::registry_lookup(config.function, config.dim);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }();

    ExperimentResult result;
    result.config = config;
    result.function = objective.name();
    result.dim = objective.dim();
    result.optimum_value = objective.known_optimum() ? objective.known_optimum()->value : 0.0;

    const std::size_t n_alg = config.algorithms.size();
    const std::size_t total = n_alg * config.trials;
    std::vector<TrialOutcome> outcomes(total);

    // Work item w = (algorithm w / trials, trial w % trials). Each item writes
    // only its own slot, so aggregation below sees trial-index order.
    auto run_item = [&](std::size_t w) {
        const Algorithm alg = config.algorithms[w / config.trials];
        const std::size_t trial = w % config.trials;
        TrialOutcome& out = outcomes[w];
        out.seed = derive_trial_seed(config.base_seed, to_string(alg), trial);
        try {
            const OptResult r = run_single(alg, objective, config, out.seed);
            out.final_fitness = r.best_fitness;
            out.evaluations = r.evaluations;
        } catch (const NonFiniteObjective& e) {
            out.ok = false;
            out.final_fitness = std::numeric_limits<double>::quiet_NaN();
            out.diagnostic = e.what();
        }
    };

    const std::size_t workers = std::min(config.workers, total);
    if (workers <= 1) {
        for (std::size_t w = 0; w < total; ++w) run_item(w);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) {
            pool.emplace_back([&] {
                for (std::size_t w = next.fetch_add(1); w < total; w = next.fetch_add(1)) run_item(w);
            });
        }
    }

    std::vector<double> means;
    for (std::size_t a = 0; a < n_alg; ++a) {
        AlgorithmReport report;
        report.algorithm = config.algorithms[a];
        report.trials.assign(outcomes.begin() + static_cast<std::ptrdiff_t>(a * config.trials),
                             outcomes.begin() + static_cast<std::ptrdiff_t>((a + 1) * config.trials));
        std::vector<double> finals;
        std::size_t failed = 0;
        for (const auto& t : report.trials) {
            if (t.ok) finals.push_back(t.final_fitness);
            else ++failed;
        }
        report.stats = compute_stats(finals, result.optimum_value, config.success_tolerance, failed);
        means.push_back(report.stats.mean);
        result.reports.push_back(std::move(report));
    }
    const std::vector<int> ranks = competition_ranks(means);
    for (std::size_t a = 0; a < n_alg; ++a) result.reports[a].rank = ranks[a];
    return result;
}

RankAggregate aggregate_ranks(std::span<const std::vector<int>> per_function_ranks) {
    if (per_function_ranks.empty()) throw ConfigError("no rank vectors to aggregate");
    const std::size_t n = per_function_ranks.front().size();
    RankAggregate agg;
    agg.average.assign(n, 0.0);
    for (const auto& ranks : per_function_ranks) {
        if (ranks.size() != n) throw ConfigError("rank vectors differ in length");
        for (std::size_t i = 0; i < n; ++i) agg.average[i] += ranks[i];
    }
    for (auto& v : agg.average) v /= static_cast<double>(per_function_ranks.size());
    agg.final_rank = competition_ranks(agg.average);
    std::vector<int> sorted = agg.final_rank;
    std::sort(sorted.begin(), sorted.end());
    agg.has_tie = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    return agg;
}

Summary aggregate_summary(std::span<const ExperimentResult> results) {
    if (results.empty()) throw ConfigError("no experiment results to summarize");
    const auto& first = results.front().reports;
    std::vector<std::vector<int>> ranks;
    for (const auto& r : results) {
        if (r.reports.size() != first.size()) throw ConfigError("experiments list different algorithms");
        for (std::size_t a = 0; a < first.size(); ++a)
            if (r.reports[a].algorithm != first[a].algorithm)
                throw ConfigError("experiments list algorithms in different orders");
        ranks.push_back(r.ranks());
    }
    const RankAggregate agg = aggregate_ranks(ranks);

    Summary summary;
    summary.has_tie = agg.has_tie;
    for (std::size_t a = 0; a < first.size(); ++a) {
        SummaryRow row;
        row.algorithm = first[a].algorithm;
        row.average_rank = agg.average[a];
        row.final_rank = agg.final_rank[a];
        double normal_sum = 0.0;
        for (const auto& r : results) {
            row.successes += r.reports[a].stats.successes;
            row.trials += r.reports[a].stats.trials;
            normal_sum += r.reports[a].stats.normal_success_rate;
        }
        row.pooled_success_rate = static_cast<double>(row.successes) / static_cast<double>(row.trials);
        row.normal_success_rate = normal_sum / static_cast<double>(results.size());
        summary.rows.push_back(row);
    }
    return summary;
}

std::vector<ExperimentResult> run_suite(const SuiteConfig& suite) {
    if (suite.functions.empty()) throw ConfigError("suite lists no functions");
    std::vector<ExperimentResult> out;
    for (const auto& entry : suite.functions) {
        ExperimentConfig cfg = suite.base;
        cfg.function = entry.name;
        cfg.dim = entry.dim ? entry.dim : suite.base.dim;
        out.push_back(run_experiment(cfg));
    }
    return out;
}

}  // namespace squidopt
