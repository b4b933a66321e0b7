#include "squidopt/ssa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace squidopt {

void SsaParams::validate() const {
    if (population < 2 || population % 2 != 0)
        throw ParameterError("SSA population must be a positive even number");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in [0, 1]");
    if (!(delta > 0.0 && delta <= 1.0)) throw ParameterError("delta must lie in (0, 1]");
    if (!(beta0 >= 0.0)) throw ParameterError("beta0 must be non-negative");
    if (gamma && !(*gamma > 0.0)) throw ParameterError("gamma must be positive");
    if (cutoff && !(*cutoff > 0.0)) throw ParameterError("cutoff must be positive");
    if (!(mutation_factor >= 0.0 && mutation_factor <= 2.0))
        throw ParameterError("mutation_factor must lie in [0, 2]");
    budget.validate();
}

AttractionModel AttractionModel::resolve(const SsaParams& params, const SearchSpace& space) {
    AttractionModel model;
    model.beta0 = params.beta0;
    model.gamma = params.gamma ? *params.gamma : default_gamma(space.mean_width(), params.beta0);
    model.cutoff = params.cutoff ? *params.cutoff : 1.0 / model.gamma;
    return model;
}

double light_intensity(double r, double i0, double gamma, double cutoff) {
    if (!(r >= 0.0)) throw ParameterError("distance must be non-negative");
    if (r > cutoff) return 0.0;
    return i0 / (1.0 + gamma * r * r);
}

double attractiveness(double beta_i0, double r, double gamma, double cutoff) {
    return light_intensity(r, beta_i0, gamma, cutoff);
}

double default_gamma(double avg_scale, double avg_beta0) {
    if (!(avg_scale > 0.0)) throw ParameterError("average axis width must be positive");
    const double log_term = 1.0 + std::log(avg_beta0);
    if (!(log_term > 0.0)) throw ParameterError("default gamma needs beta0 > 1/e");
    return 1.0 / (avg_scale * avg_scale * log_term);
}

double step_amplitude(std::size_t t, const SsaParams& params) {
    return params.alpha * std::pow(params.delta, static_cast<double>(t));
}

Point random_step(std::size_t t, std::size_t dim, const SsaParams& params, RngStream& rng) {
    const double amplitude = step_amplitude(t, params);
    Point step(dim);
    for (auto& c : step) c = random_component(amplitude, sample_arcsine(rng));
    return step;
}

std::vector<double> brightness_scale(std::span<const double> fitnesses, double beta0) {
    if (fitnesses.empty()) throw ParameterError("brightness_scale needs at least one fitness");
    const auto [lo, hi] = std::minmax_element(fitnesses.begin(), fitnesses.end());
    const double f_min = *lo;
    const double f_max = *hi;
    std::vector<double> out(fitnesses.size(), beta0);
    if (f_max == f_min) return out;
    for (std::size_t i = 0; i < fitnesses.size(); ++i)
        out[i] = beta0 * (f_max - fitnesses[i]) / (f_max - f_min);
    return out;
}

double distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionError("distance between points of different dimension");
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return std::sqrt(sum);
}

SwarmPartition split_population(std::span<const Squid> swarm) {
    if (swarm.empty() || swarm.size() % 2 != 0)
        throw ParameterError("population must be non-empty and even to split");
    std::vector<std::size_t> order(swarm.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return swarm[a].fitness < swarm[b].fitness; });
    const auto half = static_cast<std::ptrdiff_t>(swarm.size() / 2);
    SwarmPartition part;
    part.primary.assign(order.begin(), order.begin() + half);
    part.secondary.assign(order.begin() + half, order.end());
    return part;
}

namespace {

// Brightness of a squid relative to the fitness range at the start of the
// pass. Squids that improved past the range saturate at beta0.
class BrightnessMap {
public:
    BrightnessMap(const std::vector<Squid>& swarm, std::span<const std::size_t> members, double beta0)
        : beta0_(beta0) {
        f_min_ = f_max_ = swarm[members.front()].fitness;
        for (std::size_t i : members) {
            f_min_ = std::min(f_min_, swarm[i].fitness);
            f_max_ = std::max(f_max_, swarm[i].fitness);
        }
    }

    double operator()(double fitness) const {
        if (f_max_ == f_min_) return beta0_;
        return std::clamp(beta0_ * (f_max_ - fitness) / (f_max_ - f_min_), 0.0, beta0_);
    }

private:
    double beta0_;
    double f_min_;
    double f_max_;
};

void add_random_step(Point& x, double amplitude, RngStream& rng) {
    for (auto& c : x) c += random_component(amplitude, sample_arcsine(rng));
}

}  // namespace

std::size_t primary_pass(std::vector<Squid>& swarm, std::span<const std::size_t> members,
                         const AttractionModel& model, const SsaParams& params, std::size_t t,
                         RngStream& rng, Evaluator& evaluator) {
    if (members.empty()) return 0;
    const SearchSpace& space = evaluator.space();
    const BrightnessMap brightness(swarm, members, model.beta0);
    const double amplitude = step_amplitude(t, params);
    std::size_t evals = 0;
    Point candidate;

    for (std::size_t a = 0; a < members.size(); ++a) {
        Squid& si = swarm[members[a]];
        bool moved = false;
        if (a != 0) {
            for (std::size_t b = 0; b < members.size(); ++b) {
                if (b == a) continue;
                const Squid& sj = swarm[members[b]];
                if (!(sj.fitness < si.fitness)) continue;
                const double beta = attractiveness(brightness(sj.fitness), distance(si.position, sj.position),
                                                   model.gamma, model.cutoff);
                if (beta <= 0.0) continue;
                if (evaluator.exhausted()) return evals;
                candidate = si.position;
                for (std::size_t k = 0; k < candidate.size(); ++k)
                    candidate[k] += beta * (sj.position[k] - si.position[k]);
                add_random_step(candidate, amplitude, rng);
                clamp_in_place(candidate, space);
                si.fitness = evaluator.evaluate(candidate);
                si.position.swap(candidate);
                ++evals;
                moved = true;
            }
        }
        if (!moved && amplitude > 0.0) {
            if (evaluator.exhausted()) return evals;
            candidate = si.position;
            add_random_step(candidate, amplitude, rng);
            clamp_in_place(candidate, space);
            si.fitness = evaluator.evaluate(candidate);
            si.position.swap(candidate);
            ++evals;
        }
    }
    return evals;
}

std::size_t secondary_pass(std::vector<Squid>& swarm, std::span<const std::size_t> members,
                           std::span<const double> best, const SsaParams& params, RngStream& rng,
                           Evaluator& evaluator) {
    const SearchSpace& space = evaluator.space();
    const std::size_t m = members.size();
    std::size_t evals = 0;
    Point candidate;

    for (std::size_t a = 0; a < m; ++a) {
        if (evaluator.exhausted()) return evals;
        Squid& si = swarm[members[a]];
        candidate.assign(best.begin(), best.end());
        if (m >= 3) {
            std::size_t r1 = rng.below(m - 1);
            if (r1 >= a) ++r1;
            // r2 skips both a and r1; walk the two holes in ascending order.
            std::size_t r2 = rng.below(m - 2);
            const std::size_t lo = std::min(a, r1);
            const std::size_t hi = std::max(a, r1);
            if (r2 >= lo) ++r2;
            if (r2 >= hi) ++r2;
            const double factor = params.mutation_mode == MutationMode::fixed
                                      ? params.mutation_factor
                                      : rng.uniform(0.0, params.mutation_factor);
            const Point& x1 = swarm[members[r1]].position;
            const Point& x2 = swarm[members[r2]].position;
            for (std::size_t k = 0; k < candidate.size(); ++k) candidate[k] += factor * (x1[k] - x2[k]);
        }
        clamp_in_place(candidate, space);
        const double fy = evaluator.evaluate(candidate);
        ++evals;
        if (!params.greedy_secondary || fy < si.fitness) {
            si.position.swap(candidate);
            si.fitness = fy;
        }
    }
    return evals;
}

OptResult ssa_minimize(const Objective& objective, const SsaParams& params, RngStream& rng,
                       bool record_trace) {
    params.validate();
    const std::size_t n = params.population;
    if (params.budget.max_evaluations && *params.budget.max_evaluations < n)
        throw ParameterError("evaluation budget is smaller than the population");

    const AttractionModel model = AttractionModel::resolve(params, objective.space());
    Evaluator evaluator(objective, params.budget);

    std::vector<Squid> swarm(n);
    for (auto& squid : swarm) {
        squid.position = uniform_point(objective.space(), rng);
        squid.fitness = evaluator.evaluate(squid.position);
    }

    OptResult result;
    result.best_history.push_back(evaluator.best_fitness());
    if (record_trace) result.trace.emplace();

    std::size_t generation = 0;
    while (generation < params.budget.max_generations && !evaluator.exhausted() &&
           !evaluator.target_reached()) {
        const std::size_t t = generation;
        const SwarmPartition part = split_population(swarm);
        primary_pass(swarm, part.primary, model, params, t, rng, evaluator);
        const Point best = evaluator.best_position();
        secondary_pass(swarm, part.secondary, best, params, rng, evaluator);
        ++generation;
        result.best_history.push_back(evaluator.best_fitness());

        if (record_trace) {
            std::vector<SwarmTag> tags(n, SwarmTag::secondary);
            for (std::size_t i : part.primary) tags[i] = SwarmTag::primary;
            for (std::size_t i = 0; i < n; ++i)
                result.trace->push_back({t, i, tags[i], swarm[i].position, swarm[i].fitness});
        }
    }

    result.best_position = evaluator.best_position();
    result.best_fitness = evaluator.best_fitness();
    result.evaluations = evaluator.evaluations();
    result.generations = generation;
    return result;
}

}  // namespace squidopt
