#include <algorithm>
#include <numeric>

#include "squidopt/baselines.hpp"

namespace squidopt {

void GaParams::validate() const {
    if (population < 2) throw ParameterError("GA population must be at least 2");
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) throw ParameterError("crossover_prob must lie in [0, 1]");
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) throw ParameterError("mutation_prob must lie in [0, 1]");
    if (!(mutation_sigma >= 0.0)) throw ParameterError("mutation_sigma must be non-negative");
    budget.validate();
}

std::vector<double> selection_weights(std::span<const double> fitnesses) {
    if (fitnesses.empty()) throw ParameterError("selection needs a non-empty population");
    const double f_max = *std::max_element(fitnesses.begin(), fitnesses.end());
    std::vector<double> w(fitnesses.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = f_max - fitnesses[i] + kSelectionEpsilon;
    return w;
}

std::size_t roulette_pick(std::span<const double> cumulative, RngStream& rng) {
    const double target = rng.uniform01() * cumulative.back();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    return std::min(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
}

void one_point_crossover(Point& a, Point& b, std::size_t cut) {
    if (a.size() != b.size()) throw DimensionError("crossover parents differ in dimension");
    for (std::size_t k = cut; k < a.size(); ++k) std::swap(a[k], b[k]);
}

OptResult ga_minimize(const Objective& objective, const GaParams& params, RngStream& rng, bool record_trace) {
    params.validate();
    const std::size_t n = params.population;
    if (params.budget.max_evaluations && *params.budget.max_evaluations < n)
        throw ParameterError("evaluation budget is smaller than the population");
    const SearchSpace& space = objective.space();
    const std::size_t dim = space.dim();
    Evaluator evaluator(objective, params.budget);

    std::vector<Squid> population(n);
    for (auto& ind : population) {
        ind.position = uniform_point(space, rng);
        ind.fitness = evaluator.evaluate(ind.position);
    }

    OptResult result;
    result.best_history.push_back(evaluator.best_fitness());
    if (record_trace) result.trace.emplace();

    std::vector<double> fitnesses(n);
    std::vector<double> cumulative(n);
    std::vector<Squid> offspring;
    offspring.reserve(n + 1);
    std::size_t generation = 0;
    bool out_of_budget = false;

    while (!out_of_budget && generation < params.budget.max_generations && !evaluator.exhausted() &&
           !evaluator.target_reached()) {
        for (std::size_t i = 0; i < n; ++i) fitnesses[i] = population[i].fitness;
        const std::vector<double> weights = selection_weights(fitnesses);
        std::partial_sum(weights.begin(), weights.end(), cumulative.begin());

        offspring.clear();
        while (offspring.size() < n) {
            Point a = population[roulette_pick(cumulative, rng)].position;
            Point b = population[roulette_pick(cumulative, rng)].position;
            if (dim > 1 && rng.uniform01() < params.crossover_prob) {
                const std::size_t cut = 1 + static_cast<std::size_t>(rng.below(dim - 1));
                one_point_crossover(a, b, cut);
            }
            offspring.push_back({std::move(a), 0.0});
            offspring.push_back({std::move(b), 0.0});
        }
        offspring.resize(n);

        for (auto& child : offspring) {
            for (std::size_t k = 0; k < dim; ++k) {
                if (rng.uniform01() < params.mutation_prob)
                    child.position[k] += params.mutation_sigma * space.width(k) * rng.normal();
            }
            clamp_in_place(child.position, space);
        }

        // Evaluate the whole generation; a budget cut leaves the parents in place.
        std::size_t evaluated = 0;
        for (auto& child : offspring) {
            if (evaluator.exhausted()) {
                out_of_budget = true;
                break;
            }
            child.fitness = evaluator.evaluate(child.position);
            ++evaluated;
        }
        if (evaluated == n) population.swap(offspring);

        if (record_trace) {
            for (std::size_t i = 0; i < n; ++i)
                result.trace->push_back({generation, i, SwarmTag::none, population[i].position, population[i].fitness});
        }
        ++generation;
        result.best_history.push_back(evaluator.best_fitness());
    }

    result.best_position = evaluator.best_position();
    result.best_fitness = evaluator.best_fitness();
    result.evaluations = evaluator.evaluations();
    result.generations = generation;
    return result;
}

}  // namespace squidopt
