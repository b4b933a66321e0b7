#include <algorithm>

#include "squidopt/baselines.hpp"

namespace squidopt {

void PsoParams::validate() const {
    if (population < 2) throw ParameterError("PSO population must be at least 2");
    if (!(clamp_k > 0.0 && clamp_k <= 1.0)) throw ParameterError("clamp_k must lie in (0, 1]");
    budget.validate();
}

double velocity_limit(const SearchSpace& space, std::size_t axis, double clamp_k) {
    return clamp_k * space.width(axis) / 2.0;
}

void pso_velocity_update(std::span<double> velocity, std::span<const double> position,
                         std::span<const double> personal_best, std::span<const double> global_best,
                         std::span<const double> r1, std::span<const double> r2, const PsoParams& params,
                         const SearchSpace& space) {
    for (std::size_t k = 0; k < velocity.size(); ++k) {
        const double v = params.inertia * velocity[k] +
                         params.cognitive * r1[k] * (personal_best[k] - position[k]) +
                         params.social * r2[k] * (global_best[k] - position[k]);
        const double limit = velocity_limit(space, k, params.clamp_k);
        velocity[k] = std::clamp(v, -limit, limit);
    }
}

namespace {

struct Particle {
    Point position;
    Point velocity;
    Point best_position;
    double fitness = 0.0;
    double best_fitness = 0.0;
};

}  // namespace

OptResult pso_minimize(const Objective& objective, const PsoParams& params, RngStream& rng,
                       bool record_trace) {
    params.validate();
    const std::size_t n = params.population;
    if (params.budget.max_evaluations && *params.budget.max_evaluations < n)
        throw ParameterError("evaluation budget is smaller than the population");
    const SearchSpace& space = objective.space();
    const std::size_t dim = space.dim();
    Evaluator evaluator(objective, params.budget);

    std::vector<Particle> swarm(n);
    for (auto& p : swarm) {
        p.position = uniform_point(space, rng);
        p.velocity.assign(dim, 0.0);
        p.fitness = evaluator.evaluate(p.position);
        p.best_position = p.position;
        p.best_fitness = p.fitness;
    }

    OptResult result;
    result.best_history.push_back(evaluator.best_fitness());
    if (record_trace) result.trace.emplace();

    Point r1(dim), r2(dim);
    std::size_t iteration = 0;
    bool out_of_budget = false;
    while (!out_of_budget && iteration < params.budget.max_generations && !evaluator.exhausted() &&
           !evaluator.target_reached()) {
        // g(t) is frozen for the whole sweep.
        const Point global_best = evaluator.best_position();
        for (auto& p : swarm) {
            if (evaluator.exhausted()) {
                out_of_budget = true;
                break;
            }
            for (std::size_t k = 0; k < dim; ++k) {
                r1[k] = rng.uniform01();
                r2[k] = rng.uniform01();
            }
            pso_velocity_update(p.velocity, p.position, p.best_position, global_best, r1, r2, params, space);
            for (std::size_t k = 0; k < dim; ++k) p.position[k] += p.velocity[k];
            clamp_in_place(p.position, space);
            p.fitness = evaluator.evaluate(p.position);
            if (p.fitness < p.best_fitness) {
                p.best_fitness = p.fitness;
                p.best_position = p.position;
            }
        }
        if (record_trace) {
            for (std::size_t i = 0; i < n; ++i)
                result.trace->push_back({iteration, i, SwarmTag::none, swarm[i].position, swarm[i].fitness});
        }
        ++iteration;
        result.best_history.push_back(evaluator.best_fitness());
    }

    result.best_position = evaluator.best_position();
    result.best_fitness = evaluator.best_fitness();
    result.evaluations = evaluator.evaluations();
    result.generations = iteration;
    return result;
}

}  // namespace squidopt
