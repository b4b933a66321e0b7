#pragma once

#include <cstddef>
#include <span>

#include "squidopt/core.hpp"

namespace squidopt {

/// Kennedy-Eberhart particle swarm with inertia and a per-axis velocity clamp.
struct PsoParams {
    std::size_t population = 40;
    double inertia = 1.0;    // w
    double cognitive = 2.0;  // c1
    double social = 2.0;     // c2
    double clamp_k = 0.5;    // |v_k| <= clamp_k * width_k / 2
    Budget budget;

    void validate() const;
};

/// Real-coded generational GA: roulette selection, one-point crossover,
/// per-gene Gaussian mutation, no elitism.
struct GaParams {
    std::size_t population = 40;
    double crossover_prob = 0.95;
    double mutation_prob = 0.05;
    double mutation_sigma = 0.1;  ///< fraction of the axis width
    Budget budget;

    void validate() const;
};

/// Roulette weight offset on flat landscapes.
inline constexpr double kSelectionEpsilon = 1e-12;

/// Velocity update for one particle, then the per-axis clamp.
/// r1 and r2 hold the componentwise uniform draws.
void pso_velocity_update(std::span<double> velocity, std::span<const double> position,
                         std::span<const double> personal_best, std::span<const double> global_best,
                         std::span<const double> r1, std::span<const double> r2, const PsoParams& params,
                         const SearchSpace& space);

/// Largest allowed |v_k| on axis k.
double velocity_limit(const SearchSpace& space, std::size_t axis, double clamp_k);

OptResult pso_minimize(const Objective& objective, const PsoParams& params, RngStream& rng,
                       bool record_trace = false);

/// Roulette weights f_max - f_i + epsilon.
std::vector<double> selection_weights(std::span<const double> fitnesses);

/// Index drawn proportionally to `cumulative` (running sums of the weights).
std::size_t roulette_pick(std::span<const double> cumulative, RngStream& rng);

/// One-point crossover: children swap tails after `cut` (1 <= cut < dim).
void one_point_crossover(Point& a, Point& b, std::size_t cut);

OptResult ga_minimize(const Objective& objective, const GaParams& params, RngStream& rng,
                      bool record_trace = false);

}  // namespace squidopt
