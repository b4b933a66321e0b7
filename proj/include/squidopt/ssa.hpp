#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "squidopt/core.hpp"

namespace squidopt {

/// How the secondary swarm picks its mutation factor F.
enum class MutationMode {
    uniform,  ///< F ~ U[0, mutation_factor), drawn per squid per generation
    fixed,    ///< F = mutation_factor
};

/// Tuning for the Sparkling Squid Algorithm.
struct SsaParams {
    std::size_t population = 60;  ///< must be even
    double alpha = 1.0;           ///< random step amplitude, [0, 1]
    double delta = 0.97;          ///< per-generation decay of alpha, (0, 1]
    double beta0 = 1.0;           ///< attraction scale
    std::optional<double> gamma;  ///< absorption coefficient; empty = derived from the space
    std::optional<double> cutoff; ///< light cutoff length; empty = 1/gamma
    double mutation_factor = 1.0; ///< F (fixed) or its upper bound (uniform), [0, 2]
    MutationMode mutation_mode = MutationMode::fixed;
    bool greedy_secondary = false;
    Budget budget;

    void validate() const;
};

/// Index lists into the swarm after sorting by fitness.
struct SwarmPartition {
    std::vector<std::size_t> primary;    // best half, ascending fitness
    std::vector<std::size_t> secondary;  // worst half, ascending fitness
};

/// Resolved attraction constants for one run.
struct AttractionModel {
    double beta0 = 1.0;
    double gamma = 1.0;
    double cutoff = 1.0;

    static AttractionModel resolve(const SsaParams& params, const SearchSpace& space);
};

/// I(r) = i0 / (1 + gamma r^2) inside the cutoff, 0 beyond it.
double light_intensity(double r, double i0, double gamma, double cutoff);

/// Same functional form as light_intensity, with the squid's own scale.
double attractiveness(double beta_i0, double r, double gamma, double cutoff);

/// gamma = 1 / (g^2 (1 + ln beta0)), with g the mean axis width.
double default_gamma(double avg_scale, double avg_beta0);

/// alpha * delta^t.
double step_amplitude(std::size_t t, const SsaParams& params);

/// One component of the random step for a given arcsine draw.
inline double random_component(double amplitude, double arcsine_sample) {
    return amplitude * (arcsine_sample - 0.5);
}

/// Vector of `dim` independent components alpha * delta^t * (A - 1/2), A arcsine.
Point random_step(std::size_t t, std::size_t dim, const SsaParams& params, RngStream& rng);

/// Affine map of fitness onto [0, beta0]: best gets beta0, worst gets 0.
/// All-equal input maps to beta0 everywhere.
std::vector<double> brightness_scale(std::span<const double> fitnesses, double beta0);

/// Euclidean distance.
double distance(std::span<const double> a, std::span<const double> b);

/// Stable ascending sort by fitness; first half primary, rest secondary.
SwarmPartition split_population(std::span<const Squid> swarm);

/// Attraction pass over the primary members (ascending fitness order).
///
/// Each member except the first moves toward every currently brighter member
/// it can see, x_i += beta_ij (x_j - x_i) + random_step(t), re-evaluated after
/// each move. The first member (generation best), and any member that sees no
/// brighter squid inside the cutoff, takes a single random step instead.
/// Returns the number of objective evaluations.
std::size_t primary_pass(std::vector<Squid>& swarm, std::span<const std::size_t> members,
                         const AttractionModel& model, const SsaParams& params, std::size_t t,
                         RngStream& rng, Evaluator& evaluator);

/// Predator-prey pass over the secondary members.
///
/// Candidate y = clamp(best + F (x_r1 - x_r2)) with r1 != r2, both distinct
/// from i, drawn among the members (already-updated ones included). With
/// fewer than three members the difference term is zero. In greedy mode the
/// squid moves only if y is strictly better. Returns the evaluation count.
std::size_t secondary_pass(std::vector<Squid>& swarm, std::span<const std::size_t> members,
                           std::span<const double> best, const SsaParams& params, RngStream& rng,
                           Evaluator& evaluator);

/// Full run: initialize, then per generation split, attract, pursue.
OptResult ssa_minimize(const Objective& objective, const SsaParams& params, RngStream& rng,
                       bool record_trace = false);

}  // namespace squidopt
