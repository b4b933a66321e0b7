#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "squidopt/rng.hpp"

namespace squidopt {

using Point = std::vector<double>;

// Errors ---------------------------------------------------------------------

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an objective returns NaN or an infinity. Carries the point.
class NonFiniteObjective : public std::runtime_error {
public:
    NonFiniteObjective(Point position, double value);

    const Point& position() const noexcept { return position_; }
    double value() const noexcept { return value_; }

private:
    Point position_;
    double value_;
};

// Search space -----------------------------------------------------------------

/// Axis-aligned box. lower[k] < upper[k] on every axis.
class SearchSpace {
public:
    SearchSpace(Point lower, Point upper);

    /// Same interval on every axis.
    static SearchSpace cube(std::size_t dim, double lo, double hi);

    std::size_t dim() const noexcept { return lower_.size(); }
    const Point& lower() const noexcept { return lower_; }
    const Point& upper() const noexcept { return upper_; }
    double width(std::size_t axis) const { return upper_[axis] - lower_[axis]; }

    /// Mean axis width.
    double mean_width() const noexcept;

    bool contains(std::span<const double> point) const noexcept;

private:
    Point lower_;
    Point upper_;
};

/// Projects each component onto [lower[k], upper[k]].
Point clamp(std::span<const double> point, const SearchSpace& space);

/// In-place variant of `clamp`.
void clamp_in_place(std::span<double> point, const SearchSpace& space);

/// Each component uniform on [lower[k], upper[k]).
Point uniform_point(const SearchSpace& space, RngStream& rng);

// Objective --------------------------------------------------------------------

struct KnownOptimum {
    Point position;
    double value = 0.0;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

/// A deterministic function to be minimized over a box.
class Objective {
public:
    Objective(std::string name, SearchSpace space, ObjectiveFn fn,
              std::optional<KnownOptimum> optimum = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    const SearchSpace& space() const noexcept { return space_; }
    std::size_t dim() const noexcept { return space_.dim(); }
    const std::optional<KnownOptimum>& known_optimum() const noexcept { return optimum_; }

    double operator()(std::span<const double> x) const { return fn_(x); }

private:
    std::string name_;
    SearchSpace space_;
    ObjectiveFn fn_;
    std::optional<KnownOptimum> optimum_;
};

// Candidates and budgets -------------------------------------------------------

struct Squid {
    Point position;
    double fitness = 0.0;
};

/// Stopping limits shared by every optimizer. A run ends at whichever limit
/// is hit first.
struct Budget {
    std::size_t max_generations = 1000;
    std::optional<std::size_t> max_evaluations;
    std::optional<double> target_fitness;
    std::optional<double> max_seconds;

    void validate() const;
};

/// Wraps an objective for one run: counts calls, enforces the budget,
/// rejects non-finite values, and keeps the incumbent (best point seen).
class Evaluator {
public:
    Evaluator(const Objective& objective, const Budget& budget);

    const Objective& objective() const noexcept { return objective_; }
    const SearchSpace& space() const noexcept { return objective_.space(); }

    /// True once the evaluation cap or the wall-time cap has been reached.
    bool exhausted() const;

    bool target_reached() const noexcept;

    /// Evaluates `x`, updating the incumbent. Throws NonFiniteObjective.
    /// Callers check `exhausted()` first; evaluating past the cap is a logic
    /// error and throws std::logic_error.
    double evaluate(std::span<const double> x);

    std::size_t evaluations() const noexcept { return count_; }
    const Point& best_position() const noexcept { return best_position_; }
    double best_fitness() const noexcept { return best_fitness_; }
    bool has_incumbent() const noexcept { return !best_position_.empty(); }

private:
    const Objective& objective_;
    Budget budget_;
    std::size_t count_ = 0;
    Point best_position_;
    double best_fitness_;
    std::chrono::steady_clock::time_point start_;
};

// Results ----------------------------------------------------------------------

enum class SwarmTag { primary, secondary, none };

const char* to_string(SwarmTag tag) noexcept;

/// One squid (or particle, or individual) at the end of one generation.
struct TraceRecord {
    std::size_t generation = 0;
    std::size_t squid_id = 0;
    SwarmTag swarm_tag = SwarmTag::none;
    Point position;
    double fitness = 0.0;
};

struct OptResult {
    Point best_position;
    double best_fitness = 0.0;
    std::size_t evaluations = 0;
    std::size_t generations = 0;
    /// Incumbent fitness after initialization (index 0) and after each generation.
    std::vector<double> best_history;
    std::optional<std::vector<TraceRecord>> trace;
};

}  // namespace squidopt
