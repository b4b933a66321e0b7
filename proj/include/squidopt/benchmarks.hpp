#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "squidopt/core.hpp"

namespace squidopt::bench {

// Test functions. Each throws DimensionError when the input has the wrong
// length for a fixed-dimension function (or is empty).

double beale(std::span<const double> x);
double easom(std::span<const double> x);
double michalewicz(std::span<const double> x, double m = 10.0);
double ackley(std::span<const double> x);
/// Canonical Goldstein-Price minus 3, so the minimum at (0, -1) is 0.
double goldstein_price(std::span<const double> x);
double griewank(std::span<const double> x);
double levy(std::span<const double> x);
double rastrigin(std::span<const double> x);
double rosenbrock(std::span<const double> x);
/// Ten-term Shekel over a 4-D domain.
double shekel_raw(std::span<const double> x);
/// shekel_raw shifted so the global minimum is 0.
double shekel(std::span<const double> x);
double sphere(std::span<const double> x);

/// Minimizer of the ten-term Shekel with this library's coefficient matrix.
inline constexpr double kShekelMinimizer[4] = {4.0007335509056583, 3.9994969684397750, 4.0007335509056583,
                                               3.9994969684397750};
inline constexpr double kShekelRawMinimum = -10.532087221186490;

/// Per-axis minimizer of the Michalewicz term i (1-based) on [0, pi].
double michalewicz_axis_minimizer(std::size_t axis, double m = 10.0);

struct BenchmarkSpec {
    std::string name;
    bool variable_dim = false;
    std::size_t default_dim = 2;
    double lower = 0.0;  ///< same interval on every axis
    double upper = 0.0;
    std::string optimum_note;
};

/// All registered benchmarks in registry order.
const std::vector<BenchmarkSpec>& registry();

/// Looks up `name`, optionally at dimension `dim`.
/// Throws std::invalid_argument for unknown names and DimensionError when a
/// dimension is requested for a fixed-dimension function (other than its own).
Objective registry_lookup(std::string_view name, std::optional<std::size_t> dim = std::nullopt);

}  // namespace squidopt::bench
