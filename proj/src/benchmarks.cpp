#include "squidopt/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace squidopt::bench {

namespace {

constexpr double pi = std::numbers::pi;

void require_dim(std::span<const double> x, std::size_t dim, const char* name) {
    if (x.size() != dim)
        throw DimensionError(std::string(name) + " expects " + std::to_string(dim) + " components, got " +
                             std::to_string(x.size()));
}

void require_nonempty(std::span<const double> x, const char* name) {
    if (x.empty()) throw DimensionError(std::string(name) + " needs at least one component");
}

double sq(double v) { return v * v; }

// Shekel coefficients: column i of C is the i-th foxhole centre.
constexpr double kShekelBeta[10] = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};
constexpr double kShekelC[4][10] = {
    {4.0, 1.0, 8.0, 6.0, 3.0, 2.0, 5.0, 8.0, 6.0, 7.0},
    {4.0, 1.0, 8.0, 6.0, 7.0, 9.0, 3.0, 1.0, 2.0, 3.0},
    {4.0, 1.0, 8.0, 6.0, 3.0, 2.0, 5.0, 8.0, 6.0, 7.0},
    {4.0, 1.0, 8.0, 6.0, 7.0, 9.0, 3.0, 1.0, 2.0, 3.0},
};

double michalewicz_term(double xi, double index, double m) {
    return -std::sin(xi) * std::pow(std::sin(index * xi * xi / pi), 2.0 * m);
}

}  // namespace

double beale(std::span<const double> x) {
    require_dim(x, 2, "beale");
    const double a = x[0], b = x[1];
    return sq(1.5 - a + a * b) + sq(2.25 - a + a * b * b) + sq(2.625 - a + a * b * b * b);
}

double easom(std::span<const double> x) {
    require_dim(x, 2, "easom");
    return -std::cos(x[0]) * std::cos(x[1]) * std::exp(-sq(x[0] - pi) - sq(x[1] - pi));
}

double michalewicz(std::span<const double> x, double m) {
    require_nonempty(x, "michalewicz");
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += michalewicz_term(x[i], static_cast<double>(i + 1), m);
    return sum;
}

double ackley(std::span<const double> x) {
    require_nonempty(x, "ackley");
    const double n = static_cast<double>(x.size());
    double sum_sq = 0.0, sum_cos = 0.0;
    for (double v : x) {
        sum_sq += v * v;
        sum_cos += std::cos(2.0 * pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq / n)) - std::exp(sum_cos / n) + 20.0 + std::numbers::e;
}

double goldstein_price(std::span<const double> x) {
    require_dim(x, 2, "goldstein_price");
    const double a = x[0], b = x[1];
    const double left = 1.0 + sq(a + b + 1.0) * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    const double right =
        30.0 + sq(2.0 * a - 3.0 * b) * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    return left * right - 3.0;
}

double griewank(std::span<const double> x) {
    require_nonempty(x, "griewank");
    double sum = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return 1.0 + sum / 4000.0 - prod;
}

double levy(std::span<const double> x) {
    require_nonempty(x, "levy");
    const std::size_t d = x.size();
    double sum = sq(std::sin((pi * x[0] + 3.0 * pi) / 4.0));
    for (std::size_t i = 0; i + 1 < d; ++i) {
        sum += sq((x[i] - 1.0) / 4.0) * (1.0 + 10.0 * sq(std::sin((pi * x[i] + 7.0 * pi) / 4.0)));
    }
    sum += sq((x[d - 1] - 1.0) / 4.0) * (1.0 + sq(std::sin((2.0 * pi * x[d - 1] + 6.0 * pi) / 4.0)));
    return sum;
}

double rastrigin(std::span<const double> x) {
    require_nonempty(x, "rastrigin");
    double sum = 10.0 * static_cast<double>(x.size());
    for (double v : x) sum += v * v - 10.0 * std::cos(2.0 * pi * v);
    return sum;
}

double rosenbrock(std::span<const double> x) {
    if (x.size() < 2) throw DimensionError("rosenbrock needs at least two components");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) sum += 100.0 * sq(x[i] * x[i] - x[i + 1]) + sq(1.0 - x[i]);
    return sum;
}

double shekel_raw(std::span<const double> x) {
    require_dim(x, 4, "shekel");
    double sum = 0.0;
    for (std::size_t i = 0; i < 10; ++i) {
        double d2 = kShekelBeta[i];
        for (std::size_t j = 0; j < 4; ++j) d2 += sq(x[j] - kShekelC[j][i]);
        sum += 1.0 / d2;
    }
    return -sum;
}

double shekel(std::span<const double> x) {
    return shekel_raw(x) - kShekelRawMinimum;
}

double sphere(std::span<const double> x) {
    require_nonempty(x, "sphere");
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

double michalewicz_axis_minimizer(std::size_t axis, double m) {
    if (axis == 0) throw std::invalid_argument("michalewicz axes are numbered from 1");
    const double index = static_cast<double>(axis);
    // Dense scan, then golden-section search on the bracketing cell.
    constexpr std::size_t steps = 200000;
    const double h = pi / static_cast<double>(steps);
    std::size_t best = 0;
    double best_value = michalewicz_term(0.0, index, m);
    for (std::size_t k = 1; k <= steps; ++k) {
        const double v = michalewicz_term(h * static_cast<double>(k), index, m);
        if (v < best_value) {
            best_value = v;
            best = k;
        }
    }
    double a = h * static_cast<double>(best == 0 ? 0 : best - 1);
    double b = std::min(pi, h * static_cast<double>(best + 1));
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = michalewicz_term(c, index, m);
    double fd = michalewicz_term(d, index, m);
    for (int iter = 0; iter < 200 && b - a > 1e-15; ++iter) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = michalewicz_term(c, index, m);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = michalewicz_term(d, index, m);
        }
    }
    return (a + b) / 2.0;
}

// Registry ---------------------------------------------------------------------

namespace {

struct Entry {
    BenchmarkSpec spec;
    std::function<double(std::span<const double>)> fn;
    std::function<KnownOptimum(std::size_t)> optimum;
};

KnownOptimum constant_optimum(std::size_t dim, double coordinate, double value) {
    return {Point(dim, coordinate), value};
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        std::vector<Entry> t;
        t.push_back({{"ackley", true, 128, -32.768, 32.768, "f(0,...,0) = 0"},
                     ackley,
                     [](std::size_t d) { return constant_optimum(d, 0.0, 0.0); }});
        t.push_back({{"beale", false, 2, -4.5, 4.5, "f(3, 0.5) = 0"},
                     beale,
                     [](std::size_t) { return KnownOptimum{{3.0, 0.5}, 0.0}; }});
        t.push_back({{"easom", false, 2, -100.0, 100.0, "f(pi, pi) = -1"},
                     easom,
                     [](std::size_t) { return KnownOptimum{{pi, pi}, -1.0}; }});
        t.push_back({{"goldstein_price", false, 2, -2.0, 2.0, "f(0, -1) = 0 (shifted by -3)"},
                     goldstein_price,
                     [](std::size_t) { return KnownOptimum{{0.0, -1.0}, 0.0}; }});
        t.push_back({{"griewank", true, 10, -600.0, 600.0, "f(0,...,0) = 0"},
                     griewank,
                     [](std::size_t d) { return constant_optimum(d, 0.0, 0.0); }});
        t.push_back({{"levy", true, 16, -10.0, 10.0, "f(1,...,1) = 0"},
                     levy,
                     [](std::size_t d) { return constant_optimum(d, 1.0, 0.0); }});
        t.push_back({{"michalewicz", true, 10, 0.0, pi, "per-axis minimizers; d=10 gives -9.66015"},
                     [](std::span<const double> x) { return michalewicz(x); },
                     [](std::size_t d) {
                         KnownOptimum opt;
                         opt.position.resize(d);
                         for (std::size_t i = 0; i < d; ++i) opt.position[i] = michalewicz_axis_minimizer(i + 1);
                         opt.value = michalewicz(opt.position);
                         return opt;
                     }});
        t.push_back({{"rastrigin", true, 10, -5.12, 5.12, "f(0,...,0) = 0"},
                     rastrigin,
                     [](std::size_t d) { return constant_optimum(d, 0.0, 0.0); }});
        t.push_back({{"rosenbrock", true, 128, -5.0, 10.0, "f(1,...,1) = 0"},
                     rosenbrock,
                     [](std::size_t d) { return constant_optimum(d, 1.0, 0.0); }});
        t.push_back({{"shekel", false, 4, 0.0, 10.0, "normalized: f(x*) = 0 near (4,4,4,4); raw -10.532087"},
                     shekel,
                     [](std::size_t) {
                         return KnownOptimum{Point(std::begin(kShekelMinimizer), std::end(kShekelMinimizer)), 0.0};
                     }});
        t.push_back({{"sphere", true, 32, -5.12, 5.12, "f(0,...,0) = 0"},
                     sphere,
                     [](std::size_t d) { return constant_optimum(d, 0.0, 0.0); }});
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<BenchmarkSpec>& registry() {
    static const std::vector<BenchmarkSpec> specs = [] {
        std::vector<BenchmarkSpec> out;
        for (const auto& e : entries()) out.push_back(e.spec);
        return out;
    }();
    return specs;
}

Objective registry_lookup(std::string_view name, std::optional<std::size_t> dim) {
    const auto& table = entries();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.spec.name == name; });
    if (it == table.end()) throw std::invalid_argument("unknown benchmark '" + std::string(name) + "'");
    const BenchmarkSpec& spec = it->spec;

    std::size_t d = spec.default_dim;
    if (dim) {
        if (!spec.variable_dim && *dim != spec.default_dim)
            throw DimensionError(spec.name + " is fixed at dimension " + std::to_string(spec.default_dim));
        if (*dim == 0) throw DimensionError("dimension must be positive");
        if (spec.name == "rosenbrock" && *dim < 2) throw DimensionError("rosenbrock needs dimension >= 2");
        d = *dim;
    }
    return Objective(spec.name, SearchSpace::cube(d, spec.lower, spec.upper), it->fn, it->optimum(d));
}

}  // namespace squidopt::bench
