#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "squidopt/benchmarks.hpp"

namespace squidopt::bench {
namespace {

constexpr double pi = std::numbers::pi;

struct GridMin {
    double value = INFINITY;
    Point at;
};

// Exhaustive scan of a 2-D box at a fixed step, endpoints included.
GridMin grid_scan(const std::function<double(std::span<const double>)>& f, double lo0, double hi0, double lo1,
                  double hi1, double step) {
    GridMin best;
    const auto n0 = static_cast<long>(std::floor((hi0 - lo0) / step + 1e-9));
    const auto n1 = static_cast<long>(std::floor((hi1 - lo1) / step + 1e-9));
    Point x(2);
    for (long i = 0; i <= n0; ++i) {
        x[0] = lo0 + static_cast<double>(i) * step;
        for (long j = 0; j <= n1; ++j) {
            x[1] = lo1 + static_cast<double>(j) * step;
            const double v = f(x);
            if (v < best.value) best = {v, x};
        }
    }
    return best;
}

// Compass search polish from a grid point.
GridMin polish(const std::function<double(std::span<const double>)>& f, GridMin start, double step,
               const SearchSpace& space) {
    while (step > 1e-12) {
        bool improved = false;
        for (std::size_t k = 0; k < start.at.size(); ++k) {
            for (double dir : {-1.0, 1.0}) {
                Point y = start.at;
                y[k] = std::clamp(y[k] + dir * step, space.lower()[k], space.upper()[k]);
                const double v = f(y);
                if (v < start.value) {
                    start = {v, y};
                    improved = true;
                }
            }
        }
        if (!improved) step /= 2.0;
    }
    return start;
}

TEST(Beale, Examples) {
    EXPECT_EQ(beale(std::vector{3.0, 0.5}), 0.0);
    EXPECT_EQ(beale(std::vector{0.0, 0.0}), 14.203125);
    EXPECT_THROW(beale(std::vector{1.0, 2.0, 3.0}), DimensionError);
}

TEST(Easom, Examples) {
    EXPECT_EQ(easom(std::vector{pi, pi}), -1.0);
    EXPECT_NEAR(easom(std::vector{0.0, 0.0}), -std::exp(-2.0 * pi * pi), 1e-24);
    EXPECT_NEAR(easom(std::vector{0.0, 0.0}), -2.675e-9, 1e-12);
    for (double y : {-50.0, 0.0, 3.0, 80.0}) EXPECT_NEAR(easom(std::vector{pi / 2.0, y}), 0.0, 1e-16);
}

TEST(Michalewicz, ZeroAtOrigin) {
    EXPECT_EQ(michalewicz(std::vector<double>(10, 0.0)), 0.0);
    EXPECT_EQ(michalewicz(std::vector<double>(3, 0.0)), 0.0);
}

TEST(Michalewicz, TenDimensionalOptimum) {
    const Objective obj = registry_lookup("michalewicz", 10);
    const auto& opt = *obj.known_optimum();
    EXPECT_NEAR(opt.value, -9.66015, 1e-4);
    EXPECT_EQ(obj(opt.position), opt.value);
}

TEST(Michalewicz, TwoDimensionalOptimumMatchesGridOracle) {
    const auto f = [](std::span<const double> x) { return michalewicz(x); };
    const SearchSpace space = SearchSpace::cube(2, 0.0, pi);
    const GridMin found = polish(f, grid_scan(f, 0.0, pi, 0.0, pi, 1e-3), 1e-3, space);
    EXPECT_NEAR(found.value, -1.8013, 1e-4);
    EXPECT_NEAR(found.at[0], 2.2029, 1e-4);
    EXPECT_NEAR(found.at[1], 1.5708, 1e-4);
    const Objective obj = registry_lookup("michalewicz", 2);
    EXPECT_NEAR(obj.known_optimum()->value, found.value, 1e-12);
    EXPECT_LE(obj.known_optimum()->value, found.value + 1e-15);
}

TEST(Ackley, Examples) {
    for (std::size_t d : {1u, 2u, 16u, 128u}) EXPECT_NEAR(ackley(std::vector<double>(d, 0.0)), 0.0, 1e-12);
    const double oracle = -20.0 * std::exp(-0.2) - std::exp(std::cos(2.0 * pi)) + 20.0 + std::exp(1.0);
    EXPECT_NEAR(ackley(std::vector{1.0}), oracle, 1e-14);
}

TEST(GoldsteinPrice, Examples) {
    EXPECT_EQ(goldstein_price(std::vector{0.0, -1.0}), 0.0);
    EXPECT_EQ(goldstein_price(std::vector{0.0, 0.0}), 597.0);
}

TEST(Griewank, Examples) {
    EXPECT_EQ(griewank(std::vector<double>(10, 0.0)), 0.0);
    EXPECT_NEAR(griewank(std::vector{pi}), 2.0 + pi * pi / 4000.0, 1e-15);
    EXPECT_NEAR(griewank(std::vector{pi}), 2.00247, 1e-5);
}

TEST(Levy, Examples) {
    for (std::size_t d : {1u, 2u, 16u}) EXPECT_NEAR(levy(std::vector<double>(d, 1.0)), 0.0, 1e-12);
}

TEST(Rastrigin, Examples) {
    EXPECT_EQ(rastrigin(std::vector<double>(10, 0.0)), 0.0);
    EXPECT_NEAR(rastrigin(std::vector{1.0, 1.0}), 2.0, 1e-12);
}

TEST(Rosenbrock, Examples) {
    EXPECT_EQ(rosenbrock(std::vector<double>(2, 1.0)), 0.0);
    EXPECT_EQ(rosenbrock(std::vector<double>(128, 1.0)), 0.0);
    EXPECT_EQ(rosenbrock(std::vector{0.0, 0.0}), 1.0);
    EXPECT_THROW(rosenbrock(std::vector{1.0}), DimensionError);
}

TEST(Shekel, ComputedValues) {
    EXPECT_NEAR(shekel_raw(std::vector{4.0, 4.0, 4.0, 4.0}), -10.531929, 1e-6);
    EXPECT_NEAR(shekel(std::vector{4.0, 4.0, 4.0, 4.0}), 1.57970e-4, 1e-9);
    const Point xstar(std::begin(kShekelMinimizer), std::end(kShekelMinimizer));
    EXPECT_NEAR(shekel_raw(xstar), kShekelRawMinimum, 1e-12);
    EXPECT_NEAR(shekel(xstar), 0.0, 1e-12);
    const double corner = shekel_raw(std::vector{10.0, 10.0, 10.0, 10.0});
    EXPECT_LT(corner, 0.0);
    EXPECT_GT(corner, -1.0);
    EXPECT_THROW(shekel(std::vector{4.0, 4.0}), DimensionError);
}

TEST(Shekel, MinimizerIsStationaryAndLocallyBest) {
    const Point xstar(std::begin(kShekelMinimizer), std::end(kShekelMinimizer));
    const double h = 1e-6;
    for (std::size_t k = 0; k < 4; ++k) {
        Point up = xstar, down = xstar;
        up[k] += h;
        down[k] -= h;
        EXPECT_NEAR((shekel_raw(up) - shekel_raw(down)) / (2.0 * h), 0.0, 1e-6);
    }
    RngStream rng(31);
    for (int i = 0; i < 20000; ++i) {
        Point y = xstar;
        const double radius = i % 2 ? 1e-3 : 0.5;
        for (auto& c : y) c += rng.uniform(-radius, radius);
        ASSERT_GE(shekel_raw(y), kShekelRawMinimum - 1e-12);
    }
}

TEST(Shekel, GlobalOverCoarseGrid) {
    // Every foxhole other than the one near (4,4,4,4) is shallower.
    double best = INFINITY;
    Point x(4);
    for (int a = 0; a <= 40; ++a)
        for (int b = 0; b <= 40; ++b)
            for (int c = 0; c <= 40; ++c)
                for (int d = 0; d <= 40; ++d) {
                    x = {a * 0.25, b * 0.25, c * 0.25, d * 0.25};
                    best = std::min(best, shekel_raw(x));
                }
    EXPECT_GE(best, kShekelRawMinimum);
    EXPECT_NEAR(best, shekel_raw(std::vector{4.0, 4.0, 4.0, 4.0}), 1e-12);
}

TEST(Sphere, Examples) {
    EXPECT_EQ(sphere(std::vector<double>(5, 0.0)), 0.0);
    EXPECT_EQ(sphere(std::vector{1.0, 2.0}), 5.0);
    EXPECT_NEAR(sphere(std::vector<double>(32, 0.1)), 0.32, 1e-14);
}

TEST(Benchmarks, EvenFunctionsAreSymmetric) {
    RngStream rng(41);
    for (int i = 0; i < 2000; ++i) {
        Point x(7);
        for (auto& c : x) c = rng.uniform(-5.0, 5.0);
        Point neg = x;
        for (auto& c : neg) c = -c;
        EXPECT_EQ(ackley(x), ackley(neg));
        EXPECT_EQ(griewank(x), griewank(neg));
        EXPECT_EQ(rastrigin(x), rastrigin(neg));
        EXPECT_EQ(sphere(x), sphere(neg));
    }
}

TEST(Benchmarks, FiniteOnRandomPoints) {
    RngStream rng(43);
    for (const auto& spec : registry()) {
        const Objective obj = registry_lookup(spec.name);
        for (int i = 0; i < 100000; ++i) {
            const double v = obj(uniform_point(obj.space(), rng));
            ASSERT_TRUE(std::isfinite(v)) << spec.name;
        }
    }
}

TEST(Benchmarks, TwoDimensionalGridOracles) {
    struct Case {
        const char* name;
        std::optional<std::size_t> dim;
    };
    for (const Case c : {Case{"beale", {}}, Case{"easom", {}}, Case{"goldstein_price", {}}, Case{"levy", 2}}) {
        const Objective obj = registry_lookup(c.name, c.dim);
        const auto& s = obj.space();
        const double opt = obj.known_optimum()->value;
        const GridMin coarse =
            grid_scan([&](std::span<const double> x) { return obj(x); }, s.lower()[0], s.upper()[0], s.lower()[1],
                      s.upper()[1], 0.01);
        EXPECT_GE(coarse.value, opt - 1e-9) << c.name;
        const Point& p = obj.known_optimum()->position;
        const GridMin fine = grid_scan([&](std::span<const double> x) { return obj(x); }, std::max(p[0] - 0.1, s.lower()[0]),
                                       std::min(p[0] + 0.1, s.upper()[0]), std::max(p[1] - 0.1, s.lower()[1]),
                                       std::min(p[1] + 0.1, s.upper()[1]), 0.001);
        EXPECT_GE(fine.value, opt - 1e-9) << c.name;
    }
}

TEST(Levy, GridMinimumAtOnes) {
    const GridMin m = grid_scan([](std::span<const double> x) { return levy(x); }, -10.0, 10.0, -10.0, 10.0, 0.01);
    EXPECT_NEAR(m.at[0], 1.0, 0.005);
    EXPECT_NEAR(m.at[1], 1.0, 0.005);
}

TEST(Registry, Lookup) {
    EXPECT_EQ(registry().size(), 11u);
    EXPECT_EQ(registry_lookup("ackley").dim(), 128u);
    EXPECT_EQ(registry_lookup("levy").dim(), 16u);
    EXPECT_EQ(registry_lookup("rosenbrock").dim(), 128u);
    EXPECT_EQ(registry_lookup("sphere").dim(), 32u);
    EXPECT_EQ(registry_lookup("michalewicz").dim(), 10u);
    EXPECT_EQ(registry_lookup("shekel").dim(), 4u);
    EXPECT_EQ(registry_lookup("beale").dim(), 2u);
    EXPECT_THROW(registry_lookup("beale", 5), DimensionError);
    EXPECT_NO_THROW(registry_lookup("beale", 2));
    EXPECT_THROW(registry_lookup("rosenbrock", 1), DimensionError);
    EXPECT_THROW(registry_lookup("himmelblau"), std::invalid_argument);

    const Objective s3 = registry_lookup("sphere", 3);
    EXPECT_EQ(s3.known_optimum()->position, (Point{0.0, 0.0, 0.0}));
    EXPECT_EQ(s3.known_optimum()->value, 0.0);
}

TEST(Registry, OptimaEvaluateToTheirValues) {
    for (const auto& spec : registry()) {
        const Objective obj = registry_lookup(spec.name);
        const auto& opt = *obj.known_optimum();
        ASSERT_TRUE(obj.space().contains(opt.position)) << spec.name;
        EXPECT_NEAR(obj(opt.position), opt.value, 1e-12) << spec.name;
    }
    EXPECT_NEAR(registry_lookup("michalewicz", 10).known_optimum()->value, -9.66015, 1e-4);
}

TEST(Registry, BoundsMatchCanonicalBoxes) {
    const auto bounds = [](const char* name) {
        const Objective obj = registry_lookup(name);
        return std::pair{obj.space().lower()[0], obj.space().upper()[0]};
    };
    EXPECT_EQ(bounds("beale"), (std::pair{-4.5, 4.5}));
    EXPECT_EQ(bounds("easom"), (std::pair{-100.0, 100.0}));
    EXPECT_EQ(bounds("michalewicz"), (std::pair{0.0, pi}));
    EXPECT_EQ(bounds("ackley"), (std::pair{-32.768, 32.768}));
    EXPECT_EQ(bounds("goldstein_price"), (std::pair{-2.0, 2.0}));
    EXPECT_EQ(bounds("griewank"), (std::pair{-600.0, 600.0}));
    EXPECT_EQ(bounds("levy"), (std::pair{-10.0, 10.0}));
    EXPECT_EQ(bounds("rastrigin"), (std::pair{-5.12, 5.12}));
    EXPECT_EQ(bounds("rosenbrock"), (std::pair{-5.0, 10.0}));
    EXPECT_EQ(bounds("shekel"), (std::pair{0.0, 10.0}));
    EXPECT_EQ(bounds("sphere"), (std::pair{-5.12, 5.12}));
}

}  // namespace
}  // namespace squidopt::bench
