#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "squidopt/core.hpp"
#include "squidopt/rng.hpp"

namespace squidopt {
namespace {

TEST(Clamp, ProjectsOutOfRangeComponent) {
    const SearchSpace space({-1.0}, {1.0});
    EXPECT_EQ(clamp(std::vector{5.0}, space), (Point{1.0}));
}

TEST(Clamp, InRangeIsIdentity) {
    const SearchSpace space({-1.0}, {1.0});
    EXPECT_EQ(clamp(std::vector{0.3}, space), (Point{0.3}));
}

TEST(Clamp, PerAxis) {
    const SearchSpace space({-1.0, -1.0}, {1.0, 1.0});
    EXPECT_EQ(clamp(std::vector{-2.0, 0.5}, space), (Point{-1.0, 0.5}));
}

TEST(Clamp, LengthMismatchThrows) {
    const SearchSpace space({-1.0, -1.0}, {1.0, 1.0});
    EXPECT_THROW(clamp(std::vector{0.0}, space), DimensionError);
}

TEST(Clamp, Idempotent) {
    const SearchSpace space = SearchSpace::cube(5, -2.0, 3.0);
    RngStream rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        Point x(5);
        for (auto& c : x) c = rng.uniform(-10.0, 10.0);
        const Point once = clamp(x, space);
        EXPECT_EQ(clamp(once, space), once);
        EXPECT_TRUE(space.contains(once));
    }
}

TEST(SearchSpace, RejectsBadBounds) {
    EXPECT_THROW(SearchSpace({}, {}), DimensionError);
    EXPECT_THROW(SearchSpace({0.0}, {1.0, 2.0}), DimensionError);
    EXPECT_THROW(SearchSpace({1.0}, {1.0}), ParameterError);
    EXPECT_DOUBLE_EQ(SearchSpace({0.0, -2.0}, {1.0, 2.0}).mean_width(), 2.5);
}

TEST(Objective, OptimumMustLieInside) {
    const auto f = [](std::span<const double>) { return 0.0; };
    EXPECT_THROW(Objective("f", SearchSpace::cube(1, 0.0, 1.0), f, KnownOptimum{{2.0}, 0.0}), ParameterError);
    EXPECT_NO_THROW(Objective("f", SearchSpace::cube(1, 0.0, 1.0), f, KnownOptimum{{0.5}, 0.0}));
}

TEST(Arcsine, Endpoints) {
    EXPECT_EQ(arcsine_from_uniform(0.0), 0.0);
    EXPECT_DOUBLE_EQ(arcsine_from_uniform(1.0), 1.0);
    EXPECT_DOUBLE_EQ(arcsine_from_uniform(0.5), 0.5);
}

// Kolmogorov-Smirnov distance of the sample against F(x) = (2/pi) asin(sqrt(x)).
double arcsine_ks(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double cdf = 2.0 / std::numbers::pi * std::asin(std::sqrt(xs[i]));
        d = std::max({d, static_cast<double>(i + 1) / n - cdf, cdf - static_cast<double>(i) / n});
    }
    return d;
}

TEST(Arcsine, DistributionAndMean) {
    RngStream rng(2024);
    std::vector<double> xs(100000);
    double sum = 0.0;
    for (auto& x : xs) {
        x = sample_arcsine(rng);
        ASSERT_GE(x, 0.0);
        ASSERT_LE(x, 1.0);
        sum += x;
    }
    EXPECT_LT(arcsine_ks(xs), 0.01);
    EXPECT_NEAR(sum / static_cast<double>(xs.size()), 0.5, 0.01);
}

TEST(UniformPoint, NarrowSpaceStaysInside) {
    const double eps = 1e-9;
    const SearchSpace space({-eps}, {eps});
    RngStream rng(3);
    for (int i = 0; i < 100; ++i) {
        const Point p = uniform_point(space, rng);
        EXPECT_LE(std::abs(p[0]), eps);
    }
}

TEST(UniformPoint, PerAxisMean) {
    const SearchSpace space = SearchSpace::cube(2, -1.0, 1.0);
    RngStream rng(5);
    double s0 = 0.0, s1 = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const Point p = uniform_point(space, rng);
        s0 += p[0];
        s1 += p[1];
    }
    EXPECT_NEAR(s0 / n, 0.0, 0.02);
    EXPECT_NEAR(s1 / n, 0.0, 0.02);
}

TEST(UniformPoint, SameSeedSamePoint) {
    const SearchSpace space = SearchSpace::cube(4, -3.0, 7.0);
    RngStream a(42), b(42);
    EXPECT_EQ(uniform_point(space, a), uniform_point(space, b));
}

TEST(Rng, EqualSeedsEqualStreams) {
    RngStream a(987654321), b(987654321);
    for (int i = 0; i < 10000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, KnownFirstOutputs) {
    // First two outputs of the reference SplitMix64 generator seeded with 0.
    EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(splitmix64(0x9E3779B97F4A7C15ULL), 0x6E789E6AA1B965F4ULL);
    RngStream a(0), b(1);
    EXPECT_NE(a.next_u64(), b.next_u64());
}

TEST(Rng, BelowIsInRange) {
    RngStream rng(9);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 70000; ++i) ++counts[rng.below(7)];
    for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(Rng, NormalMoments) {
    RngStream rng(17);
    double sum = 0.0, sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sq += z * z;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sq / n, 1.0, 0.02);
}

TEST(Rng, TrialSeedsDiffer) {
    EXPECT_NE(derive_trial_seed(0, "ssa", 0), derive_trial_seed(0, "ssa", 1));
    EXPECT_NE(derive_trial_seed(0, "ssa", 0), derive_trial_seed(0, "pso", 0));
    EXPECT_EQ(derive_trial_seed(5, "ga", 3), derive_trial_seed(5, "ga", 3));
}

TEST(Evaluator, CountsAndTracksIncumbent) {
    const Objective obj("id", SearchSpace::cube(1, -5.0, 5.0), [](std::span<const double> x) { return x[0]; });
    Budget budget;
    budget.max_evaluations = 3;
    Evaluator ev(obj, budget);
    EXPECT_FALSE(ev.has_incumbent());
    ev.evaluate(std::vector{2.0});
    ev.evaluate(std::vector{-1.0});
    ev.evaluate(std::vector{4.0});
    EXPECT_EQ(ev.evaluations(), 3u);
    EXPECT_EQ(ev.best_fitness(), -1.0);
    EXPECT_EQ(ev.best_position(), (Point{-1.0}));
    EXPECT_TRUE(ev.exhausted());
    EXPECT_THROW(ev.evaluate(std::vector{0.0}), std::logic_error);
}

TEST(Evaluator, NonFiniteCarriesPosition) {
    const Objective obj("nan", SearchSpace::cube(2, -1.0, 1.0),
                        [](std::span<const double>) { return std::numeric_limits<double>::quiet_NaN(); });
    Evaluator ev(obj, Budget{});
    try {
        ev.evaluate(std::vector{0.25, -0.5});
        FAIL() << "expected NonFiniteObjective";
    } catch (const NonFiniteObjective& e) {
        EXPECT_EQ(e.position(), (Point{0.25, -0.5}));
        EXPECT_NE(std::string(e.what()).find("0.25"), std::string::npos);
    }
}

TEST(Evaluator, TargetReached) {
    const Objective obj("id", SearchSpace::cube(1, -5.0, 5.0), [](std::span<const double> x) { return x[0]; });
    Budget budget;
    budget.target_fitness = 0.0;
    Evaluator ev(obj, budget);
    ev.evaluate(std::vector{1.0});
    EXPECT_FALSE(ev.target_reached());
    ev.evaluate(std::vector{-0.5});
    EXPECT_TRUE(ev.target_reached());
}

}  // namespace
}  // namespace squidopt
