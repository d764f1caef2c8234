#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hyperball/optimize.hpp"

using namespace hyperball;

namespace {

constexpr double kPOpt = 6.13499;
constexpr double kDeltaOpt = 0.86338;

double delta(double p) { return simplex_density(p).delta; }

}  // namespace

TEST(MaximizeUnimodal, Parabola) {
    const auto r = maximize_unimodal([](double x) { return -(x - 2) * (x - 2); }, 0.0, 5.0, 1e-8, 200);
    EXPECT_NEAR(r.p_opt, 2.0, 1e-8);
    EXPECT_LT(r.lo, r.p_opt);
    EXPECT_LT(r.p_opt, r.hi);
    EXPECT_LE(r.hi - r.lo, 1e-8);
    EXPECT_LE(r.iterations, golden_iteration_bound(0.0, 5.0, 1e-8));
}

TEST(MaximizeUnimodal, Sine) {
    const auto r = maximize_unimodal([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-8, 200);
    EXPECT_NEAR(r.p_opt, std::numbers::pi / 2, 1e-8);
    EXPECT_DOUBLE_EQ(r.delta_opt, std::sin(r.p_opt));
}

TEST(MaximizeUnimodal, RandomConcaveParabolas) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> centre(-50.0, 50.0);
    std::uniform_real_distribution<double> curvature(0.01, 100.0);
    std::uniform_real_distribution<double> width(0.5, 30.0);
    std::uniform_real_distribution<double> tol_exp(-9.0, -3.0);
    for (int n = 0; n < 50; ++n) {
        const double c = centre(rng);
        const double k = curvature(rng);
        const double lo = c - width(rng);
        const double hi = c + width(rng);
        const double tol = std::pow(10.0, tol_exp(rng));
        // no constant offset: f must stay resolvable in double near the peak
        const auto r = maximize_unimodal([&](double x) { return -k * (x - c) * (x - c); }, lo, hi, tol, 500);
        EXPECT_NEAR(r.p_opt, c, tol) << "case " << n;
        EXPECT_LE(r.iterations, golden_iteration_bound(lo, hi, tol)) << "case " << n;
    }
}

TEST(MaximizeUnimodal, MaximumAtBracketEdge) {
    const auto r = maximize_unimodal([](double x) { return x; }, 0.0, 1.0, 1e-9, 200);
    EXPECT_NEAR(r.p_opt, 1.0, 1e-9);
}

TEST(MaximizeUnimodal, Errors) {
    auto f = [](double x) { return -x * x; };
    EXPECT_THROW(maximize_unimodal(f, 1.0, 1.0, 1e-6, 100), InvalidInput);
    EXPECT_THROW(maximize_unimodal(f, -1.0, 1.0, 0.0, 100), InvalidInput);
    try {
        maximize_unimodal(f, -1.0, 1.0, 1e-12, 5);
        FAIL() << "expected ConvergenceFailure";
    } catch (const ConvergenceFailure& e) {
        EXPECT_LT(e.lo(), e.hi());
        EXPECT_GE(e.lo(), -1.0);
        EXPECT_LE(e.hi(), 1.0);
    }
}

TEST(MaximizeUnimodal, PropagatesEvaluationErrors) {
    auto f = [](double x) -> double {
        if (x > 0.5) {
            throw DomainError("outside");
        }
        return x;
    };
    EXPECT_THROW(maximize_unimodal(f, 0.0, 1.0, 1e-6, 100), DomainError);
}

TEST(MaximizeUnimodal, DensityOnFixedBracket) {
    const auto r = maximize_unimodal(delta, 6.0001, 12.0, 1e-7, 200);
    EXPECT_NEAR(r.p_opt, kPOpt, 5e-4);
}

TEST(FindOptimalP, DefaultTolerance) {
    const auto r = find_optimal_p(1e-7);
    EXPECT_NEAR(r.p_opt, kPOpt, 5e-4);
    EXPECT_NEAR(r.delta_opt, kDeltaOpt, 1e-4);
    EXPECT_EQ(r.delta_opt, delta(r.p_opt));
    EXPECT_LE(r.hi - r.lo, 1e-7);
    EXPECT_GT(r.delta_opt, 0.85328);
}

TEST(FindOptimalP, CoarseTolerance) {
    EXPECT_NEAR(find_optimal_p(1e-3).p_opt, kPOpt, 1e-3);
    EXPECT_NEAR(find_optimal_p(1e-2).p_opt, kPOpt, 1e-2);
}

TEST(FindOptimalP, LocalMaximumCertificate) {
    for (double tol : {1e-3, 1e-5, 1e-7}) {
        const auto r = find_optimal_p(tol);
        EXPECT_GE(r.delta_opt, delta(r.p_opt - 10 * tol)) << "tol = " << tol;
        EXPECT_GE(r.delta_opt, delta(r.p_opt + 10 * tol)) << "tol = " << tol;
    }
}

TEST(FindOptimalP, RejectsBadTolerance) {
    EXPECT_THROW(find_optimal_p(0.0), InvalidInput);
    EXPECT_THROW(find_optimal_p(-1.0), InvalidInput);
}

TEST(FindOptimalP, UnresolvableToleranceFails) {
    EXPECT_THROW(find_optimal_p(1e-20), ConvergenceFailure);
}

TEST(DensityShape, UnimodalOnSampledGrid) {
    std::vector<double> rising;
    for (int i = 1; i <= 13; ++i) {
        rising.push_back(6.0 + 0.01 * i);
    }
    for (std::size_t i = 1; i < rising.size(); ++i) {
        EXPECT_LT(delta(rising[i - 1]), delta(rising[i])) << "p = " << rising[i];
    }

    std::vector<double> falling{6.14, 6.2, 6.5};
    for (int p = 7; p <= 100; ++p) {
        falling.push_back(p);
    }
    for (std::size_t i = 1; i < falling.size(); ++i) {
        EXPECT_GT(delta(falling[i - 1]), delta(falling[i])) << "p = " << falling[i];
    }
}
