#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "hyperball/density.hpp"

using namespace hyperball;
using std::numbers::pi;

namespace {

struct TableRow {
    double p, h, vol_orthoscheme, vol_piece, delta;
};

constexpr std::array<TableRow, 6> kTable{{
    {7, 0.78871, 0.08856, 0.07284, 0.82251},
    {8, 0.56419, 0.10721, 0.08220, 0.76673},
    {9, 0.45320, 0.11825, 0.08474, 0.71663},
    {20, 0.16397, 0.14636, 0.06064, 0.41431},
    {50, 0.06325, 0.15167, 0.02918, 0.19240},
    {100, 0.03147, 0.15241, 0.01549, 0.10165},
}};

constexpr double kBoroczkyFlorian = 0.85328;

}  // namespace

TEST(HyperballPieceVolume, Examples) {
    EXPECT_NEAR(hyperball_piece_volume(pi / 6 - pi / 7, 0.78871), 0.07284, 5e-6);
    EXPECT_EQ(hyperball_piece_volume(3.7, 0.0), 0.0);
    EXPECT_EQ(hyperball_piece_volume(0.0, 1.0), 0.0);
}

TEST(HyperballPieceVolume, ThinSlabIsAreaTimesHeight) {
    // (sinh 2h + 2h) / 4 = h + O(h^3)
    EXPECT_NEAR(hyperball_piece_volume(2.0, 1e-6), 2e-6, 1e-17);
}

TEST(HyperballPieceVolume, Errors) {
    EXPECT_THROW(hyperball_piece_volume(-1.0, 1.0), DomainError);
    EXPECT_THROW(hyperball_piece_volume(1.0, -1.0), DomainError);
}

TEST(SimplexDensity, Examples) {
    EXPECT_NEAR(simplex_density(7).delta, 0.82251, 5e-6);
    EXPECT_NEAR(simplex_density(20).delta, 0.41431, 5e-6);
    EXPECT_NEAR(simplex_density(50).delta, 0.19240, 5e-6);
}

TEST(SimplexDensity, FullTableRegression) {
    for (const auto& r : kTable) {
        const DensityRow row = simplex_density(r.p);
        EXPECT_NEAR(row.h, r.h, 1e-4) << "p = " << r.p;
        EXPECT_NEAR(row.vol_orthoscheme, r.vol_orthoscheme, 1e-4) << "p = " << r.p;
        EXPECT_NEAR(row.vol_piece, r.vol_piece, 1e-4) << "p = " << r.p;
        EXPECT_NEAR(row.delta, r.delta, 1e-4) << "p = " << r.p;
    }
}

TEST(SimplexDensity, TetrahedronRatioMatchesOrthoschemeRatio) {
    const DensityRow row = simplex_density(8.5);
    EXPECT_EQ(row.delta, row.vol_piece / row.vol_orthoscheme);
    EXPECT_DOUBLE_EQ(row.vol_pieces_tetra() / row.vol_tetra(), row.delta);
}

TEST(SimplexDensity, BoundsOnLogGrid) {
    for (double p = 6.001; p < 1e5; p *= 1.25) {
        const double d = simplex_density(p).delta;
        EXPECT_GT(d, 0.0) << "p = " << p;
        EXPECT_LT(d, 1.0) << "p = " << p;
    }
}

TEST(SimplexDensity, BoundaryBehaviour) {
    EXPECT_NEAR(simplex_density(6 + 1e-4).delta, kBoroczkyFlorian, 2e-3);
    EXPECT_LT(simplex_density(1e5).delta, 1e-3);
}

TEST(SimplexDensity, PieceMatchesClosedFormArea) {
    for (double p : {6.01, 6.5, 7.0, 11.0, 50.0, 1e3, 1e5}) {
        const DensityRow row = simplex_density(p);
        const double closed = 0.25 * (pi / 6 - pi / p) * (std::sinh(2 * row.h) + 2 * row.h);
        EXPECT_NEAR(row.vol_piece, closed, 1e-9) << "p = " << p;
    }
}

TEST(SimplexDensity, Errors) {
    EXPECT_THROW(simplex_density(6.0), DomainError);
    EXPECT_THROW(simplex_density(4.0), DomainError);
}

TEST(VermesDensity, Examples) {
    EXPECT_LT(vermes_hexagon_density(1e-8), 1e-6);
    EXPECT_GT(vermes_hexagon_density(1e-8), 0.0);

    const double limit = 3.0 / pi;
    const double at10 = vermes_hexagon_density(10.0);
    EXPECT_LT(at10, limit);
    EXPECT_LT(limit - at10, 1e-8);

    // second route: asinh(x) = log(x + sqrt(x^2 + 1))
    const double h = 0.78871;
    const double x = 1.0 / (2.0 * std::sinh(h));
    const double alt = 6.0 * std::sinh(h) * std::log(x + std::sqrt(x * x + 1.0)) / pi;
    EXPECT_NEAR(vermes_hexagon_density(h), alt, 1e-14);
    EXPECT_NEAR(vermes_hexagon_density(h), 0.909200962616205, 1e-12);
}

TEST(VermesDensity, IncreasingBelowLimit) {
    double prev = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double h = 0.01 + (10.0 - 0.01) * i / 99.0;
        const double v = vermes_hexagon_density(h);
        EXPECT_GT(v, prev) << "h = " << h;
        EXPECT_LT(v, 3.0 / pi) << "h = " << h;
        prev = v;
    }
}

TEST(VermesDensity, Errors) {
    EXPECT_THROW(vermes_hexagon_density(0.0), DomainError);
    EXPECT_THROW(vermes_hexagon_density(-1.0), DomainError);
}
