#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "gsym/symmetrize.hpp"

using namespace gsym;

TEST(Symmetrize, Monotone1dIsAFixedPoint) {
    const GaussianGrid grid(1, 1024);
    const ScalarField f = builtin_field("monotone1d", {}, 1);
    const ScalarField sym = symmetrized_field(decreasing_rearrangement(f, grid), 1);
    for (std::size_t i = 0; i < grid.size(); ++i)
        EXPECT_EQ(sym(grid.point(i)), f(grid.point(i))) << i;
}

TEST(Symmetrize, ConstantProfile) {
    for (Interpolation mode : {Interpolation::piecewise_constant, Interpolation::linear}) {
        const ScalarField sym = symmetrized_field(Profile::constant(1.75), 2, {mode});
        for (double x1 : {-3.0, 0.0, 0.4, 5.0})
            EXPECT_EQ(sym(std::vector<double>{x1, 1.0}), 1.75);
    }
}

TEST(Symmetrize, CoordinateClosedForm) {
    const GaussianGrid grid(1, 4096);
    const Profile p = decreasing_rearrangement(builtin_field("coordinate", {}, 1), grid);
    const ScalarField sym = symmetrized_field(p, 1, {Interpolation::linear, 4096});
    for (double x1 = -2.0; x1 <= 2.0; x1 += 0.125) {
        const double want = Phi_inv(1.0 - Phi(x1) / 2.0);
        EXPECT_NEAR(sym(std::vector<double>{x1}), want, 1e-3) << x1;
    }
}

TEST(Symmetrize, IgnoresTrailingCoordinatesAndDecreasesInFirst) {
    const GaussianGrid grid(2, 32);
    const Profile p = decreasing_rearrangement(builtin_field("mixture", {}, 2), grid);
    for (Interpolation mode : {Interpolation::piecewise_constant, Interpolation::linear}) {
        const ScalarField sym = symmetrized_field(p, 3, {mode, 256});
        double previous = std::numeric_limits<double>::infinity();
        for (double x1 = -4.0; x1 <= 4.0; x1 += 0.01) {
            const double v = sym(std::vector<double>{x1, 0.0, 0.0});
            EXPECT_EQ(v, sym(std::vector<double>{x1, -2.0, 7.5}));
            EXPECT_LE(v, previous);
            previous = v;
        }
    }
}

TEST(IdentityGap, ConstantField) {
    EXPECT_EQ(pointwise_identity_gap(parse_field("2", 1), GaussianGrid(1, 256), 256), 0.0);
}

TEST(IdentityGap, Monotone1dHoldsToRounding) {
    const ScalarField f = builtin_field("monotone1d", {}, 1);
    EXPECT_LE(pointwise_identity_gap(f, GaussianGrid(1, 1024), 1024), 1e-8);
    EXPECT_LE(pointwise_identity_gap(f, GaussianGrid(1, 4096), 4096), 1e-8);
}

TEST(IdentityGap, CoordinateMatchesClosedForm) {
    const std::size_t m = 2048;
    const GaussianGrid grid(1, 8192);
    const IdentityCurves c = identity_curves(builtin_field("coordinate", {}, 1), grid, m);
    ASSERT_FALSE(c.s.empty());
    for (std::size_t i = 0; i < c.s.size(); ++i) {
        const double s = c.s[i];
        EXPECT_GE(s, identity_band_lo);
        EXPECT_LE(s, identity_band_hi);
        const double want = iso_profile(s) / (2.0 * phi(Phi_inv(1.0 - s / 2.0)));
        EXPECT_NEAR(c.surrogate[i], want, 0.01 * want) << s;
        EXPECT_NEAR(c.gradient[i], want, 0.01 * want) << s;
    }
}

TEST(IdentityGap, RejectsNonSmoothFields) {
    EXPECT_THROW(pointwise_identity_gap(parse_field("abs(x1)", 1), GaussianGrid(1, 64), 64), non_smooth_field);
}

TEST(PreservesRearrangement, Examples) {
    EXPECT_EQ(symmetrization_preserves_rearrangement(parse_field("1.5", 2), GaussianGrid(2, 16), 512), 0.0);
    const GaussianGrid grid(2, 64);
    EXPECT_LE(symmetrization_preserves_rearrangement(builtin_field("gaussian_bump", {}, 2), grid, 4096), 2.0 / 64);
    const GaussianGrid line(1, 1024);
    const double gap =
        symmetrization_preserves_rearrangement(builtin_field("halfspace_indicator_smooth", {}, 1), line, 4096);
    EXPECT_LE(gap, 1e-12);
}
