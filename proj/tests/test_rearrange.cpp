#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "gsym/rearrange.hpp"

using namespace gsym;

namespace {

// Rearrangement of |x1| under the one-dimensional Gaussian measure.
double coordinate_rearranged(double s) { return Phi_inv(1.0 - s / 2.0); }

}  // namespace

TEST(DistributionFunction, CoordinateField) {
    const GaussianGrid grid(1, 4096);
    const ScalarField f = builtin_field("coordinate", {}, 1);
    EXPECT_EQ(distribution_function(f, grid, 0.0), 1.0);
    EXPECT_NEAR(distribution_function(f, grid, 1.0), 0.31731050786291410, 1.0 / 4096);
    EXPECT_EQ(distribution_function(f, grid, 100.0), 0.0);
}

TEST(DistributionFunction, MatchesProfileSuperLevelSets) {
    const GaussianGrid grid(2, 32);
    const ScalarField f = builtin_field("mixture", {}, 2);
    const Profile p = decreasing_rearrangement(f, grid);
    for (double lambda : {0.0, 0.1, 0.3, 0.55, 0.9, 2.0}) {
        double measure = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p.values()[k] > lambda)
                measure += p.width(k);
        EXPECT_EQ(distribution_function(f, grid, lambda), measure) << lambda;
    }
}

TEST(DecreasingRearrangement, Indicator) {
    const GaussianGrid grid(1, 2048);
    const ScalarField f = builtin_field("halfspace_indicator_smooth", {{"a", 0.5}, {"eps", 0.01}}, 1);
    const Profile p = decreasing_rearrangement(f, grid);
    const double cut = Phi(0.5);
    for (double s = 0.01; s < 1.0; s += 0.01) {
        if (std::abs(s - cut) < 0.03)
            continue;
        EXPECT_NEAR(p(s), s < cut ? 1.0 : 0.0, 1e-3) << s;
    }
}

TEST(DecreasingRearrangement, ConstantField) {
    const GaussianGrid grid(2, 16);
    const Profile p = decreasing_rearrangement(parse_field("-2.5", 2), grid);
    for (double v : p.values())
        EXPECT_EQ(v, 2.5);
}

TEST(DecreasingRearrangement, CoordinateConvergesToClosedForm) {
    double previous = 1.0;
    for (std::size_t n : {256u, 1024u, 4096u}) {
        const GaussianGrid grid(1, n);
        const Profile p = decreasing_rearrangement(builtin_field("coordinate", {}, 1), grid);
        double gap = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            const double s = 0.5 * (p.knots()[k] + p.knots()[k + 1]);
            if (s >= 0.1 && s <= 0.9)
                gap = std::max(gap, std::abs(p.values()[k] - coordinate_rearranged(s)));
        }
        EXPECT_LE(gap, 3.0 / static_cast<double>(n)) << n;
        EXPECT_LT(gap, previous);
        previous = gap;
    }
}

TEST(DecreasingRearrangement, InvariantUnderRelabelling) {
    const GaussianGrid grid(2, 24);
    std::vector<double> values = sample_abs(builtin_field("poly_tanh", {}, 2), grid);
    const Profile p = rearrange_cells(values);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(values.begin(), values.end(), rng);
        EXPECT_EQ(rearrange_cells(values), p);
    }
    std::vector<double> negated = values;
    for (double& v : negated)
        v = -v;
    EXPECT_EQ(rearrange_cells(negated), p);
}

TEST(LebesgueRearrangement, Examples) {
    const Profile p = lebesgue_rearrangement({{0.5, 1.0}, {0.5, 3.0}});
    EXPECT_EQ(p, Profile({0.0, 0.5, 1.0}, {3.0, 1.0}));

    const Profile q({0.0, 0.2, 0.7, 1.0}, {5.0, 2.0, 1.0});
    EXPECT_EQ(lebesgue_rearrangement({{0.2, 5.0}, {0.5, 2.0}, {0.3, 1.0}}), q);
}

TEST(LebesgueRearrangement, PermutationInvariant) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<WeightedSample> samples(64);
    for (auto& s : samples)
        s = {1.0 / 64.0, u(rng)};
    const Profile p = lebesgue_rearrangement(samples);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(samples.begin(), samples.end(), rng);
        EXPECT_EQ(lebesgue_rearrangement(samples), p);
    }
}

TEST(LebesgueRearrangement, WeightErrors) {
    EXPECT_THROW(lebesgue_rearrangement({{0.5, 1.0}, {0.6, 3.0}}), weight_sum_error);
    EXPECT_THROW(lebesgue_rearrangement({{1.0, 1.0}, {0.0, 3.0}}), weight_sum_error);
    EXPECT_THROW(lebesgue_rearrangement({}), invalid_parameter);
}

TEST(NegDerivative, ConstantProfile) {
    for (double v : neg_derivative(Profile::uniform(std::vector<double>(100, 2.0)), 64))
        EXPECT_EQ(v, 0.0);
    EXPECT_THROW(neg_derivative(Profile::constant(1.0), 4), invalid_parameter);
}

TEST(NegDerivative, ClosedFormCoordinateProfile) {
    const std::size_t m = 4096;
    // Built directly from the closed form and from grid data.
    std::vector<double> values(8192);
    for (std::size_t k = 0; k < values.size(); ++k)
        values[k] = coordinate_rearranged((k + 0.5) / values.size());
    const Profile exact = Profile::uniform(values);
    const Profile sampled = decreasing_rearrangement(builtin_field("coordinate", {}, 1), GaussianGrid(1, 8192));
    for (const Profile* p : {&exact, &sampled}) {
        const std::vector<double> d = neg_derivative(*p, m);
        for (std::size_t j = 0; j < m; ++j) {
            const double s = sgrid_point(j, m);
            if (s < 0.05 || s > 0.95)
                continue;
            const double want = 1.0 / (2.0 * phi(coordinate_rearranged(s)));
            EXPECT_NEAR(d[j], want, 0.05 * want) << s;
        }
    }
}

TEST(NegDerivative, IndicatorProfileIsLocalised) {
    const std::size_t m = 64;
    const Profile p({0.0, 0.3, 1.0}, {1.0, 0.0});
    const std::vector<double> d = neg_derivative(p, m);
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        total += d[j] / m;
        const double lo = static_cast<double>(j) / m;
        const double hi = static_cast<double>(j + 1) / m;
        if (hi <= 0.3 - 1.0 / m || lo >= 0.3 + 1.0 / m) {
            EXPECT_EQ(d[j], 0.0) << j;
        }
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(NegDerivative, NonnegativeOnRandomProfiles) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        std::vector<double> v(37);
        for (double& x : v)
            x = u(rng);
        std::sort(v.begin(), v.end(), std::greater<>());
        for (double d : neg_derivative(Profile::uniform(v), 256))
            EXPECT_GE(d, 0.0);
    }
}

TEST(PlateauInterpolant, PreservesIntegralAndPlateauValues) {
    const Profile p = Profile::uniform({4.0, 4.0, 3.0, 3.0, 1.0, 1.0, 0.0, 0.0});
    const PlateauInterpolant q(p);
    EXPECT_EQ(q(0.125), 4.0);
    EXPECT_EQ(q(0.375), 3.0);
    EXPECT_EQ(q(0.625), 1.0);
    EXPECT_EQ(q(0.875), 0.0);
    EXPECT_GT(q(0.25), 3.0);
    EXPECT_LT(q(0.25), 4.0);
    EXPECT_DOUBLE_EQ(q.at_x(0.5 * (Phi_inv(0.125) + Phi_inv(0.375))), 3.5);
    double integral = 0.0;
    const int steps = 1 << 14;
    for (int i = 0; i < steps; ++i)
        integral += q((i + 0.5) / steps) / steps;
    EXPECT_NEAR(integral, p.integral(), 0.02);
}

TEST(Equimeasurability, EveryCorpusFieldAndYoungFunction) {
    const GaussianGrid grid(1, 1024);
    for (const auto& info : builtin_catalog())
        for (const YoungFunction& A :
             {YoungFunction::power(1), YoungFunction::power(2), YoungFunction::hinge(0.5)})
            EXPECT_LE(equimeasurability_gap(builtin_field(info.name, {}, 1), grid, A), 1e-12) << info.name;
}

TEST(Equimeasurability, ConstantAndCoordinate) {
    const GaussianGrid grid(1, 1024);
    EXPECT_EQ(equimeasurability_gap(parse_field("3", 1), grid, YoungFunction::power(2)), 0.0);
    EXPECT_LE(equimeasurability_gap(builtin_field("coordinate", {}, 1), grid, YoungFunction::power(1)), 1e-12);
}
