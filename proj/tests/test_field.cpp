#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "gsym/field.hpp"

using namespace gsym;

TEST(Builtin, CoordinateIsLinearWithUnitGradient) {
    const ScalarField f = builtin_field("coordinate", {{"axis", 1}}, 2);
    const std::vector<double> x = {0.7, -1.3};
    EXPECT_EQ(f(x), 0.7);
    const auto g = gradient_at(f, x);
    EXPECT_EQ(g, (std::vector<double>{1.0, 0.0}));
    EXPECT_EQ(gradient_norm_at(f, x), 1.0);
    const ScalarField f2 = builtin_field("coordinate", {{"axis", 2}}, 2);
    EXPECT_EQ(f2(x), -1.3);
}

TEST(Builtin, GaussianBump) {
    const ScalarField f = builtin_field("gaussian_bump", {{"c", 1}}, 2);
    const std::vector<double> x = {0.5, -1.0};
    EXPECT_DOUBLE_EQ(f(x), std::exp(-1.25));
    const std::vector<double> origin = {0.0, 0.0};
    EXPECT_EQ(gradient_at(f, origin), (std::vector<double>{0.0, 0.0}));
}

TEST(Builtin, Monotone1dDependsOnFirstCoordinate) {
    const ScalarField f = builtin_field("monotone1d", {}, 3);
    EXPECT_DOUBLE_EQ(f(std::vector<double>{1.0, 5.0, -2.0}), std::exp(-1.0));
    EXPECT_EQ(f(std::vector<double>{1.0, 5.0, -2.0}), f(std::vector<double>{1.0, 0.0, 0.0}));
}

TEST(Builtin, UnknownNameAndParameters) {
    EXPECT_THROW(builtin_field("nope", {}, 1), unknown_field);
    EXPECT_THROW(builtin_field("gaussian_bump", {{"d", 1.0}}, 1), invalid_parameter);
    EXPECT_THROW(builtin_field("gaussian_bump", {{"c", -1.0}}, 1), invalid_parameter);
    EXPECT_THROW(builtin_field("coordinate", {{"axis", 2}}, 1), invalid_parameter);
    EXPECT_THROW(builtin_field("coordinate", {{"axis", 1.5}}, 2), invalid_parameter);
    EXPECT_THROW(builtin_field("halfspace_indicator_smooth", {{"eps", 0.0}}, 1), invalid_parameter);
}

TEST(Builtin, CatalogueListsEveryFamily) {
    std::vector<std::string> names;
    for (const auto& info : builtin_catalog()) {
        names.emplace_back(info.name);
        EXPECT_NO_THROW(builtin_field(info.name, {}, 2));
    }
    for (const char* want : {"coordinate", "monotone1d", "gaussian_bump", "mixture", "poly_tanh",
                             "halfspace_indicator_smooth"})
        EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
    EXPECT_NE(std::string(builtin_info("coordinate").gradient).find("|∇f| ≡ 1"), std::string::npos);
}

TEST(Builtin, AnalyticGradientsMatchCentralDifferences) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (const auto& info : builtin_catalog()) {
        for (std::size_t dim : {1u, 2u, 3u}) {
            const ScalarField f = builtin_field(info.name, {}, dim);
            ASSERT_EQ(f.gradient_mode(), GradientMode::analytic);
            std::vector<double> x(dim), analytic(dim), numeric(dim);
            for (int i = 0; i < 100; ++i) {
                for (double& v : x)
                    v = u(rng);
                gradient_at(f, x, analytic);
                fd_gradient(f, x, numeric);
                for (std::size_t d = 0; d < dim; ++d)
                    EXPECT_LE(std::abs(analytic[d] - numeric[d]), 1e-5 * (1.0 + std::abs(analytic[d])))
                        << info.name << " dim " << dim;
            }
        }
    }
}

TEST(ParsedField, EvaluationAndGradient) {
    const ScalarField f = parse_field("exp(-x1^2)", 1);
    EXPECT_EQ(f(std::vector<double>{0.0}), 1.0);
    EXPECT_EQ(f.gradient_mode(), GradientMode::finite_difference);
    const ScalarField sq = parse_field("x1^2", 1);
    EXPECT_NEAR(gradient_at(sq, std::vector<double>{1.5})[0], 3.0, 1e-6);
    const ScalarField g = parse_field("abs(x1)+0.5*x2^2", 2);
    EXPECT_EQ(g(std::vector<double>{1.0, 2.0}), 3.0);
    EXPECT_FALSE(g.smooth());
    EXPECT_TRUE(f.smooth());
    EXPECT_THROW(parse_field("x1*", 1), parse_error);
}

TEST(FiniteDifference, StepScalesWithCoordinate) {
    EXPECT_GT(fd_step(100.0), 50.0 * fd_step(0.0));
    EXPECT_NEAR(fd_step(0.0), std::cbrt(std::numeric_limits<double>::epsilon()), 1e-20);
}
