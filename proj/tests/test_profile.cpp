#include <gtest/gtest.h>

#include "gsym/profile.hpp"

using namespace gsym;

TEST(Profile, Validation) {
    EXPECT_THROW(Profile({0.0, 1.0}, {}), invalid_parameter);
    EXPECT_THROW(Profile({0.0, 0.5}, {1.0}), invalid_parameter);
    EXPECT_THROW(Profile({0.0, 0.5, 0.5, 1.0}, {3.0, 2.0, 1.0}), invalid_parameter);
    EXPECT_THROW(Profile({0.0, 0.5, 1.0}, {1.0, 2.0}), invalid_parameter);
    EXPECT_THROW(Profile::uniform({1.0, std::nan("")}), invalid_parameter);
    EXPECT_NO_THROW(Profile({0.0, 0.5, 1.0}, {2.0, 2.0}));
}

TEST(Profile, RightContinuousEvaluation) {
    const Profile p({0.0, 0.5, 1.0}, {3.0, 1.0});
    EXPECT_EQ(p(0.25), 3.0);
    EXPECT_EQ(p(0.5), 3.0);
    EXPECT_EQ(p(0.5000001), 1.0);
    EXPECT_EQ(p(1.0), 1.0);
    EXPECT_EQ(p(0.0), 3.0);
    EXPECT_EQ(p(2.0), 1.0);
}

TEST(Profile, CumulativeAndIntegral) {
    const Profile p({0.0, 0.5, 1.0}, {3.0, 1.0});
    EXPECT_EQ(p.cumulative(0.0), 0.0);
    EXPECT_EQ(p.cumulative(0.25), 0.75);
    EXPECT_EQ(p.cumulative(0.5), 1.5);
    EXPECT_EQ(p.cumulative(0.75), 1.75);
    EXPECT_EQ(p.integral(), 2.0);
    EXPECT_EQ(p.cumulative(5.0), 2.0);
}

TEST(Profile, WindowAverage) {
    const Profile p = Profile::uniform({4.0, 2.0, 2.0, 0.0});
    EXPECT_EQ(p.window_average(0.3, 0.7), 2.0);
    EXPECT_DOUBLE_EQ(p.window_average(0.0, 0.5), 3.0);
    EXPECT_DOUBLE_EQ(p.window_average(-1.0, 2.0), 2.0);
    EXPECT_EQ(p.max_width(), 0.25);
}

TEST(Profile, UniformAndConstant) {
    const Profile p = Profile::uniform({3.0, 2.0, 1.0, 0.0});
    EXPECT_EQ(p.size(), 4u);
    EXPECT_EQ(p.knots()[2], 0.5);
    EXPECT_EQ(p.width(3), 0.25);
    EXPECT_EQ(p.cell_of(0.3), 1u);
    EXPECT_EQ(Profile::constant(2.0).integral(), 2.0);
    EXPECT_EQ(Profile::uniform({1.0, 1.0}), Profile::uniform({1.0, 1.0}));
}

TEST(SGrid, PointsAndEdges) {
    EXPECT_EQ(sgrid_point(0, 4), 0.125);
    EXPECT_EQ(sgrid_point(3, 4), 0.875);
    EXPECT_EQ(sgrid_edge(3, 4), 1.0);
}
