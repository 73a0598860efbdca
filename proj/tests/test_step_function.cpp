#include <gtest/gtest.h>

#include <cmath>

#include "shiftdim/errors.hpp"
#include "shiftdim/step_function.hpp"

namespace sd = shiftdim;
using sd::Rational;
using sd::StepFunction;

namespace {

const StepFunction kM1({0, 1, 2}, {5, 2, 0});
const StepFunction kM2({0, 1, 2}, {2, 1, 0});
const StepFunction kSum({0, 1, Rational(3, 2), 2}, {7, 3, 2, 0});

}  // namespace

TEST(StepFunction, CanonicalForm) {
    const StepFunction f({0, 1, 2, 3}, {4, 4, 1, 1});
    EXPECT_EQ(f.breakpoints(), (std::vector<Rational>{0, 2}));
    EXPECT_EQ(f.values(), (std::vector<sd::StepValue>{4, 1}));
    EXPECT_EQ(f.at(Rational(19, 10)), 4u);
    EXPECT_EQ(f.at(2), 1u);
    EXPECT_THROW(StepFunction({1, 2}, {1, 0}), sd::InputError);
    EXPECT_THROW(StepFunction({0, 2}, {1, 3}), sd::InputError);
    EXPECT_THROW(StepFunction({0, 2, 1}, {3, 2, 1}), sd::InputError);
}

TEST(StepFunction, Sum) {
    EXPECT_EQ(sd::sum({kM1, kM2}), StepFunction({0, 1, 2}, {7, 3, 0}));
    EXPECT_EQ(sd::sum({}), StepFunction::constant(0));
}

TEST(StepFunction, LpDistanceIsExact) {
    EXPECT_EQ(sd::lp_distance_pow(sd::sum({kM1, kM2}), kSum, 1), Rational(1, 2));
    EXPECT_EQ(sd::lp_distance_pow(kM1, kM1, 3), Rational(0));
    EXPECT_FALSE(sd::lp_distance_pow(StepFunction::constant(1), StepFunction::constant(0), 1));
    EXPECT_TRUE(std::isinf(sd::lp_distance(StepFunction::constant(1), StepFunction::constant(0), 2.5)));
    const StepFunction a({0, 1}, {3, 0});
    EXPECT_NEAR(sd::lp_distance(a, StepFunction::constant(0), 2.5), 3.0, 1e-12);
}

TEST(StepFunction, InfiniteValues) {
    const StepFunction a({0, 1}, {sd::kInfiniteValue, 0});
    EXPECT_EQ(a.at(0), sd::kInfiniteValue);
    EXPECT_FALSE(sd::lp_distance_pow(a, StepFunction::constant(0), 1));
    EXPECT_EQ(sd::lp_distance_pow(a, a, 1), Rational(0));
}

TEST(StepFunction, Locus) {
    const auto loc = sd::locus_nonadditivity({kM1, kM2}, kSum);
    ASSERT_EQ(loc.size(), 1u);
    EXPECT_EQ(loc[0].lo, Rational(3, 2));
    EXPECT_EQ(loc[0].hi, std::optional<Rational>(Rational(2)));
    EXPECT_TRUE(sd::locus_nonadditivity({kM1}, kM1).empty());
    EXPECT_TRUE(sd::locus_nonadditivity({kM1, kM2}, sd::sum({kM1, kM2})).empty());
    EXPECT_EQ(sd::err_vp({kM1, kM2}, sd::sum({kM1, kM2}), 2.0), 0.0);
}

TEST(StepFunction, LocusMergesAdjacentIntervals) {
    const StepFunction part({0, 4}, {4, 0});
    const StepFunction total({0, 1, 2, 3}, {4, 3, 2, 0});
    const auto loc = sd::locus_nonadditivity({part}, total);
    ASSERT_EQ(loc.size(), 1u);
    EXPECT_EQ(loc[0].lo, Rational(1));
    EXPECT_EQ(loc[0].hi, std::optional<Rational>(Rational(4)));
}

TEST(StepFunction, ErrRectangleFigure) {
    const StepFunction parts({0, Rational(43, 10), Rational(9, 2)}, {4, 1, 0});
    const StepFunction total({0, 3, Rational(18, 5), Rational(9, 2)}, {4, 2, 1, 0});
    for (double p : {1.0, 1.5, 2.0, 3.0, 7.0}) {
        const double want = std::pow(0.6 * std::pow(2.0, p) + 0.7 * std::pow(3.0, p), 1.0 / p);
        EXPECT_NEAR(sd::err_vp({parts}, total, p), want, 1e-9) << p;
    }
    EXPECT_THROW(sd::err_vp({total}, parts, 1.0), sd::InvariantError);
}

TEST(StepFunction, InterleavingDistance) {
    const StepFunction a({0, 1, 2}, {5, 2, 0});
    EXPECT_EQ(sd::interleaving_distance(a, a), std::optional<Rational>(Rational(0)));
    const StepFunction b({0, Rational(3, 2), 2}, {5, 2, 0});
    EXPECT_EQ(sd::interleaving_distance(a, b), std::optional<Rational>(Rational(1, 2)));
    EXPECT_FALSE(sd::interleaving_distance(StepFunction::constant(1), StepFunction::constant(0)));
}

TEST(Stabilize, FiniteMetricSpace) {
    // Three points on a line at 0, 1, 3.
    const std::vector<std::vector<sd::Distance>> d = {
        {Rational(0), Rational(1), Rational(3)}, {Rational(1), Rational(0), Rational(2)}, {Rational(3), Rational(2), Rational(0)}};
    const auto f = sd::stabilize(d, {5, 3, 1}, 0);
    EXPECT_EQ(f, StepFunction({0, 1, 3}, {5, 3, 1}));
    const auto g = sd::stabilize(d, {5, 3, 1}, 1);
    EXPECT_EQ(g, StepFunction({0, 2}, {3, 1}));
    EXPECT_LE(*sd::interleaving_distance(f, g), Rational(1));
}

TEST(Stabilize, UnreachablePointsAreIgnored) {
    const std::vector<std::vector<sd::Distance>> d = {{Rational(0), std::nullopt}, {std::nullopt, Rational(0)}};
    EXPECT_EQ(sd::stabilize(d, {4, 0}, 0), StepFunction::constant(4));
}
