#include <gtest/gtest.h>

#include <limits>
#include <stdexcept>

#include "shiftdim/degree.hpp"
#include "shiftdim/errors.hpp"
#include "shiftdim/interval_module.hpp"
#include "shiftdim/rational.hpp"
#include "support.hpp"

namespace sd = shiftdim;
using sd::Degree;
using sd::IntervalModule;
using sd::Rational;

TEST(Rational, NormalizesSignAndGcd) {
    const Rational q(6, -4);
    EXPECT_EQ(q.num(), -3);
    EXPECT_EQ(q.den(), 2);
    EXPECT_THROW(Rational(1, 0), sd::InputError);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(3, 4) * Rational(2, 3), Rational(1, 2));
    EXPECT_EQ(Rational(3, 4) / Rational(3, 8), Rational(2));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(4).ceil(), 4);
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
    EXPECT_EQ(Rational::parse("1.5"), Rational(3, 2));
    EXPECT_EQ(Rational::parse("-0.25"), Rational(-1, 4));
    EXPECT_EQ(Rational::parse("12"), Rational(12));
    EXPECT_EQ(Rational(43, 10).to_string(), "43/10");
    EXPECT_THROW(Rational::parse("x"), sd::InputError);
    EXPECT_THROW(Rational::parse("1/0"), sd::InputError);
    EXPECT_THROW(Rational::parse(""), sd::InputError);
}

TEST(Rational, OverflowIsReported) {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    EXPECT_THROW(big + Rational(1), std::overflow_error);
    EXPECT_THROW(big * Rational(2), std::overflow_error);
    EXPECT_NO_THROW(big * Rational(1, 2));
}

TEST(Degree, ParseAndOrder) {
    const Degree d = Degree::parse("3/2,1");
    EXPECT_EQ(d, (Degree{Rational(3, 2), 1}));
    EXPECT_TRUE((Degree{1, 1}).leq(Degree{1, 2}));
    EXPECT_FALSE((Degree{1, 3}).leq(Degree{2, 2}));
    EXPECT_THROW(Degree::parse("1,-1"), sd::InputError);
    EXPECT_THROW(Degree::parse("1,,2"), sd::InputError);
    EXPECT_EQ((Degree{1, 2}).scaled(Rational(3, 2)), (Degree{Rational(3, 2), 3}));
}

TEST(Degree, MeetAndJoin) {
    EXPECT_EQ(sd::meet(Degree{3, 1}, Degree{1, 3}), (Degree{1, 1}));
    EXPECT_EQ(sd::join(Degree{3, 1}, Degree{1, 3}), (Degree{3, 3}));
    const Degree d{2, 5};
    EXPECT_EQ(sd::meet(d, d), d);
    EXPECT_THROW(sd::meet(Degree{1, 2}, Degree{1, 2, 3}), sd::InputError);
}

TEST(Staircase, KeepsMinimalElementsSorted) {
    const sd::Staircase s(2, {{4, 6}, {0, 8}, {5, 7}, {4, 6}, {11, 0}, {8, 2}});
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[0], (Degree{0, 8}));
    EXPECT_EQ(s[1], (Degree{4, 6}));
    EXPECT_EQ(s[2], (Degree{8, 2}));
    EXPECT_EQ(s[3], (Degree{11, 0}));
    EXPECT_TRUE(s.upset_contains(Degree{5, 6}));
    EXPECT_FALSE(s.upset_contains(Degree{3, 7}));
}

TEST(IntervalModule, SupportContains) {
    const IntervalModule m(2, {{1, 0}}, {{1, 2}});
    EXPECT_TRUE(sd::support_contains(m, {1, 1}));
    EXPECT_FALSE(sd::support_contains(m, {1, 2}));
    EXPECT_FALSE(sd::support_contains(m, {0, 5}));
    EXPECT_THROW(sd::support_contains(m, {1, 1, 1}), sd::InputError);
}

TEST(IntervalModule, ShiftIsNonzero) {
    const IntervalModule m(2, {{3, 1}, {1, 3}}, {{4, 4}});
    // (3,1) + (2,2) = (5,3) is not above (4,4).
    EXPECT_TRUE(sd::shift_is_nonzero(m, {3, 1}, {2, 2}));
    EXPECT_FALSE(sd::shift_is_nonzero(m, {3, 1}, {3, 3}));
    EXPECT_THROW(sd::shift_is_nonzero(m, {2, 2}, {1, 1}), sd::InputError);
    const auto free = IntervalModule::free_module({2, 7});
    EXPECT_TRUE(sd::shift_is_nonzero(free, {2, 7}, {100, 3}));
}

TEST(IntervalModule, RejectsRelationOutsideUpset) {
    EXPECT_THROW(IntervalModule(2, {{2, 2}}, {{1, 5}}), sd::InputError);
    EXPECT_THROW(IntervalModule(2, {{2, 2}}, {{1, 5, 3}}), sd::InputError);
}

TEST(IntervalModule, DropsGeneratorKilledByRelation) {
    const IntervalModule m(2, {{0, 3}, {3, 0}}, {{3, 0}});
    EXPECT_EQ(sd::beta0(m), 1u);
    EXPECT_TRUE(sd::support_contains(m, {1, 5}));
    EXPECT_FALSE(sd::support_contains(m, {5, 5}));
    EXPECT_FALSE(sd::support_contains(m, {4, 1}));
}

TEST(IntervalModule, Truncate) {
    const auto t1 = sd::truncate(IntervalModule::free_module({0, 0}), {2, 2});
    EXPECT_EQ(t1.relations().points(), (std::vector<Degree>{{2, 2}}));
    const auto t2 = sd::truncate(IntervalModule(2, {{3, 1}, {1, 3}}, {{4, 4}}), {3, 3});
    EXPECT_EQ(t2.relations().points(), (std::vector<Degree>{{3, 3}}));
    const auto t3 = sd::truncate(IntervalModule(2, {{1, 0}}, {{1, 2}}), {5, 5});
    EXPECT_EQ(t3.relations().points(), (std::vector<Degree>{{1, 2}}));
    EXPECT_EQ(t3.generators().points(), (std::vector<Degree>{{1, 0}}));
}

TEST(IntervalModule, Beta0) {
    const IntervalModule m(2, {{0, 8}, {4, 6}, {6, 4}, {8, 2}, {11, 0}});
    EXPECT_EQ(sd::beta0(m), 5u);
    EXPECT_EQ(sd::beta0(IntervalModule::zero(2)), 0u);
    EXPECT_EQ(sd::beta0(sd::DirectSumModule(2, {m, IntervalModule::free_module({1, 1})})), 6u);
}

TEST(IntervalModule, TruncateSupportMatchesDefinition) {
    sd::testing::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = sd::testing::random_interval(rng, 2, 5, 3, 10);
        const Degree alpha = sd::testing::random_point(rng, 2, 14);
        const auto t = sd::truncate(m, alpha);
        for (int probe = 0; probe < 30; ++probe) {
            const Degree d = sd::testing::random_point(rng, 2, 16);
            EXPECT_EQ(sd::support_contains(t, d), sd::support_contains(m, d) && !alpha.leq(d));
        }
    }
}

TEST(IntervalModule, SupportIsOrderConvex) {
    sd::testing::Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const auto m = sd::testing::random_interval(rng, 2, 5, 3, 10);
        const Degree d = sd::testing::random_point(rng, 2, 12);
        const Degree e = d + sd::testing::random_point(rng, 2, 6);
        if (!sd::support_contains(m, d) || !sd::support_contains(m, e)) continue;
        const Degree f = sd::meet(e, d + sd::testing::random_point(rng, 2, 6));
        EXPECT_TRUE(sd::support_contains(m, f)) << d << " <= " << f << " <= " << e;
    }
}

TEST(IntervalModule, StaircasesAreAntichains) {
    sd::testing::Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = sd::testing::random_interval(rng, 3, 6, 4, 8);
        const auto t = sd::truncate(m, sd::testing::random_point(rng, 3, 10));
        for (const auto* s : {&m.generators(), &m.relations(), &t.relations()}) {
            for (std::size_t a = 0; a < s->size(); ++a) {
                for (std::size_t b = 0; b < s->size(); ++b) {
                    if (a != b) {
                        EXPECT_FALSE((*s)[a].leq((*s)[b]));
                    }
                }
            }
        }
    }
}
