#include <gtest/gtest.h>

#include "shiftdim/errors.hpp"
#include "shiftdim/json_io.hpp"
#include "support.hpp"

namespace sd = shiftdim;
using sd::json;
using sd::Rational;

TEST(JsonIo, Rationals) {
    EXPECT_EQ(sd::rational_from_json(json(3)), Rational(3));
    EXPECT_EQ(sd::rational_from_json(json::array({3, 2})), Rational(3, 2));
    EXPECT_EQ(sd::rational_from_json(json("3/2")), Rational(3, 2));
    EXPECT_EQ(sd::rational_from_json(json(1.5)), Rational(3, 2));
    EXPECT_EQ(sd::to_json(Rational(3, 2)), json::array({3, 2}));
    EXPECT_EQ(sd::to_json(Rational(4)), json(4));
    EXPECT_THROW(sd::rational_from_json(json::object()), sd::InputError);
}

TEST(JsonIo, IntervalModuleRoundTrip) {
    sd::testing::Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = sd::testing::random_interval(rng, 2, 6, 4, 12);
        const json j = sd::to_json(m);
        EXPECT_EQ(sd::interval_from_json(json::parse(j.dump())), m);
    }
}

TEST(JsonIo, ModuleErrors) {
    EXPECT_THROW(sd::module_from_json(json::parse(R"({"type":"interval","r":2})")), sd::InputError);
    EXPECT_THROW(sd::module_from_json(json::parse(R"({"type":"blob"})")), sd::InputError);
    EXPECT_THROW(sd::module_from_json(json::parse(R"({"type":"interval","r":2,"generators":[[1,-1]]})")),
                 sd::InputError);
    // A 2-dimensional fiber next to a 1-dimensional one needs an explicit map.
    EXPECT_THROW(sd::module_from_json(json::parse(
                     R"({"type":"grid","xs":[0,1],"ys":[0],"dims":[[1],[2]]})")),
                 sd::InputError);
    EXPECT_THROW(sd::module_from_json(json::parse(
                     R"({"type":"grid","xs":[0,1],"ys":[0],"dims":[[1],[1]],"hmaps":{"5,0":[[1]]}})")),
                 sd::InputError);
}

TEST(JsonIo, GridDefaults) {
    const auto g = sd::grid_from_json(json::parse(R"({"type":"grid","p":3,"xs":[0,1],"ys":[0,[1,2]],
        "dims":[[1,1],[0,0]]})"));
    EXPECT_EQ(g.p(), 3u);
    EXPECT_EQ(g.ys()[1], Rational(1, 2));
    EXPECT_EQ(g.vmap({0, 0}), sd::FpMatrix::identity(1));
    EXPECT_EQ(g.hmap({0, 0}).rows, 0u);
}

TEST(JsonIo, StepFunctions) {
    const sd::StepFunction f({0, 1, Rational(3, 2)}, {sd::kInfiniteValue, 3, 0});
    const json j = sd::to_json(f);
    EXPECT_EQ(j.dump(), R"({"breakpoints":[0,1,[3,2]],"values":["inf",3,0]})");
    EXPECT_EQ(sd::step_function_from_json(j), f);
    EXPECT_EQ(sd::to_csv(f), "tau,value\n0,inf\n1,3\n3/2,0\n");
    const std::string svg = sd::to_svg(f, 3.0, "t");
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("<polyline"), std::string::npos);
}

TEST(JsonIo, ContourSpecs) {
    const auto c = sd::contour_from_json(json::parse(
        R"({"family":"truncated","alpha":[5,5],"inner":{"family":"standard","v":[1,2]}})"));
    EXPECT_EQ(c->family(), "truncated");
    EXPECT_EQ(c->dim(), 2u);
    EXPECT_THROW(sd::contour_from_json(json::parse(R"({"family":"nope"})")), sd::InputError);
    EXPECT_THROW(sd::contour_from_json(json::parse(R"({"family":"distance","v":[1,1],"density":{"kind":"x"}})")),
                 sd::InputError);
    const auto r = sd::to_json(c->eval(sd::RealPoint{4, 4}, 2.0));
    EXPECT_EQ(r.at("value"), "inf");
}
