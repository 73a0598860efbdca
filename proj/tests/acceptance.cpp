#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "shiftdim/contours.hpp"
#include "shiftdim/densities.hpp"
#include "shiftdim/json_io.hpp"

namespace sd = shiftdim;
namespace st = shiftdim::testing;
using sd::Degree;
using sd::Rational;
using sd::StepFunction;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = false;
    std::string detail;
};

const std::string kDir = SHIFTDIM_FIXTURE_DIR;

sd::AnyModule load(const std::string& file) { return sd::module_from_json(sd::read_json_file(kDir + "/" + file)); }

sd::IntervalModule interval(const std::string& file) { return std::get<sd::IntervalModule>(load(file)); }

sd::GridModule grid(const std::string& file) {
    const auto m = load(file);
    if (const auto* g = std::get_if<sd::GridModule>(&m)) return *g;
    if (const auto* i = std::get_if<sd::IntervalModule>(&m)) return sd::grid_from_intervals(*i);
    return sd::grid_from_intervals(std::get<sd::DirectSumModule>(m));
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class F>
double median_seconds(int reps, F&& f) {
    std::vector<double> t;
    for (int k = 0; k < reps; ++k) {
        const auto t0 = Clock::now();
        f();
        t.push_back(seconds_since(t0));
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

std::string loc_text(const std::vector<sd::HalfOpenInterval>& loc) {
    std::string s;
    for (const auto& iv : loc) s += "[" + iv.lo.to_string() + "," + (iv.hi ? iv.hi->to_string() : "inf") + ")";
    return s;
}

std::string join(const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
    return s;
}

Verdict golden_example() {
    const auto m = interval("intervalmod.json");
    std::size_t d = 0;
    const double t = median_seconds(101, [&] { d = sd::shift_dimension_2d(m, {4, 4}).dimension; });
    std::ostringstream os;
    os << "dim_(4,4) = " << d << ", median " << std::setprecision(3) << t * 1e6 << " us";
    return {d == 2 && t < 1e-3, os.str()};
}

Verdict monomial_sequences() {
    const auto seq = [](const sd::IntervalModule& m, std::size_t r, int n) {
        std::vector<std::size_t> out;
        for (int k = 0; k <= n; ++k) {
            const Degree v(std::vector<Rational>(r, Rational(k)));
            out.push_back(r == 2 ? sd::shift_dimension_2d(m, v).dimension : sd::subset_oracle(m, v).dimension);
        }
        return out;
    };
    struct Case {
        const char* name;
        const char* file;
        std::size_t r;
        std::vector<std::size_t> want;
    };
    const std::vector<Case> cases = {{"ideal", "ideal.json", 2, {3, 3, 1, 1}},
                                     {"ideal squared", "ideal_squared.json", 2, {5, 5, 1, 1}},
                                     {"monomials", "monomials.json", 2, {2, 2, 1, 0, 0}},
                                     {"3d ideal", "ideal_3d.json", 3, {3, 3, 1, 1, 1}}};
    Verdict v{true, ""};
    for (const auto& c : cases) {
        const auto m = interval(c.file);
        const auto got = seq(m, c.r, static_cast<int>(c.want.size()) - 1);
        if (got == c.want) {
            v.detail += std::string(v.detail.empty() ? "" : "; ") + c.name + " ok";
            continue;
        }
        v.pass = false;
        // Cross-check the disagreement with both independent oracles.
        bool oracles_agree = true;
        for (std::size_t k = 0; k < got.size(); ++k) {
            const Degree w(std::vector<Rational>(c.r, Rational(static_cast<std::int64_t>(k))));
            oracles_agree = oracles_agree && st::naive_interval_dim(m, w) == got[k];
            if (c.r == 2) oracles_agree = oracles_agree && st::oracle_dim(sd::grid_from_intervals(m), w) == got[k];
        }
        v.detail += std::string(v.detail.empty() ? "" : "; ") + c.name + " expected " + join(c.want) + " got " +
                    join(got) + (oracles_agree ? " (exhaustive and grid oracles agree with got)" : " (oracles disagree)");
    }
    return v;
}

Verdict quiver() {
    const auto t0 = Clock::now();
    const auto g1 = grid("indecomposable_grid.json");
    const auto m2 = interval("M2.json");
    const Degree v{2, 1};
    const auto b0 = sd::beta0_grid(g1);
    const auto d = sd::shift_dimension_bruteforce(g1, v).dimension;
    const auto c1 = sd::oracle_curve(g1, v);
    const auto c2 = sd::stable_rank_curve(m2, v);
    const auto c12 = sd::oracle_curve(sd::direct_sum(g1, sd::grid_from_intervals(m2)), v);
    const double secs = seconds_since(t0);
    const bool ok = b0 == 5 && d == std::optional<std::size_t>(2) && c1 == StepFunction({0, 1, 2}, {5, 2, 0}) &&
                    c2 == StepFunction({0, 1, 2}, {2, 1, 0}) &&
                    c12 == StepFunction({0, 1, Rational(3, 2), 2}, {7, 3, 2, 0}) && secs <= 60.0;
    std::ostringstream os;
    os << "beta0 " << b0 << ", dim_(2,1) " << (d ? std::to_string(*d) : "cap") << ", M1 " << c1.to_string() << "; M2 "
       << c2.to_string() << "; M1+M2 " << c12.to_string() << "; " << std::setprecision(3) << secs << " s";
    return {ok, os.str()};
}

Verdict diagnostics() {
    const auto g1 = grid("indecomposable_grid.json");
    const auto m2 = interval("M2.json");
    const std::vector<StepFunction> parts = {sd::oracle_curve(g1, {2, 1}), sd::stable_rank_curve(m2, {2, 1})};
    const auto total = sd::oracle_curve(sd::direct_sum(g1, sd::grid_from_intervals(m2)), {2, 1});
    const auto loc1 = loc_text(sd::locus_nonadditivity(parts, total));
    const auto err1 = sd::lp_distance_pow(sd::sum(parts), total, 1);
    bool ok = loc1 == "[3/2,2)" && err1 == std::optional<Rational>(Rational(1, 2));

    const auto j = sd::read_json_file(kDir + "/rectangle_curves.json");
    std::vector<StepFunction> rparts;
    for (const auto& s : j.at("summands")) rparts.push_back(sd::step_function_from_json(s));
    const auto rtotal = sd::step_function_from_json(j.at("sum"));
    const auto loc2 = loc_text(sd::locus_nonadditivity(rparts, rtotal));
    ok = ok && loc2 == "[3,43/10)";
    double worst = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 5.0}) {
        const double want = std::pow(0.6 * std::pow(2.0, p) + 0.7 * std::pow(3.0, p), 1.0 / p);
        worst = std::max(worst, std::abs(sd::err_vp(rparts, rtotal, p) - want));
    }
    ok = ok && worst <= 1e-9;

    const auto ce = sd::shift_dimension_bruteforce(grid("counterexampleadd.json"), {1, 1}).dimension;
    const auto three = sd::shift_dimension_bruteforce(grid("three_summands.json"), {3, 3}).dimension;
    ok = ok && ce == std::optional<std::size_t>(1) && three == std::optional<std::size_t>(1);
    std::ostringstream os;
    os << "Loc " << loc1 << " err_1 " << (err1 ? err1->to_string() : "inf") << "; rectangle Loc " << loc2
       << " max err_p deviation " << std::setprecision(2) << worst << "; counterexample dim "
       << ce.value_or(0) << "; three summands dim " << three.value_or(0);
    return {ok, os.str()};
}

Verdict oracle_equivalence() {
    st::Rng rng(2024);
    int mismatches = 0;
    std::string first;
    for (int k = 0; k < 200; ++k) {
        const auto m = st::random_interval(rng, 2, 6, 4, 12);
        const Degree v = st::random_shift(rng, 2, 4, true);
        const auto a = sd::shift_dimension_2d(m, v, sd::ClusterOrder::FromAbove).dimension;
        const auto b = sd::shift_dimension_2d(m, v, sd::ClusterOrder::FromBelow).dimension;
        const auto c = sd::subset_oracle(m, v).dimension;
        const auto d = st::oracle_dim(sd::grid_from_intervals(m), v);
        if (a == b && b == c && c == d) continue;
        if (mismatches++ == 0) first = st::describe(m, v);
    }
    return {mismatches == 0, "200 modules, " + std::to_string(mismatches) + " mismatches" +
                                 (first.empty() ? "" : ", first: " + first)};
}

Verdict property_suites() {
    constexpr int kCases = 500;
    const std::vector<std::pair<const char*, std::function<st::PropertyRun()>>> suites = {
        {"subadditivity", [] { return st::subadditivity(601, kCases); }},
        {"drop-by-one", [] { return st::drop_by_one(602, kCases); }},
        {"split sequence", [] { return st::split_sequence(603, kCases); }},
        {"free additivity", [] { return st::free_additivity(604, kCases); }},
        {"monotone curves", [] { return st::monotone_curves(605, kCases); }},
        {"truncation", [] { return st::truncation(606, kCases); }},
    };
    Verdict v{true, ""};
    for (const auto& [name, run] : suites) {
        const auto r = run();
        const bool ok = r.cases >= kCases && r.failures == 0;
        v.pass = v.pass && ok;
        v.detail += std::string(v.detail.empty() ? "" : "; ") + name + " " + std::to_string(r.failures) + "/" +
                    std::to_string(r.cases) + " failed";
        if (!ok) v.detail += " (" + r.first_failure + ")";
    }
    return v;
}

Verdict contour_axioms() {
    const auto samples = sd::random_axiom_samples(2, 1000, 42, 10.0, 2.0);
    const std::vector<std::shared_ptr<const sd::Contour>> families = {
        std::make_shared<sd::StandardContour>(sd::RealPoint{1, 2}),
        std::make_shared<sd::TruncatedContour>(std::make_shared<sd::StandardContour>(sd::RealPoint{1, 1}),
                                               sd::RealPoint{8, 9}),
        std::make_shared<sd::CurveContour>(
            std::vector<sd::RealPoint>{{0, 0}, {1, 2}, {3, 3}, {6, 4}, {20, 8}, {100, 20}}, std::vector<std::size_t>{0}),
        std::make_shared<sd::DistanceTypeContour>(sd::RealPoint{1, 1}, sd::exp_decay_density({0.5, 0.25})),
        std::make_shared<sd::ComponentwiseShiftContour>(
            std::vector<sd::Density>{sd::constant_density(1), sd::gauss_density({2}, {1}, 1.0)},
            std::vector<sd::Superadditive>{sd::linear_shift(), sd::power_shift(1.0, 2.0)}),
        std::make_shared<sd::MultivariateShiftContour>(
            std::vector<sd::Density>{sd::constant_density(2), sd::constant_density(2)}, sd::RealPoint{1, 1}),
    };
    Verdict v{true, ""};
    for (const auto& c : families) {
        const auto rep = sd::check_contour_axioms(*c, samples, 1e-6);
        v.pass = v.pass && rep.passed && rep.samples == 1000;
        v.detail += c->family() + (rep.passed ? " ok; " : " FAILED (" + rep.first_failure + "); ");
    }
    const sd::DistanceTypeContour rect({1, 1}, sd::constant_density(2), {}, sd::DistanceTypeContour::Region::Rectangle);
    const auto rep = sd::check_contour_axioms(rect, samples, 1e-6);
    const bool breaks = rep.worst[1] > 1e-6;
    v.pass = v.pass && breaks;
    std::ostringstream os;
    os << std::setprecision(3) << rep.worst[1];
    v.detail += std::string("rectangle variant ") + (breaks ? "breaks" : "does not break") + " axiom (ii), worst " + os.str();
    return v;
}

Verdict stabilization() {
    st::Rng rng(808);
    int violations = 0;
    for (int space = 0; space < 100; ++space) {
        const auto n = static_cast<std::size_t>(st::uniform(rng, 1, 20));
        std::vector<Degree> pts;
        std::vector<sd::StepValue> f;
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back(st::random_point(rng, 2, 12));
            f.push_back(static_cast<sd::StepValue>(st::uniform(rng, 0, 9)));
        }
        std::vector<std::vector<sd::Distance>> d(n, std::vector<sd::Distance>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::max(sd::abs(pts[i][0] - pts[j][0]), sd::abs(pts[i][1] - pts[j][1]));
            }
        }
        std::vector<StepFunction> hat;
        for (std::size_t x = 0; x < n; ++x) hat.push_back(sd::stabilize(d, f, x));
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                const auto dist = sd::interleaving_distance(hat[x], hat[y]);
                if (!dist || *dist > *d[x][y]) ++violations;
            }
        }
    }
    double worst = 0.0;
    for (std::size_t levels : {10u, 20u, 40u}) {
        sd::MultivariateOptions o;
        o.refine_levels = levels;
        const sd::MultivariateShiftContour c({sd::constant_density(2), sd::constant_density(2)}, {1, 1}, o);
        for (double eps : {0.25, 0.5, 1.0, 2.0}) {
            const auto r = c.eval(sd::RealPoint{0, 0}, eps).value;
            if (!r) {
                worst = INFINITY;
                continue;
            }
            for (double x : *r) worst = std::max(worst, std::abs(x - eps * eps));
        }
    }
    std::ostringstream os;
    os << "100 spaces, " << violations << " Lipschitz violations; multivariate max deviation " << std::setprecision(2)
       << worst;
    return {violations == 0 && worst <= 1e-6, os.str()};
}

sd::IntervalModule random_staircase(st::Rng& rng, std::size_t n) {
    std::vector<Degree> gens;
    gens.reserve(n);
    std::int64_t a = 0;
    std::int64_t b = static_cast<std::int64_t>(4 * n);
    for (std::size_t k = 0; k < n; ++k) {
        gens.push_back({a, b});
        a += st::uniform(rng, 1, 3);
        b -= st::uniform(rng, 1, 3);
    }
    return sd::IntervalModule(2, std::move(gens));
}

Verdict performance() {
    st::Rng rng(909);
    std::vector<double> medians;
    for (std::size_t n : {1000u, 10000u, 100000u}) {
        const auto m = random_staircase(rng, n);
        medians.push_back(median_seconds(9, [&] { (void)sd::shift_dimension_2d(m, {5, 5}); }));
    }
    const double r1 = medians[1] / medians[0];
    const double r2 = medians[2] / medians[1];
    std::ostringstream os;
    os << std::setprecision(3) << "medians " << medians[0] * 1e3 << " / " << medians[1] * 1e3 << " / "
       << medians[2] * 1e3 << " ms for n = 1e3 / 1e4 / 1e5; ratios " << r1 / 10 << "x and " << r2 / 10
       << "x of linear growth";
    // Linear time grows tenfold per decade of n; 2.5x is the allowed excess over that.
    return {r1 <= 25.0 && r2 <= 25.0 && medians[2] < 1.0, os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Verdict()>>> criteria = {
        {1, golden_example}, {2, monomial_sequences}, {3, quiver},          {4, diagnostics},   {5, oracle_equivalence},
        {6, property_suites}, {7, contour_axioms},     {8, stabilization}, {9, performance},
    };
    int failed = 0;
    for (const auto& [n, run] : criteria) {
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        failed += v.pass ? 0 : 1;
        std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << std::endl;
    }
    std::cout << 9 - failed << "/9 criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
