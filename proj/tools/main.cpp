#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftdim/contours.hpp"
#include "shiftdim/errors.hpp"
#include "shiftdim/grid_oracle.hpp"
#include "shiftdim/json_io.hpp"
#include "shiftdim/shift_dimension.hpp"
#include "shiftdim/step_function.hpp"

#ifndef SHIFTDIM_DEFAULT_FIXTURE_DIR
#define SHIFTDIM_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace sd = shiftdim;
using sd::json;

namespace {

enum class Format { Json, Csv, Svg };

struct Options {
    std::string format = "json";
    std::vector<std::string> files;
    std::string v;
    std::string alpha;
    std::string order = "above";
    std::string method = "fast";
    std::string out;
    std::string x;
    std::string curves;
    std::string fixtures;
    double eps = 0.0;
    double tau_max = 0.0;
    double lp = 1.0;
    std::uint32_t field = 2;
    std::size_t cap = 0;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    double tol = 1e-6;
    double xmax = 10.0;
    double emax = 5.0;
};

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "svg") return Format::Svg;
    throw sd::InputError("unknown format '" + s + "' (expected json, csv or svg)");
}

void require_json(Format f, const char* cmd) {
    if (f != Format::Json) throw sd::InputError(std::string(cmd) + " only supports --format json");
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

sd::Degree parse_degree(const std::string& s, const char* what) {
    if (s.empty()) throw sd::InputError(std::string("missing ") + what);
    return sd::Degree::parse(s);
}

sd::RealPoint parse_real_point(const std::string& s) {
    sd::RealPoint p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            p.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw sd::InputError("'" + s + "' is not a comma-separated list of reals");
        }
    }
    if (p.empty()) throw sd::InputError("empty point");
    return p;
}

sd::AnyModule load_module(const std::string& path) { return sd::module_from_json(sd::read_json_file(path)); }

sd::GridModule as_grid(const sd::AnyModule& m, std::uint32_t p) {
    if (const auto* g = std::get_if<sd::GridModule>(&m)) return *g;
    if (const auto* i = std::get_if<sd::IntervalModule>(&m)) {
        if (i->dim() != 2) throw sd::RefusedError("the grid oracle needs a bivariate module");
        return sd::grid_from_intervals(*i, p);
    }
    const auto& ds = std::get<sd::DirectSumModule>(m);
    if (ds.dim() != 2) throw sd::RefusedError("the grid oracle needs a bivariate module");
    return sd::grid_from_intervals(ds, p);
}

sd::OracleOptions oracle_options(const Options& o) {
    sd::OracleOptions opts;
    if (o.cap > 0) opts.cap = o.cap;
    return opts;
}

sd::StepFunction curve_of(const sd::AnyModule& m, const sd::Degree& v, const Options& o) {
    if (const auto* i = std::get_if<sd::IntervalModule>(&m)) return sd::stable_rank_curve(*i, v);
    return sd::oracle_curve(as_grid(m, o.field), v, oracle_options(o));
}

void emit_curve(const sd::StepFunction& f, Format fmt, const Options& o, const std::string& title) {
    switch (fmt) {
        case Format::Json: emit(sd::to_json(f)); break;
        case Format::Csv: std::cout << sd::to_csv(f); break;
        case Format::Svg: std::cout << sd::to_svg(f, o.tau_max, title); break;
    }
}

int cmd_shiftdim(const Options& o, Format fmt) {
    require_json(fmt, "shiftdim");
    const auto m = load_module(o.files.at(0));
    const auto v = parse_degree(o.v, "--v");
    const auto* iv = std::get_if<sd::IntervalModule>(&m);
    if (iv == nullptr) throw sd::RefusedError("shiftdim handles interval modules; use the oracle subcommand");
    if (o.method == "subset") {
        emit(sd::to_json(sd::subset_oracle(*iv, v)));
        return 0;
    }
    if (o.method != "fast") throw sd::InputError("--method must be fast or subset");
    if (o.order != "above" && o.order != "below") throw sd::InputError("--order must be above or below");
    const auto order = o.order == "above" ? sd::ClusterOrder::FromAbove : sd::ClusterOrder::FromBelow;
    emit(sd::to_json(sd::shift_dimension_2d(*iv, v, order)));
    return 0;
}

int cmd_curve(const Options& o, Format fmt) {
    const auto m = load_module(o.files.at(0));
    const auto v = parse_degree(o.v, "--v");
    emit_curve(curve_of(m, v, o), fmt, o, "dim_{tau v} for v = " + v.to_string());
    return 0;
}

int cmd_oracle(const Options& o, Format fmt) {
    require_json(fmt, "oracle");
    const auto g = as_grid(load_module(o.files.at(0)), o.field);
    const auto v = parse_degree(o.v, "--v");
    const auto r = sd::shift_dimension_bruteforce(g, v, oracle_options(o));
    if (!r.dimension) {
        throw sd::RefusedError("no v-basis with at most " + std::to_string(o.cap) + " elements; raise --cap");
    }
    emit(sd::to_json(r, g));
    return 0;
}

int cmd_beta0(const Options& o, Format fmt) {
    require_json(fmt, "beta0");
    const auto m = load_module(o.files.at(0));
    std::size_t b = 0;
    if (const auto* g = std::get_if<sd::GridModule>(&m)) {
        b = sd::beta0_grid(*g);
    } else if (const auto* i = std::get_if<sd::IntervalModule>(&m)) {
        b = sd::beta0(*i);
    } else {
        b = sd::beta0(std::get<sd::DirectSumModule>(m));
    }
    emit(json{{"beta0", b}});
    return 0;
}

int cmd_truncate(const Options& o, Format fmt) {
    require_json(fmt, "truncate");
    const auto m = load_module(o.files.at(0));
    const auto* iv = std::get_if<sd::IntervalModule>(&m);
    if (iv == nullptr) throw sd::InputError("truncate expects an interval module");
    const json out = sd::to_json(sd::truncate(*iv, parse_degree(o.alpha, "--alpha")));
    if (o.out.empty()) {
        emit(out);
    } else {
        std::ofstream f(o.out);
        if (!f) throw sd::InputError("cannot write '" + o.out + "'");
        f << out.dump(1) << "\n";
    }
    return 0;
}

json interval_list(const std::vector<sd::HalfOpenInterval>& ivs) {
    json a = json::array();
    for (const auto& iv : ivs) a.push_back(sd::to_json(iv));
    return a;
}

int cmd_locus(const Options& o, Format fmt) {
    require_json(fmt, "locus");
    std::vector<sd::StepFunction> parts;
    sd::StepFunction total;
    if (!o.curves.empty()) {
        const json j = sd::read_json_file(o.curves);
        for (const auto& s : j.at("summands")) parts.push_back(sd::step_function_from_json(s));
        total = sd::step_function_from_json(j.at("sum"));
    } else {
        if (o.files.size() < 2) throw sd::InputError("locus needs at least two module files or --curves");
        const auto v = parse_degree(o.v, "--v");
        std::optional<sd::GridModule> sum;
        for (const auto& path : o.files) {
            const auto m = load_module(path);
            parts.push_back(curve_of(m, v, o));
            auto g = as_grid(m, o.field);
            sum = sum ? sd::direct_sum(*sum, g) : g;
        }
        total = sd::oracle_curve(*sum, v, oracle_options(o));
    }
    json summands = json::array();
    for (const auto& f : parts) summands.push_back(sd::to_json(f));
    emit(json{{"summands", summands},
              {"sum", sd::to_json(total)},
              {"loc", interval_list(sd::locus_nonadditivity(parts, total))},
              {"p", o.lp},
              {"err", sd::err_vp(parts, total, o.lp)}});
    return 0;
}

int cmd_contour(const Options& o, Format fmt) {
    require_json(fmt, "contour");
    const auto c = sd::contour_from_json(sd::read_json_file(o.files.at(0)));
    const auto x = o.x == "inf" ? sd::ExtPoint{} : sd::ExtPoint{parse_real_point(o.x)};
    if (x && x->size() != c->dim()) throw sd::InputError("--x has the wrong dimension for this contour");
    emit(sd::to_json(c->eval(x, o.eps)));
    return 0;
}

int cmd_contour_check(const Options& o, Format fmt) {
    require_json(fmt, "contour-check");
    const auto c = sd::contour_from_json(sd::read_json_file(o.files.at(0)));
    const auto samples = sd::random_axiom_samples(c->dim(), o.samples, o.seed, o.xmax, o.emax);
    const auto rep = sd::check_contour_axioms(*c, samples, o.tol);
    json out = {{"family", c->family()},
                {"passed", rep.passed},
                {"samples", rep.samples},
                {"failures", rep.failures},
                {"worst", json::array({rep.worst[0], rep.worst[1], rep.worst[2]})}};
    if (!rep.passed) out["first_failure"] = rep.first_failure;
    emit(out);
    return rep.passed ? 0 : 3;
}

struct Check {
    std::string name;
    std::string expected;
    std::function<std::string(const std::string& dir)> run;
};

std::string curve_text(const sd::StepFunction& f) { return f.to_string(); }

std::vector<Check> selftest_checks() {
    using sd::Degree;
    using sd::Rational;
    const auto interval = [](const std::string& dir, const char* file) {
        return std::get<sd::IntervalModule>(load_module(dir + "/" + file));
    };
    const auto grid = [](const std::string& dir, const char* file) {
        return as_grid(load_module(dir + "/" + file), 2);
    };
    const auto dims = [](const sd::IntervalModule& m, std::size_t r, int n) {
        std::string s;
        for (int k = 0; k <= n; ++k) {
            std::vector<Rational> c(r, Rational(k));
            const Degree v(c);
            const auto d = r == 2 ? sd::shift_dimension_2d(m, v).dimension : sd::subset_oracle(m, v).dimension;
            s += (k ? "," : "") + std::to_string(d);
        }
        return s;
    };
    std::vector<Check> cs;
    cs.push_back({"support (1,1) in <x1>/<x1x2^2>", "true", [](const std::string&) {
                      return std::string(sd::support_contains(sd::IntervalModule(2, {{1, 0}}, {{1, 2}}), {1, 1}) ? "true"
                                                                                                               : "false");
                  }});
    cs.push_back({"shift (3,1) by (2,2) nonzero", "true", [&](const std::string& d) {
                      return std::string(sd::shift_is_nonzero(interval(d, "monomials.json"), {3, 1}, {2, 2}) ? "true"
                                                                                                            : "false");
                  }});
    cs.push_back({"beta0 intervalmod", "5",
                  [&](const std::string& d) { return std::to_string(sd::beta0(interval(d, "intervalmod.json"))); }});
    cs.push_back({"meet (3,1),(1,3)", "(1,1)",
                  [](const std::string&) { return sd::meet(Degree{3, 1}, Degree{1, 3}).to_string(); }});
    cs.push_back({"dim_(4,4) intervalmod", "2", [&](const std::string& d) {
                      return std::to_string(sd::shift_dimension_2d(interval(d, "intervalmod.json"), {4, 4}).dimension);
                  }});
    cs.push_back({"dim_(4,4) intervalmod from below", "2", [&](const std::string& d) {
                      return std::to_string(
                          sd::shift_dimension_2d(interval(d, "intervalmod.json"), {4, 4}, sd::ClusterOrder::FromBelow)
                              .dimension);
                  }});
    cs.push_back({"dim_n monomials n=0..4", "2,2,1,0,0",
                  [&](const std::string& d) { return dims(interval(d, "monomials.json"), 2, 4); }});
    cs.push_back({"dim_n ideal n=0..3", "3,3,1,1",
                  [&](const std::string& d) { return dims(interval(d, "ideal.json"), 2, 3); }});
    cs.push_back({"dim_n ideal squared n=0..3", "5,5,1,1",
                  [&](const std::string& d) { return dims(interval(d, "ideal_squared.json"), 2, 3); }});
    cs.push_back({"dim_n 3d ideal n=0..4", "3,3,1,1,1",
                  [&](const std::string& d) { return dims(interval(d, "ideal_3d.json"), 3, 4); }});
    cs.push_back({"curve M2 v=(2,1)", "2 on [0,1), 1 on [1,2), 0 on [2,inf)", [&](const std::string& d) {
                      return curve_text(sd::stable_rank_curve(interval(d, "M2.json"), {2, 1}));
                  }});
    cs.push_back({"beta0 quiver", "5",
                  [&](const std::string& d) { return std::to_string(sd::beta0_grid(grid(d, "indecomposable_grid.json"))); }});
    cs.push_back({"dim_(2,1) quiver", "2", [&](const std::string& d) {
                      const auto r = sd::shift_dimension_bruteforce(grid(d, "indecomposable_grid.json"), {2, 1});
                      return r.dimension ? std::to_string(*r.dimension) : std::string("cap");
                  }});
    cs.push_back({"(0,4),(6,1) is a (2,1)-basis of quiver", "true", [&](const std::string& d) {
                      const auto g = grid(d, "indecomposable_grid.json");
                      const std::vector<sd::HomogeneousElement> s = {{{0, 4}, {1}}, {{6, 1}, {1}}};
                      return std::string(sd::is_v_annihilating(g, s, {2, 1}) ? "true" : "false");
                  }});
    cs.push_back({"curve quiver v=(2,1)", "5 on [0,1), 2 on [1,2), 0 on [2,inf)", [&](const std::string& d) {
                      return curve_text(sd::oracle_curve(grid(d, "indecomposable_grid.json"), {2, 1}));
                  }});
    cs.push_back({"curve quiver+M2 v=(2,1)", "7 on [0,1), 3 on [1,3/2), 2 on [3/2,2), 0 on [2,inf)", [&](const std::string& d) {
                      const auto g = sd::direct_sum(grid(d, "indecomposable_grid.json"), grid(d, "M2.json"));
                      return curve_text(sd::oracle_curve(g, {2, 1}));
                  }});
    cs.push_back({"counterexampleadd (1,1) at (1,1) v-annihilates", "true", [&](const std::string& d) {
                      const auto g = grid(d, "counterexampleadd.json");
                      const auto xs = g.xs();
                      const auto ys = g.ys();
                      const std::size_t i = std::find(xs.begin(), xs.end(), Rational(1)) - xs.begin();
                      const std::size_t j = std::find(ys.begin(), ys.end(), Rational(1)) - ys.begin();
                      const std::vector<sd::HomogeneousElement> s = {{{i, j}, {1, 1}}};
                      return std::string(sd::is_v_annihilating(g, s, {1, 1}) ? "true" : "false");
                  }});
    cs.push_back({"dim_(1,1) counterexampleadd", "1", [&](const std::string& d) {
                      return std::to_string(
                          sd::shift_dimension_bruteforce(grid(d, "counterexampleadd.json"), {1, 1}).dimension.value_or(0));
                  }});
    cs.push_back({"dim_(3,3) three summands", "1", [&](const std::string& d) {
                      return std::to_string(
                          sd::shift_dimension_bruteforce(grid(d, "three_summands.json"), {3, 3}).dimension.value_or(0));
                  }});
    cs.push_back({"standard contour (0,8) eps 1 v=(4,4)", "(4,12)", [](const std::string&) {
                      const auto r = sd::StandardContour({4, 4}).eval(sd::RealPoint{0, 8}, 1.0);
                      std::ostringstream os;
                      os << "(" << r.value->at(0) << "," << r.value->at(1) << ")";
                      return os.str();
                  }});
    cs.push_back({"rectangle distance contour breaks axiom (ii)", "fails", [](const std::string&) {
                      const sd::DistanceTypeContour c({1, 1}, sd::constant_density(2), {},
                                                      sd::DistanceTypeContour::Region::Rectangle);
                      const auto rep = sd::check_contour_axioms(c, sd::random_axiom_samples(2, 200, 7, 5, 3), 1e-6);
                      return std::string(rep.worst[1] > 1e-6 ? "fails" : "passes");
                  }});
    const auto revisited = [&](const std::string& d) {
        const auto g1 = grid(d, "indecomposable_grid.json");
        const auto m2 = interval(d, "M2.json");
        std::vector<sd::StepFunction> parts = {sd::oracle_curve(g1, {2, 1}), sd::stable_rank_curve(m2, {2, 1})};
        const auto total = sd::oracle_curve(sd::direct_sum(g1, sd::grid_from_intervals(m2)), {2, 1});
        return std::make_pair(parts, total);
    };
    cs.push_back({"Loc quiver+M2", "[3/2,2)", [&](const std::string& d) {
                      const auto [parts, total] = revisited(d);
                      std::string s;
                      for (const auto& iv : sd::locus_nonadditivity(parts, total)) {
                          s += "[" + iv.lo.to_string() + "," + (iv.hi ? iv.hi->to_string() : "inf") + ")";
                      }
                      return s;
                  }});
    cs.push_back({"err_1 quiver+M2", "1/2", [&](const std::string& d) {
                      const auto [parts, total] = revisited(d);
                      const auto e = sd::lp_distance_pow(sd::sum(parts), total, 1);
                      return e ? e->to_string() : std::string("inf");
                  }});
    const auto rect = [](const std::string& d) {
        const json j = sd::read_json_file(d + "/rectangle_curves.json");
        std::vector<sd::StepFunction> parts;
        for (const auto& s : j.at("summands")) parts.push_back(sd::step_function_from_json(s));
        return std::make_pair(parts, sd::step_function_from_json(j.at("sum")));
    };
    cs.push_back({"Loc rectangle figure", "[3,43/10)", [&](const std::string& d) {
                      const auto [parts, total] = rect(d);
                      std::string s;
                      for (const auto& iv : sd::locus_nonadditivity(parts, total)) {
                          s += "[" + iv.lo.to_string() + "," + (iv.hi ? iv.hi->to_string() : "inf") + ")";
                      }
                      return s;
                  }});
    for (int p : {1, 2, 3}) {
        std::ostringstream want;
        want << std::setprecision(12) << std::pow(0.6 * std::pow(2.0, p) + 0.7 * std::pow(3.0, p), 1.0 / p);
        cs.push_back({"err_" + std::to_string(p) + " rectangle figure", want.str(), [&, p](const std::string& d) {
                          const auto [parts, total] = rect(d);
                          std::ostringstream os;
                          os << std::setprecision(12) << sd::err_vp(parts, total, p);
                          return os.str();
                      }});
    }
    return cs;
}

int cmd_selftest(const Options& o) {
    std::string dir = o.fixtures;
    if (dir.empty()) {
        const char* env = std::getenv("SHIFTDIM_FIXTURES");
        dir = env != nullptr ? env : SHIFTDIM_DEFAULT_FIXTURE_DIR;
    }
    const auto checks = selftest_checks();
    std::size_t failed = 0;
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    for (const auto& c : checks) {
        std::string got;
        try {
            got = c.run(dir);
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what();
        }
        const bool ok = got == c.expected;
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name
                  << "  expected " << c.expected;
        if (!ok) std::cout << "  got " << got;
        std::cout << "\n";
    }
    std::cout << checks.size() - failed << "/" << checks.size() << " passed\n";
    return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shift-dimension and stable-rank curves of multiparameter persistence modules", "shiftdim"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format: json, csv or svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));

    auto add_v = [&](CLI::App* s, bool required = true) {
        auto* opt = s->add_option("--v", o.v, "Shift direction as comma-separated rationals, e.g. 3/2,1");
        if (required) opt->required();
    };
    auto add_oracle = [&](CLI::App* s) {
        s->add_option("--field", o.field, "Prime for interval modules discretized onto a grid")->capture_default_str();
        s->add_option("--cap", o.cap, "Largest basis size tried by the oracle (0 means beta0)")->capture_default_str();
    };

    auto* s_dim = app.add_subcommand("shiftdim", "dim_v of a bivariate interval module (linear time)");
    s_dim->add_option("module", o.files, "Module JSON")->required()->expected(1)->check(CLI::ExistingFile);
    add_v(s_dim);
    s_dim->add_option("--order", o.order, "Clustering order: above or below")->capture_default_str();
    s_dim->add_option("--method", o.method, "fast (clustering) or subset (exhaustive, any r)")->capture_default_str();

    auto* s_curve = app.add_subcommand("curve", "Step function tau -> dim_{tau v}");
    s_curve->add_option("module", o.files, "Module JSON")->required()->expected(1)->check(CLI::ExistingFile);
    add_v(s_curve);
    s_curve->add_option("--tau-max", o.tau_max, "Right end of the SVG plot");
    add_oracle(s_curve);

    auto* s_oracle = app.add_subcommand("oracle", "Exact dim_v of a grid module by exhaustive search");
    s_oracle->add_option("module", o.files, "Module JSON")->required()->expected(1)->check(CLI::ExistingFile);
    add_v(s_oracle);
    add_oracle(s_oracle);
    s_oracle->add_option("--p", o.field, "Alias of --field");

    auto* s_beta0 = app.add_subcommand("beta0", "Minimal number of generators");
    s_beta0->add_option("module", o.files, "Module JSON")->required()->expected(1)->check(CLI::ExistingFile);

    auto* s_trunc = app.add_subcommand("truncate", "Quotient of an interval module by everything >= alpha");
    s_trunc->add_option("module", o.files, "Module JSON")->required()->expected(1)->check(CLI::ExistingFile);
    s_trunc->add_option("--alpha", o.alpha, "Truncation degree")->required();
    s_trunc->add_option("--out", o.out, "Output file (stdout if omitted)");

    auto* s_locus = app.add_subcommand("locus", "Non-additivity locus and L^p error of a direct sum");
    s_locus->add_option("modules", o.files, "Summand module JSON files")->check(CLI::ExistingFile);
    add_v(s_locus, false);
    s_locus->add_option("--p", o.lp, "Exponent of the L^p error")->capture_default_str()->check(CLI::Range(1.0, 1e9));
    s_locus->add_option("--curves", o.curves, "Precomputed curves {summands:[...], sum:{...}}")
        ->check(CLI::ExistingFile);
    add_oracle(s_locus);

    auto* s_contour = app.add_subcommand("contour", "Evaluate a contour C(x, eps)");
    s_contour->add_option("spec", o.files, "Contour JSON")->required()->expected(1)->check(CLI::ExistingFile);
    s_contour->add_option("--x", o.x, "Point as comma-separated reals, or inf")->required();
    s_contour->add_option("--eps", o.eps, "Non-negative parameter")->required();

    auto* s_check = app.add_subcommand("contour-check", "Check the contour axioms on random samples");
    s_check->add_option("spec", o.files, "Contour JSON")->required()->expected(1)->check(CLI::ExistingFile);
    s_check->add_option("--samples", o.samples)->capture_default_str();
    s_check->add_option("--tol", o.tol)->capture_default_str();
    s_check->add_option("--seed", o.seed)->capture_default_str();
    s_check->add_option("--xmax", o.xmax, "Sample points from [0, xmax]^r")->capture_default_str();
    s_check->add_option("--emax", o.emax, "Sample eps and tau from [0, emax]")->capture_default_str();

    auto* s_self = app.add_subcommand("selftest", "Run the worked examples and print a pass/fail table");
    s_self->add_option("--fixtures", o.fixtures, "Fixture directory");

    // `shiftdim FILE --v ...` is shorthand for the shiftdim subcommand.
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && args[0].size() > 5 && args[0].ends_with(".json")) args.insert(args.begin(), "shiftdim");
    std::reverse(args.begin(), args.end());

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*s_self) return cmd_selftest(o);
        const Format fmt = parse_format(o.format);
        if (*s_dim) return cmd_shiftdim(o, fmt);
        if (*s_curve) return cmd_curve(o, fmt);
        if (*s_oracle) return cmd_oracle(o, fmt);
        if (*s_beta0) return cmd_beta0(o, fmt);
        if (*s_trunc) return cmd_truncate(o, fmt);
        if (*s_locus) return cmd_locus(o, fmt);
        if (*s_contour) return cmd_contour(o, fmt);
        if (*s_check) return cmd_contour_check(o, fmt);
    } catch (const sd::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const sd::RefusedError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
