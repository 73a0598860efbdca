#include "shiftdim/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "shiftdim/errors.hpp"

namespace shiftdim {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t as_size(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw InputError(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

double as_double(const json& j, const char* what) {
    if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
    return j.get<double>();
}

RealPoint real_point(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    RealPoint p;
    for (const auto& e : j) p.push_back(as_double(e, what));
    return p;
}

std::vector<Degree> degrees(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of degrees");
    std::vector<Degree> out;
    for (const auto& e : j) out.push_back(degree_from_json(e));
    return out;
}

std::vector<Rational> rationals(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

FpMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows) {
        throw InputError(where + ": expected " + std::to_string(rows) + " rows");
    }
    FpMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw InputError(where + ": expected " + std::to_string(cols) + " columns");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_number_integer()) throw InputError(where + ": entries must be integers");
            const long long v = j[r][c].get<long long>();
            m.at(r, c) = static_cast<std::uint32_t>(v);  // reduced mod p by the module
            if (v < 0) throw InputError(where + ": entries must be non-negative");
        }
    }
    return m;
}

json matrix_to_json(const FpMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    return rows;
}

json value_to_json(StepValue v) {
    if (v == kInfiniteValue) return "inf";
    return v;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
        return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
    }
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_float()) return Rational::parse(j.dump());
    throw InputError("expected a rational (integer, [num,den] or string), got " + j.dump());
}

json to_json(const Rational& q) {
    if (q.is_integer()) return q.num();
    return json::array({q.num(), q.den()});
}

Degree degree_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("degree must be a non-empty array");
    return Degree(rationals(j, "degree"));
}

json to_json(const Degree& d) {
    json out = json::array();
    for (const auto& q : d.coords()) out.push_back(to_json(q));
    return out;
}

IntervalModule interval_from_json(const json& j) {
    if (field(j, "type") != "interval") throw InputError("expected an interval module");
    const std::size_t r = as_size(field(j, "r"), "r");
    std::vector<Degree> rels;
    if (j.contains("relations")) rels = degrees(j.at("relations"), "relations");
    return IntervalModule(r, degrees(field(j, "generators"), "generators"), std::move(rels));
}

json to_json(const IntervalModule& m) {
    json gens = json::array();
    json rels = json::array();
    for (const auto& g : m.generators()) gens.push_back(to_json(g));
    for (const auto& r : m.relations()) rels.push_back(to_json(r));
    return {{"type", "interval"}, {"r", m.dim()}, {"generators", gens}, {"relations", rels}};
}

json to_json(const DirectSumModule& m) {
    json s = json::array();
    for (const auto& x : m.summands()) s.push_back(to_json(x));
    return {{"type", "direct_sum"}, {"summands", s}};
}

GridModule grid_from_json(const json& j) {
    if (field(j, "type") != "grid") throw InputError("expected a grid module");
    const std::uint32_t p = j.contains("p") ? static_cast<std::uint32_t>(as_size(j.at("p"), "p")) : 2u;
    auto xs = rationals(field(j, "xs"), "xs");
    auto ys = rationals(field(j, "ys"), "ys");
    const std::size_t nx = xs.size();
    const std::size_t ny = ys.size();
    const json& jd = field(j, "dims");
    if (!jd.is_array() || jd.size() != nx) throw InputError("dims must have one column per x coordinate");
    std::vector<std::vector<std::size_t>> dims(nx, std::vector<std::size_t>(ny));
    for (std::size_t i = 0; i < nx; ++i) {
        if (!jd[i].is_array() || jd[i].size() != ny) throw InputError("dims columns must have one entry per y");
        for (std::size_t k = 0; k < ny; ++k) dims[i][k] = as_size(jd[i][k], "fiber dimension");
    }
    const json empty = json::object();
    const json& jh = j.contains("hmaps") ? j.at("hmaps") : empty;
    const json& jv = j.contains("vmaps") ? j.at("vmaps") : empty;
    if (!jh.is_object() || !jv.is_object()) throw InputError("hmaps and vmaps must be objects keyed \"i,j\"");
    auto edge = [&](const json& maps, std::size_t i, std::size_t k, std::size_t from, std::size_t to,
                    const char* kind) {
        const std::string key = std::to_string(i) + "," + std::to_string(k);
        const std::string where = std::string(kind) + " " + key;
        if (maps.contains(key)) return matrix_from_json(maps.at(key), to, from, where);
        if (from == 0 || to == 0) return FpMatrix(to, from);
        if (from == to) return FpMatrix::identity(from);
        throw InputError(where + " is required between fibers of different dimension");
    };
    std::vector<std::vector<FpMatrix>> h(nx > 0 ? nx - 1 : 0, std::vector<FpMatrix>(ny));
    std::vector<std::vector<FpMatrix>> v(nx, std::vector<FpMatrix>(ny > 0 ? ny - 1 : 0));
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t k = 0; k < ny; ++k) {
            if (i + 1 < nx) h[i][k] = edge(jh, i, k, dims[i][k], dims[i + 1][k], "hmap");
            if (k + 1 < ny) v[i][k] = edge(jv, i, k, dims[i][k], dims[i][k + 1], "vmap");
        }
    }
    for (const auto* maps : {&jh, &jv}) {
        for (auto it = maps->begin(); it != maps->end(); ++it) {
            std::size_t a = 0;
            std::size_t b = 0;
            char comma = 0;
            std::istringstream is(it.key());
            if (!(is >> a >> comma >> b) || comma != ',' || a >= nx || b >= ny) {
                throw InputError("map key '" + it.key() + "' is not a grid index \"i,j\"");
            }
        }
    }
    return GridModule(p, std::move(xs), std::move(ys), std::move(dims), std::move(h), std::move(v));
}

json to_json(const GridModule& m) {
    json xs = json::array();
    json ys = json::array();
    for (const auto& x : m.xs()) xs.push_back(to_json(x));
    for (const auto& y : m.ys()) ys.push_back(to_json(y));
    json dims = json::array();
    json hm = json::object();
    json vm = json::object();
    for (std::size_t i = 0; i < m.nx(); ++i) {
        json col = json::array();
        for (std::size_t k = 0; k < m.ny(); ++k) {
            col.push_back(m.dims()[i][k]);
            const std::string key = std::to_string(i) + "," + std::to_string(k);
            if (i + 1 < m.nx() && m.hmaps()[i][k].rows * m.hmaps()[i][k].cols > 0) hm[key] = matrix_to_json(m.hmaps()[i][k]);
            if (k + 1 < m.ny() && m.vmaps()[i][k].rows * m.vmaps()[i][k].cols > 0) vm[key] = matrix_to_json(m.vmaps()[i][k]);
        }
        dims.push_back(col);
    }
    return {{"type", "grid"}, {"p", m.p()}, {"xs", xs}, {"ys", ys}, {"dims", dims}, {"hmaps", hm}, {"vmaps", vm}};
}

AnyModule module_from_json(const json& j) {
    const std::string type = field(j, "type").is_string() ? field(j, "type").get<std::string>() : "";
    if (type == "interval") return interval_from_json(j);
    if (type == "grid") return grid_from_json(j);
    if (type == "direct_sum") {
        const json& s = field(j, "summands");
        if (!s.is_array()) throw InputError("summands must be an array");
        std::vector<IntervalModule> parts;
        for (const auto& e : s) parts.push_back(interval_from_json(e));
        std::size_t r = parts.empty() ? (j.contains("r") ? as_size(j.at("r"), "r") : 2) : parts.front().dim();
        return DirectSumModule(r, std::move(parts));
    }
    throw InputError("unknown module type '" + type + "'");
}

json to_json(const AnyModule& m) {
    return std::visit([](const auto& x) { return to_json(x); }, m);
}

json to_json(const ShiftDimResult& r) {
    json basis = json::array();
    for (const auto& b : r.basis) basis.push_back(to_json(b));
    return {{"dimension", r.dimension}, {"basis", basis}, {"iterations", r.iterations}};
}

json to_json(const OracleResult& r, const GridModule& m) {
    json w = json::array();
    for (const auto& e : r.witness) {
        w.push_back({{"degree", json::array({to_json(m.xs()[e.at.i]), to_json(m.ys()[e.at.j])})},
                     {"vector", e.vector}});
    }
    json out = {{"witness", w}, {"nodes", r.nodes}};
    if (r.dimension) {
        out["dimension"] = *r.dimension;
    } else {
        out["dimension"] = nullptr;
    }
    return out;
}

StepFunction step_function_from_json(const json& j) {
    auto bps = rationals(field(j, "breakpoints"), "breakpoints");
    const json& jv = field(j, "values");
    if (!jv.is_array()) throw InputError("values must be an array");
    std::vector<StepValue> vals;
    for (const auto& e : jv) {
        if (e.is_string() && e.get<std::string>() == "inf") {
            vals.push_back(kInfiniteValue);
        } else {
            vals.push_back(as_size(e, "step value"));
        }
    }
    return StepFunction(std::move(bps), std::move(vals));
}

json to_json(const StepFunction& f) {
    json b = json::array();
    json v = json::array();
    for (const auto& t : f.breakpoints()) b.push_back(to_json(t));
    for (auto x : f.values()) v.push_back(value_to_json(x));
    return {{"breakpoints", b}, {"values", v}};
}

std::string to_csv(const StepFunction& f) {
    std::string out = "tau,value\n";
    for (std::size_t k = 0; k < f.breakpoints().size(); ++k) {
        const StepValue v = f.values()[k];
        out += f.breakpoints()[k].to_string() + "," + (v == kInfiniteValue ? "inf" : std::to_string(v)) + "\n";
    }
    return out;
}

std::string to_svg(const StepFunction& f, double tau_max, const std::string& title) {
    const auto& bps = f.breakpoints();
    const auto& vals = f.values();
    if (tau_max <= 0.0) tau_max = std::max(1.0, bps.back().to_double() * 1.25);
    StepValue vmax = 1;
    for (auto v : vals) {
        if (v != kInfiniteValue) vmax = std::max(vmax, v);
    }
    const double W = 480, H = 300, L = 50, R = 20, T = 30, B = 40;
    auto sx = [&](double t) { return L + (W - L - R) * t / tau_max; };
    auto sy = [&](StepValue v) {
        const double y = v == kInfiniteValue ? static_cast<double>(vmax) * 1.1 : static_cast<double>(v);
        return H - B - (H - T - B) * y / (static_cast<double>(vmax) * 1.1);
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
       << " " << H << "\">\n";
    if (!title.empty()) os << "  <title>" << title << "</title>\n";
    os << "  <line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
       << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < bps.size(); ++k) {
        const double t0 = std::min(bps[k].to_double(), tau_max);
        const double t1 = k + 1 < bps.size() ? std::min(bps[k + 1].to_double(), tau_max) : tau_max;
        os << fmt(sx(t0)) << "," << fmt(sy(vals[k])) << " " << fmt(sx(t1)) << "," << fmt(sy(vals[k])) << " ";
    }
    os << "\"/>\n";
    for (std::size_t k = 0; k < bps.size(); ++k) {
        os << "  <text x=\"" << fmt(sx(std::min(bps[k].to_double(), tau_max))) << "\" y=\"" << H - B + 16
           << "\" font-size=\"11\" text-anchor=\"middle\">" << bps[k].to_string() << "</text>\n";
    }
    os << "  <text x=\"" << L - 8 << "\" y=\"" << fmt(sy(vmax)) << "\" font-size=\"11\" text-anchor=\"end\">" << vmax
       << "</text>\n";
    os << "  <text x=\"" << L - 8 << "\" y=\"" << H - B << "\" font-size=\"11\" text-anchor=\"end\">0</text>\n";
    os << "  <text x=\"" << (W + L - R) / 2 << "\" y=\"" << H - 6 << "\" font-size=\"12\" text-anchor=\"middle\">tau</text>\n";
    os << "</svg>\n";
    return os.str();
}

json to_json(const HalfOpenInterval& iv) {
    return json::array({to_json(iv.lo), iv.hi ? to_json(*iv.hi) : json("inf")});
}

Density density_from_json(const json& j, std::size_t r) {
    const std::string kind = field(j, "kind").get<std::string>();
    const double scale = j.contains("scale") ? as_double(j.at("scale"), "scale") : 1.0;
    if (kind == "const") return constant_density(r, j.contains("c") ? as_double(j.at("c"), "c") : scale);
    if (kind == "exp_decay") {
        RealPoint rates = j.contains("rates") ? real_point(j.at("rates"), "rates") : RealPoint(r, 1.0);
        if (rates.size() != r) throw InputError("exp_decay rates must have one entry per axis");
        return exp_decay_density(std::move(rates), scale);
    }
    if (kind == "gauss") {
        RealPoint mu = j.contains("mu") ? real_point(j.at("mu"), "mu") : RealPoint(r, 0.0);
        RealPoint sigma = j.contains("sigma") ? real_point(j.at("sigma"), "sigma") : RealPoint(r, 1.0);
        if (mu.size() != r || sigma.size() != r) throw InputError("gauss parameters must have one entry per axis");
        return gauss_density(std::move(mu), std::move(sigma), scale);
    }
    throw InputError("unknown density kind '" + kind + "' (expected const, exp_decay or gauss)");
}

namespace {

Superadditive shift_from_json(const json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    const double a = j.contains("a") ? as_double(j.at("a"), "a") : 1.0;
    if (kind == "linear") return linear_shift(a);
    if (kind == "power") return power_shift(a, as_double(field(j, "k"), "k"));
    throw InputError("unknown shift kind '" + kind + "' (expected linear or power)");
}

QuadratureOptions quad_from_json(const json& j) {
    QuadratureOptions q;
    if (j.contains("quad_depth")) q.depth = static_cast<unsigned>(as_size(j.at("quad_depth"), "quad_depth"));
    if (j.contains("truncation")) q.truncation = as_double(j.at("truncation"), "truncation");
    return q;
}

}  // namespace

ContourPtr contour_from_json(const json& j) {
    const std::string family = field(j, "family").get<std::string>();
    if (family == "standard") return std::make_shared<StandardContour>(real_point(field(j, "v"), "v"));
    if (family == "truncated") {
        return std::make_shared<TruncatedContour>(contour_from_json(field(j, "inner")), real_point(field(j, "alpha"), "alpha"));
    }
    if (family == "curve") {
        std::vector<RealPoint> verts;
        for (const auto& p : field(j, "vertices")) verts.push_back(real_point(p, "vertex"));
        std::vector<std::size_t> axes;
        for (const auto& a : field(j, "translation_axes")) axes.push_back(as_size(a, "translation axis"));
        return std::make_shared<CurveContour>(std::move(verts), std::move(axes));
    }
    if (family == "distance" || family == "distance_rectangle") {
        RealPoint v = real_point(field(j, "v"), "v");
        DistanceOptions o;
        o.quad = quad_from_json(j);
        if (j.contains("tol")) o.tol = as_double(j.at("tol"), "tol");
        if (j.contains("search_cap")) o.search_cap = as_double(j.at("search_cap"), "search_cap");
        const auto region = family == "distance" ? DistanceTypeContour::Region::LShape
                                                 : DistanceTypeContour::Region::Rectangle;
        const std::size_t r = v.size();
        return std::make_shared<DistanceTypeContour>(std::move(v), density_from_json(field(j, "density"), r), o, region);
    }
    if (family == "componentwise") {
        std::vector<Density> f;
        std::vector<Superadditive> m;
        for (const auto& d : field(j, "densities")) f.push_back(density_from_json(d, 1));
        for (const auto& s : field(j, "shifts")) m.push_back(shift_from_json(s));
        ComponentwiseOptions o;
        o.quad = quad_from_json(j);
        if (j.contains("tol")) o.tol = as_double(j.at("tol"), "tol");
        if (j.contains("search_cap")) o.search_cap = as_double(j.at("search_cap"), "search_cap");
        return std::make_shared<ComponentwiseShiftContour>(std::move(f), std::move(m), o);
    }
    if (family == "multivariate") {
        RealPoint v = real_point(field(j, "v"), "v");
        std::vector<Density> f;
        for (const auto& d : field(j, "densities")) f.push_back(density_from_json(d, v.size()));
        MultivariateOptions o;
        o.quad = quad_from_json(j);
        if (j.contains("grid0")) o.grid0 = as_size(j.at("grid0"), "grid0");
        if (j.contains("refine_levels")) o.refine_levels = as_size(j.at("refine_levels"), "refine_levels");
        if (j.contains("search_cap")) o.search_cap = as_double(j.at("search_cap"), "search_cap");
        return std::make_shared<MultivariateShiftContour>(std::move(f), std::move(v), o);
    }
    throw InputError("unknown contour family '" + family + "'");
}

json to_json(const ContourResult& r) {
    json out = {{"accuracy", r.accuracy}};
    if (r.value) {
        out["value"] = *r.value;
    } else {
        out["value"] = "inf";
        out["diagnostic"] = r.diagnostic;
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace shiftdim
