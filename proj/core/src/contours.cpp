#include "shiftdim/contours.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "shiftdim/errors.hpp"

namespace shiftdim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxBisection = 400;

void check_dim(const RealPoint& p, std::size_t r, const char* what) {
    if (p.size() != r) {
        throw InputError(std::string(what) + " has dimension " + std::to_string(p.size()) + ", expected " +
                         std::to_string(r));
    }
}

void check_nonnegative(const RealPoint& p, const char* what) {
    for (double c : p) {
        if (!(c >= 0.0)) throw InputError(std::string(what) + " must have non-negative coordinates");
    }
}

ContourResult infinite(std::string why) {
    ContourResult r;
    r.diagnostic = std::move(why);
    return r;
}

/// Smallest t in [0, cap] with g(t) >= target for non-decreasing g, or nullopt.
std::optional<std::pair<double, double>> invert_monotone(const std::function<double(double)>& g, double target,
                                                         double cap, double tol) {
    if (g(0.0) >= target) return std::make_pair(0.0, 0.0);
    double lo = 0.0;
    double hi = 1.0;
    while (g(hi) < target) {
        lo = hi;
        if (hi >= cap) return std::nullopt;
        hi = std::min(cap, hi * 2.0);
    }
    for (int it = 0; it < kMaxBisection && hi - lo > tol * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (g(mid) >= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return std::make_pair(hi, hi - lo);
}

/// Largest positive amount by which a exceeds b in some coordinate (0 if a <= b).
double excess(const ExtPoint& a, const ExtPoint& b) {
    if (!b) return 0.0;
    if (!a) return kInf;
    double worst = 0.0;
    for (std::size_t i = 0; i < a->size(); ++i) worst = std::max(worst, (*a)[i] - (*b)[i]);
    return worst;
}

std::string describe(const ExtPoint& p) {
    if (!p) return "inf";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p->size(); ++i) os << (i ? "," : "") << (*p)[i];
    os << ")";
    return os.str();
}

}  // namespace

ContourResult Contour::eval(const ExtPoint& x, double eps) const {
    if (!(eps >= 0.0)) throw InputError("contour parameter eps must be non-negative");
    if (!x) return infinite("input is infinity");
    check_dim(*x, dim(), "contour input");
    return eval_finite(*x, eps);
}

// ---- standard / truncated ----

StandardContour::StandardContour(RealPoint v) : v_(std::move(v)) {
    if (v_.empty()) throw InputError("standard contour needs a direction");
    check_nonnegative(v_, "standard contour direction");
}

ContourResult StandardContour::eval_finite(const RealPoint& x, double eps) const {
    RealPoint y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += eps * v_[i];
    return {y, 0.0, {}};
}

TruncatedContour::TruncatedContour(ContourPtr inner, RealPoint alpha) : inner_(std::move(inner)), alpha_(std::move(alpha)) {
    if (!inner_) throw InputError("truncated contour needs an inner contour");
    check_dim(alpha_, inner_->dim(), "truncation point");
}

ContourResult TruncatedContour::eval_finite(const RealPoint& x, double eps) const {
    ContourResult r = inner_->eval(x, eps);
    if (!r.value) return r;
    bool reached = true;
    for (std::size_t i = 0; i < alpha_.size(); ++i) reached = reached && alpha_[i] <= (*r.value)[i];
    if (reached) return infinite("value reached the truncation point");
    return r;
}

// ---- curve ----

CurveContour::CurveContour(std::vector<RealPoint> vertices, std::vector<std::size_t> translation_axes)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw InputError("curve contour needs at least two vertices");
    r_ = vertices_.front().size();
    if (r_ == 0) throw InputError("curve contour needs a positive dimension");
    for (const auto& p : vertices_) check_dim(p, r_, "curve vertex");
    std::size_t nonzero = 0;
    for (double c : vertices_.front()) nonzero += c != 0.0;
    if (nonzero > 1) throw InputError("curve must start on a coordinate axis");
    std::vector<bool> translated(r_, false);
    if (translation_axes.size() + 1 != r_) throw InputError("curve contour needs r-1 translation axes");
    for (auto a : translation_axes) {
        if (a >= r_ || translated[a]) throw InputError("invalid translation axis");
        translated[a] = true;
    }
    free_axis_ = static_cast<std::size_t>(std::find(translated.begin(), translated.end(), false) - translated.begin());
    arc_.push_back(0.0);
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
        double len2 = 0.0;
        for (std::size_t i = 0; i < r_; ++i) {
            const double d = vertices_[k][i] - vertices_[k - 1][i];
            if (d < 0.0) throw InputError("curve polyline must be monotone non-decreasing");
            len2 += d * d;
        }
        if (len2 == 0.0) throw InputError("curve polyline has a repeated vertex");
        arc_.push_back(arc_.back() + std::sqrt(len2));
    }
    // Monotonicity in x needs every translated coordinate to be convex in arc length.
    for (std::size_t k = 2; k < vertices_.size(); ++k) {
        const double before = arc_[k - 1] - arc_[k - 2];
        const double after = arc_[k] - arc_[k - 1];
        for (std::size_t i = 0; i < r_; ++i) {
            if (i == free_axis_) continue;
            const double slope_before = (vertices_[k - 1][i] - vertices_[k - 2][i]) / before;
            const double slope_after = (vertices_[k][i] - vertices_[k - 1][i]) / after;
            if (slope_after < slope_before - 1e-12) {
                throw InputError("curve must turn toward the translation axes (vertex " + std::to_string(k - 1) + ")");
            }
        }
    }
}

std::optional<RealPoint> CurveContour::at(double s) const {
    if (s < 0.0 || s > arc_.back()) return std::nullopt;
    std::size_t k = static_cast<std::size_t>(std::upper_bound(arc_.begin(), arc_.end(), s) - arc_.begin());
    k = std::clamp<std::size_t>(k, 1, vertices_.size() - 1);
    const double t = (s - arc_[k - 1]) / (arc_[k] - arc_[k - 1]);
    RealPoint p(r_);
    for (std::size_t i = 0; i < r_; ++i) p[i] = vertices_[k - 1][i] + t * (vertices_[k][i] - vertices_[k - 1][i]);
    return p;
}

ContourResult CurveContour::eval_finite(const RealPoint& x, double eps) const {
    const std::size_t a = free_axis_;
    const double target = x[a];
    if (target < vertices_.front()[a] || target > vertices_.back()[a]) {
        throw InputError("point is not reachable by any translate of the curve");
    }
    // First segment whose free coordinate reaches the target.
    std::size_t k = 1;
    while (vertices_[k][a] < target) ++k;
    const double lo = vertices_[k - 1][a];
    const double hi = vertices_[k][a];
    if (lo == hi || (hi == target && k + 1 < vertices_.size() && vertices_[k + 1][a] == target)) {
        throw InputError("point lies on more than one translate of the curve");
    }
    const double s0 = arc_[k - 1] + (target - lo) / (hi - lo) * (arc_[k] - arc_[k - 1]);
    const auto base_here = at(s0);
    const auto base_there = at(s0 + eps);
    if (!base_there) return infinite("polyline ends before the requested travel");
    RealPoint y = *base_there;
    for (std::size_t i = 0; i < r_; ++i) {
        if (i != a) y[i] += x[i] - (*base_here)[i];
    }
    return {y, 0.0, {}};
}

// ---- distance type ----

DistanceTypeContour::DistanceTypeContour(RealPoint v, Density f, DistanceOptions opts, Region region)
    : v_(std::move(v)), f_(std::move(f)), opts_(opts), region_(region) {
    check_nonnegative(v_, "distance contour direction");
    check_dim(v_, f_.dim, "distance contour direction");
    if (!(opts_.tol > 0.0) || !(opts_.search_cap > 0.0)) throw InputError("tolerances must be positive");
}

Integral DistanceTypeContour::mass(const RealPoint& x, double delta) const {
    const std::size_t r = v_.size();
    if (region_ == Region::Rectangle) {
        RealPoint hi = x;
        for (std::size_t i = 0; i < r; ++i) hi[i] += delta * v_[i];
        return box_integral(f_, x, hi, opts_.quad);
    }
    // Disjoint boxes: below x + delta v in axis k, at or above it in earlier axes.
    Integral total;
    for (std::size_t k = 0; k < r; ++k) {
        if (v_[k] == 0.0) continue;
        RealPoint lo = x;
        RealPoint hi(r, kInf);
        for (std::size_t j = 0; j < k; ++j) lo[j] = x[j] + delta * v_[j];
        hi[k] = x[k] + delta * v_[k];
        const Integral part = box_integral(f_, lo, hi, opts_.quad);
        total.value += part.value;
        total.error += part.error;
    }
    return total;
}

ContourResult DistanceTypeContour::eval_finite(const RealPoint& x, double eps) const {
    if (eps == 0.0) return {x, 0.0, {}};
    double quad_error = 0.0;
    auto g = [&](double delta) {
        const Integral m = mass(x, delta);
        quad_error = std::max(quad_error, m.error);
        return m.value;
    };
    const auto found = invert_monotone(g, eps, opts_.search_cap, opts_.tol);
    if (!found) return infinite("region mass stays below eps up to the search cap");
    const double delta = found->first;
    if (std::isinf(g(delta))) {
        return infinite("region has infinite mass for every positive delta (non-integrable density)");
    }
    RealPoint y = x;
    double vmax = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += delta * v_[i];
        vmax = std::max(vmax, v_[i]);
    }
    return {y, found->second * vmax + quad_error, {}};
}

// ---- component-wise shift ----

ComponentwiseShiftContour::ComponentwiseShiftContour(std::vector<Density> f, std::vector<Superadditive> m,
                                                     ComponentwiseOptions opts)
    : f_(std::move(f)), m_(std::move(m)), opts_(opts) {
    if (f_.empty() || f_.size() != m_.size()) throw InputError("component-wise contour needs one shift per density");
    for (const auto& d : f_) {
        if (d.dim != 1) throw InputError("component-wise densities must be one-dimensional");
    }
    for (const auto& s : m_) check_superadditive(s);
}

double ComponentwiseShiftContour::cumulative(std::size_t i, double t) const {
    return box_integral(f_[i], {0.0}, {t}, opts_.quad).value;
}

ContourResult ComponentwiseShiftContour::eval_finite(const RealPoint& x, double eps) const {
    check_nonnegative(x, "component-wise contour input");
    RealPoint y(x.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto F = [&](double t) { return cumulative(i, t); };
        const auto yi = invert_monotone(F, x[i], opts_.search_cap, opts_.tol);
        if (!yi) return infinite("coordinate " + std::to_string(i) + " exceeds the reachable mass");
        y[i] = F(yi->first + m_[i].m(eps));
        acc = std::max(acc, yi->second * f_[i].f({yi->first}));
    }
    return {y, acc, {}};
}

// ---- multivariate shift ----

MultivariateShiftContour::MultivariateShiftContour(std::vector<Density> f, RealPoint v, MultivariateOptions opts)
    : f_(std::move(f)), v_(std::move(v)), opts_(opts) {
    check_dim(v_, f_.size(), "multivariate contour direction");
    check_nonnegative(v_, "multivariate contour direction");
    for (const auto& d : f_) {
        if (d.dim != v_.size()) throw InputError("multivariate densities must live on R^r");
    }
    if (opts_.grid0 == 0 || !(opts_.search_cap > 0.0)) throw InputError("invalid multivariate grid options");
}

RealPoint MultivariateShiftContour::masses(const RealPoint& y) const {
    RealPoint out(f_.size());
    const RealPoint origin(v_.size(), 0.0);
    for (std::size_t j = 0; j < f_.size(); ++j) out[j] = box_integral(f_[j], origin, y, opts_.quad).value;
    return out;
}

bool MultivariateShiftContour::in_b(const RealPoint& y, const RealPoint& x) const {
    const RealPoint m = masses(y);
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] < x[j]) return false;
    }
    return true;
}

std::vector<RealPoint> MultivariateShiftContour::meet_estimates(const RealPoint& x) const {
    const std::size_t r = v_.size();
    const double cap = opts_.search_cap;
    if (!in_b(RealPoint(r, cap), x)) return {};
    // B(x) is an upset, so the meet of its grid points is attained coordinate by
    // coordinate with the remaining coordinates at the cap.
    std::vector<RealPoint> levels;
    RealPoint b(r);
    std::vector<double> pitch(r);
    for (std::size_t i = 0; i < r; ++i) {
        const double h = cap / static_cast<double>(opts_.grid0);
        RealPoint y(r, cap);
        std::size_t k = 0;
        for (; k < opts_.grid0; ++k) {
            y[i] = h * static_cast<double>(k);
            if (in_b(y, x)) break;
        }
        b[i] = h * static_cast<double>(k);
        pitch[i] = h;
    }
    levels.push_back(b);
    for (std::size_t level = 0; level < opts_.refine_levels; ++level) {
        for (std::size_t i = 0; i < r; ++i) {
            if (b[i] == 0.0) continue;
            pitch[i] *= 0.5;
            RealPoint y(r, cap);
            y[i] = b[i] - pitch[i];
            if (in_b(y, x)) b[i] = y[i];
        }
        levels.push_back(b);
    }
    return levels;
}

ContourResult MultivariateShiftContour::eval_finite(const RealPoint& x, double eps) const {
    check_nonnegative(x, "multivariate contour input");
    const auto levels = meet_estimates(x);
    if (levels.empty()) return infinite("B(x) is empty within the search cap");
    RealPoint y = levels.back();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += eps * v_[i];
    RealPoint out = masses(y);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], x[i]);
    const double pitch =
        opts_.search_cap / static_cast<double>(opts_.grid0) / std::ldexp(1.0, static_cast<int>(opts_.refine_levels));
    return {out, pitch, {}};
}

// ---- axiom harness ----

AxiomReport check_contour_axioms(const Contour& c, const std::vector<AxiomSample>& samples, double tol) {
    AxiomReport rep;
    for (const auto& s : samples) {
        ++rep.samples;
        const ExtPoint x = s.x;
        const ContourResult a = c.eval(x, s.eps);
        const ContourResult ab = c.eval(a.value, s.tau);
        const ContourResult direct = c.eval(x, s.eps + s.tau);
        const ContourResult moved = c.eval(ExtPoint(s.x2), s.eps2);
        const double v[3] = {excess(x, a.value), excess(ab.value, direct.value), excess(a.value, moved.value)};
        bool bad = false;
        for (int k = 0; k < 3; ++k) {
            rep.worst[k] = std::max(rep.worst[k], v[k]);
            bad = bad || v[k] > tol;
        }
        if (bad) {
            ++rep.failures;
            if (rep.first_failure.empty()) {
                std::ostringstream os;
                os << "x=" << describe(x) << " eps=" << s.eps << " tau=" << s.tau << ": C(x,eps)=" << describe(a.value)
                   << " C(C(x,eps),tau)=" << describe(ab.value) << " C(x,eps+tau)=" << describe(direct.value)
                   << " x2=" << describe(ExtPoint(s.x2)) << " eps2=" << s.eps2 << " C(x2,eps2)=" << describe(moved.value);
                rep.first_failure = os.str();
            }
        }
    }
    rep.passed = rep.failures == 0;
    return rep;
}

std::vector<AxiomSample> random_axiom_samples(std::size_t r, std::size_t n, std::uint64_t seed, double xmax,
                                              double emax) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(0.0, xmax);
    std::uniform_real_distribution<double> ue(0.0, emax);
    std::uniform_real_distribution<double> bump(0.0, xmax / 4.0);
    std::vector<AxiomSample> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        AxiomSample s;
        s.x.resize(r);
        s.x2.resize(r);
        for (std::size_t i = 0; i < r; ++i) {
            s.x[i] = ux(rng);
            s.x2[i] = s.x[i] + bump(rng);
        }
        s.eps = ue(rng);
        s.eps2 = s.eps + ue(rng) / 4.0;
        s.tau = ue(rng);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace shiftdim
