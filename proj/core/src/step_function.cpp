#include "shiftdim/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "shiftdim/errors.hpp"

namespace shiftdim {

namespace {

std::string value_string(StepValue v) { return v == kInfiniteValue ? "inf" : std::to_string(v); }

StepValue add_values(StepValue a, StepValue b) {
    if (a == kInfiniteValue || b == kInfiniteValue) return kInfiniteValue;
    if (a > kInfiniteValue - 1 - b) throw std::overflow_error("step value overflow");
    return a + b;
}

/// Union of the breakpoints of all functions.
std::vector<Rational> merged_breakpoints(const std::vector<const StepFunction*>& fs) {
    std::set<Rational> s;
    for (const auto* f : fs) s.insert(f->breakpoints().begin(), f->breakpoints().end());
    return {s.begin(), s.end()};
}

/// Pieces of |f - g|: (start, difference) with difference nullopt meaning infinite.
struct Piece {
    Rational start;
    std::optional<Rational> length;  // nullopt for the final unbounded piece
    std::optional<StepValue> diff;   // nullopt for infinite difference
};

std::vector<Piece> difference_pieces(const StepFunction& f, const StepFunction& g) {
    const auto ts = merged_breakpoints({&f, &g});
    std::vector<Piece> out;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        StepValue a = f.at(ts[k]);
        StepValue b = g.at(ts[k]);
        Piece p{ts[k], std::nullopt, std::nullopt};
        if (k + 1 < ts.size()) p.length = ts[k + 1] - ts[k];
        if (a == kInfiniteValue && b == kInfiniteValue) {
            p.diff = 0;
        } else if (a != kInfiniteValue && b != kInfiniteValue) {
            p.diff = a > b ? a - b : b - a;
        }
        out.push_back(p);
    }
    return out;
}

/// f(t + eps) <= g(t) for all t >= 0.
bool shifted_below(const StepFunction& f, const StepFunction& g, const Rational& eps) {
    std::vector<Rational> ts = g.breakpoints();
    for (const auto& b : f.breakpoints()) {
        if (b - eps >= Rational(0)) ts.push_back(b - eps);
    }
    for (const auto& t : ts) {
        if (f.at(t + eps) > g.at(t)) return false;
    }
    return true;
}

}  // namespace

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<StepValue> values) {
    if (breakpoints.empty() || breakpoints.size() != values.size()) {
        throw InputError("step function needs one value per breakpoint");
    }
    if (breakpoints.front() != Rational(0)) throw InputError("step function must start at 0");
    for (std::size_t k = 1; k < breakpoints.size(); ++k) {
        if (!(breakpoints[k - 1] < breakpoints[k])) throw InputError("breakpoints must increase strictly");
        if (values[k] > values[k - 1]) throw InputError("step function must be non-increasing");
    }
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
        if (!vals_.empty() && vals_.back() == values[k]) continue;
        bp_.push_back(breakpoints[k]);
        vals_.push_back(values[k]);
    }
}

StepValue StepFunction::at(const Rational& t) const {
    if (t < Rational(0)) throw InputError("step function evaluated at negative argument");
    auto it = std::upper_bound(bp_.begin(), bp_.end(), t);
    return vals_[static_cast<std::size_t>(it - bp_.begin()) - 1];
}

std::string StepFunction::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < bp_.size(); ++k) {
        if (k) s += ", ";
        s += value_string(vals_[k]) + " on [" + bp_[k].to_string() + ",";
        s += (k + 1 < bp_.size() ? bp_[k + 1].to_string() : std::string("inf")) + ")";
    }
    return s;
}

StepFunction stabilize(const std::vector<std::vector<Distance>>& d, const std::vector<StepValue>& f,
                       std::size_t x) {
    const std::size_t n = f.size();
    if (d.size() != n || x >= n) throw InputError("distance matrix and values disagree in size");
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i].size() != n) throw InputError("distance matrix must be square");
        if (!d[i][i] || *d[i][i] != Rational(0)) throw InputError("distance matrix needs a zero diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            if (d[i][j] != d[j][i]) throw InputError("distance matrix must be symmetric");
            if (d[i][j] && *d[i][j] < Rational(0)) throw InputError("distances must be non-negative");
        }
    }
    std::vector<std::pair<Rational, StepValue>> by_dist;
    for (std::size_t y = 0; y < n; ++y) {
        if (d[x][y]) by_dist.emplace_back(*d[x][y], f[y]);
    }
    std::sort(by_dist.begin(), by_dist.end());
    std::vector<Rational> bps;
    std::vector<StepValue> vals;
    StepValue running = kInfiniteValue;
    for (std::size_t k = 0; k < by_dist.size(); ++k) {
        running = std::min(running, by_dist[k].second);
        if (k + 1 < by_dist.size() && by_dist[k + 1].first == by_dist[k].first) continue;
        bps.push_back(by_dist[k].first);
        vals.push_back(running);
    }
    return StepFunction(std::move(bps), std::move(vals));
}

std::optional<Rational> interleaving_distance(const StepFunction& f, const StepFunction& g) {
    std::set<Rational> candidates{Rational(0)};
    for (const auto& a : f.breakpoints()) {
        for (const auto& b : g.breakpoints()) {
            candidates.insert(abs(a - b));
        }
    }
    for (const auto& eps : candidates) {
        if (shifted_below(f, g, eps) && shifted_below(g, f, eps)) return eps;
    }
    return std::nullopt;
}

StepFunction sum(const std::vector<StepFunction>& fs) {
    if (fs.empty()) return StepFunction::constant(0);
    std::vector<const StepFunction*> ptrs;
    for (const auto& f : fs) ptrs.push_back(&f);
    auto ts = merged_breakpoints(ptrs);
    std::vector<StepValue> vals;
    for (const auto& t : ts) {
        StepValue acc = 0;
        for (const auto& f : fs) acc = add_values(acc, f.at(t));
        vals.push_back(acc);
    }
    return StepFunction(std::move(ts), std::move(vals));
}

std::optional<Rational> lp_distance_pow(const StepFunction& f, const StepFunction& g, int p) {
    if (p < 1) throw InputError("L^p distance needs p >= 1");
    Rational total(0);
    for (const auto& piece : difference_pieces(f, g)) {
        if (piece.diff && *piece.diff == 0) continue;
        if (!piece.diff || !piece.length) return std::nullopt;
        Rational term(1);
        const Rational base(static_cast<std::int64_t>(*piece.diff));
        for (int i = 0; i < p; ++i) term *= base;
        total += term * *piece.length;
    }
    return total;
}

double lp_distance(const StepFunction& f, const StepFunction& g, double p) {
    if (!(p >= 1.0)) throw InputError("L^p distance needs p >= 1");
    if (p == std::floor(p) && p <= 16.0) {
        auto exact = lp_distance_pow(f, g, static_cast<int>(p));
        if (!exact) return std::numeric_limits<double>::infinity();
        return std::pow(exact->to_double(), 1.0 / p);
    }
    double total = 0.0;
    for (const auto& piece : difference_pieces(f, g)) {
        if (piece.diff && *piece.diff == 0) continue;
        if (!piece.diff || !piece.length) return std::numeric_limits<double>::infinity();
        total += std::pow(static_cast<double>(*piece.diff), p) * piece.length->to_double();
    }
    return std::pow(total, 1.0 / p);
}

std::vector<HalfOpenInterval> locus_nonadditivity(const std::vector<StepFunction>& summand_curves,
                                                  const StepFunction& sum_curve) {
    const StepFunction total = sum(summand_curves);
    std::vector<HalfOpenInterval> out;
    auto ts = merged_breakpoints({&total, &sum_curve});
    for (std::size_t k = 0; k < ts.size(); ++k) {
        if (total.at(ts[k]) == sum_curve.at(ts[k])) continue;
        std::optional<Rational> hi;
        if (k + 1 < ts.size()) hi = ts[k + 1];
        if (!out.empty() && out.back().hi && *out.back().hi == ts[k]) {
            out.back().hi = hi;
        } else {
            out.push_back({ts[k], hi});
        }
    }
    return out;
}

double err_vp(const std::vector<StepFunction>& summand_curves, const StepFunction& sum_curve, double p) {
    const StepFunction total = sum(summand_curves);
    auto ts = merged_breakpoints({&total, &sum_curve});
    for (const auto& t : ts) {
        if (total.at(t) < sum_curve.at(t)) {
            throw InvariantError("sub-additivity violated at tau = " + t.to_string());
        }
    }
    return lp_distance(total, sum_curve, p);
}

}  // namespace shiftdim
