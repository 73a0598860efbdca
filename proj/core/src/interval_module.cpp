#include "shiftdim/interval_module.hpp"

#include <algorithm>

#include "shiftdim/errors.hpp"

namespace shiftdim {

namespace {

void check_dims(std::size_t r, const std::vector<Degree>& pts, const char* what) {
    for (const auto& p : pts) {
        if (p.dim() != r) {
            throw InputError(std::string(what) + " degree " + p.to_string() + " has dimension " +
                             std::to_string(p.dim()) + ", expected " + std::to_string(r));
        }
    }
}

std::vector<Degree> minimal_elements(std::size_t r, std::vector<Degree> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Degree> out;
    if (r == 2) {
        // Lexicographic order: a point survives iff its second coordinate is
        // strictly below everything kept so far.
        for (auto& p : pts) {
            if (out.empty() || p[1] < out.back()[1]) out.push_back(std::move(p));
        }
        return out;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < pts.size() && minimal; ++j) {
            if (j != i && pts[j].leq(pts[i])) minimal = false;
        }
        if (minimal) out.push_back(pts[i]);
    }
    return out;
}

}  // namespace

Staircase::Staircase(std::size_t r, std::vector<Degree> points) : r_(r) {
    if (r == 0) throw InputError("staircase dimension must be at least 1");
    check_dims(r, points, "staircase");
    pts_ = minimal_elements(r, std::move(points));
}

bool Staircase::upset_contains(const Degree& d) const {
    if (d.dim() != r_) throw InputError("dimension mismatch in upset query");
    if (r_ == 2) {
        // Points with a <= d.a form a prefix; its last element has the smallest b.
        auto it = std::upper_bound(pts_.begin(), pts_.end(), d[0],
                                   [](const Rational& a, const Degree& p) { return a < p[0]; });
        if (it == pts_.begin()) return false;
        return (it - 1)->operator[](1) <= d[1];
    }
    return std::any_of(pts_.begin(), pts_.end(), [&](const Degree& p) { return p.leq(d); });
}

bool Staircase::contains_point(const Degree& d) const {
    if (r_ == 2) {
        auto it = std::lower_bound(pts_.begin(), pts_.end(), d[0],
                                   [](const Degree& p, const Rational& a) { return p[0] < a; });
        return it != pts_.end() && *it == d;
    }
    return std::find(pts_.begin(), pts_.end(), d) != pts_.end();
}

IntervalModule::IntervalModule(std::size_t r, std::vector<Degree> generators, std::vector<Degree> relations)
    : r_(r) {
    if (r == 0) throw InputError("module dimension must be at least 1");
    check_dims(r, generators, "generator");
    check_dims(r, relations, "relation");
    Staircase g(r, std::move(generators));
    Staircase j(r, std::move(relations));
    for (const auto& rho : j) {
        if (!g.upset_contains(rho)) {
            throw InputError("relation " + rho.to_string() + " lies above no generator");
        }
    }
    // In an antichain a relation can lie below a generator only by being equal to it.
    std::vector<Degree> live;
    live.reserve(g.size());
    for (const auto& x : g) {
        if (!j.contains_point(x)) live.push_back(x);
    }
    if (live.size() == g.size()) {
        gens_ = std::move(g);
        rels_ = std::move(j);
        return;
    }
    gens_ = Staircase(r, std::move(live));
    std::vector<Degree> joined;
    for (const auto& rho : j) {
        for (const auto& x : gens_) joined.push_back(join(rho, x));
    }
    rels_ = Staircase(r, std::move(joined));
}

DirectSumModule::DirectSumModule(std::size_t r, std::vector<IntervalModule> summands)
    : r_(r), summands_(std::move(summands)) {
    for (const auto& s : summands_) {
        if (s.dim() != r_) throw InputError("direct sum summands must share the dimension");
    }
}

bool support_contains(const IntervalModule& m, const Degree& d) {
    if (d.dim() != m.dim()) throw InputError("dimension mismatch in support query");
    return m.generators().upset_contains(d) && !m.relations().upset_contains(d);
}

bool shift_is_nonzero(const IntervalModule& m, const Degree& g, const Degree& v) {
    if (!m.generators().contains_point(g)) {
        throw InputError(g.to_string() + " is not a generator degree");
    }
    return support_contains(m, g + v);
}

IntervalModule truncate(const IntervalModule& m, const Degree& alpha) {
    if (alpha.dim() != m.dim()) throw InputError("dimension mismatch in truncate");
    // upset(alpha) intersected with upset(generators) is generated by the joins.
    std::vector<Degree> rels = m.relations().points();
    for (const auto& g : m.generators()) rels.push_back(join(alpha, g));
    return IntervalModule(m.dim(), m.generators().points(), std::move(rels));
}

std::size_t beta0(const IntervalModule& m) { return m.generators().size(); }

std::size_t beta0(const DirectSumModule& m) {
    std::size_t total = 0;
    for (const auto& s : m.summands()) total += beta0(s);
    return total;
}

}  // namespace shiftdim
