#include "shiftdim/shift_dimension.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "shiftdim/errors.hpp"

namespace shiftdim {

namespace {

Degree swap2(const Degree& d) { return Degree({d[1], d[0]}); }

std::vector<Degree> swap2(const std::vector<Degree>& ds) {
    std::vector<Degree> out;
    out.reserve(ds.size());
    for (const auto& d : ds) out.push_back(swap2(d));
    return out;
}

void check_bivariate(const IntervalModule& m, const Degree& v) {
    if (m.dim() != 2) throw RefusedError("the clustering algorithm needs r = 2, got r = " + std::to_string(m.dim()));
    if (v.dim() != 2) throw InputError("shift vector must have 2 coordinates");
}

/// Clustering pass over generators sorted with a increasing and b decreasing.
ShiftDimResult cluster(const Staircase& gens, const Staircase& rels, const Degree& v) {
    const std::size_t n = gens.size();
    const Rational& v1 = v[0];
    const Rational& v2 = v[1];

    // Which generators have a nonzero v-shift. The shifted points are again
    // sorted by first coordinate, so one sweep over the relations suffices.
    std::vector<char> nonzero(n, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational a = gens[i][0] + v1;
        const Rational b = gens[i][1] + v2;
        while (k < rels.size() && rels[k][0] <= a) ++k;
        nonzero[i] = !(k > 0 && rels[k - 1][1] <= b);
    }

    // Generator c covers target i iff g_c <= g_i + v. Covered targets form a
    // contiguous index range around c, so the first uncovered target t is best
    // served by the largest c with a_c <= a_t + v1 (step (a)); everything that c
    // covers is then dropped from the live set (step (b)).
    ShiftDimResult res;
    std::size_t t = 0;
    std::size_t c = 0;
    while (true) {
        while (t < n && !nonzero[t]) ++t;
        if (t == n) break;
        if (c < t) c = t;
        const Rational reach = gens[t][0] + v1;
        while (c + 1 < n && gens[c + 1][0] <= reach) ++c;
        res.basis.push_back(gens[c]);
        ++res.iterations;
        const Rational& bc = gens[c][1];
        while (t < n && bc <= gens[t][1] + v2) ++t;
    }
    res.dimension = res.basis.size();
    return res;
}

}  // namespace

ShiftDimResult shift_dimension_2d(const IntervalModule& m, const Degree& v, ClusterOrder order) {
    check_bivariate(m, v);
    if (v.is_zero()) {
        ShiftDimResult res;
        res.basis = m.generators().points();
        res.dimension = res.basis.size();
        res.iterations = res.dimension;
        return res;
    }
    if (order == ClusterOrder::FromAbove) return cluster(m.generators(), m.relations(), v);

    // The opposite total order is the natural order after swapping coordinates.
    Staircase g(2, swap2(m.generators().points()));
    Staircase r(2, swap2(m.relations().points()));
    ShiftDimResult res = cluster(g, r, swap2(v));
    res.basis = swap2(res.basis);
    return res;
}

std::vector<Rational> critical_taus(const IntervalModule& m, const Degree& v) {
    if (v.dim() != m.dim()) throw InputError("shift vector dimension does not match the module");
    if (v.is_zero()) throw InputError("critical taus need a nonzero direction");
    const std::size_t r = m.dim();

    // Smallest tau >= 0 with from + tau v >= to, if any.
    auto threshold = [&](const Degree& from, const Degree& to) -> std::optional<Rational> {
        Rational tau(0);
        for (std::size_t c = 0; c < r; ++c) {
            if (v[c] == Rational(0)) {
                if (from[c] < to[c]) return std::nullopt;
            } else {
                tau = std::max(tau, (to[c] - from[c]) / v[c]);
            }
        }
        return tau;
    };

    std::set<Rational> taus{Rational(0)};
    const auto& gens = m.generators().points();
    for (const auto& g : gens) {
        for (const auto& rho : m.relations()) {
            if (auto t = threshold(g, rho)) taus.insert(*t);
        }
        for (const auto& h : gens) {
            if (&h == &g) continue;
            if (auto t = threshold(g, h)) taus.insert(*t);
        }
    }
    return {taus.begin(), taus.end()};
}

StepFunction stable_rank_curve(const IntervalModule& m, const Degree& v) {
    if (m.dim() == 2) check_bivariate(m, v);
    const auto taus = critical_taus(m, v);
    auto dim_at = [&](const Rational& tau) -> StepValue {
        const Degree w = v.scaled(tau);
        return m.dim() == 2 ? shift_dimension_2d(m, w).dimension : subset_oracle(m, w).dimension;
    };
    std::vector<StepValue> vals;
    vals.reserve(taus.size());
    for (std::size_t k = 0; k < taus.size(); ++k) {
        vals.push_back(dim_at(taus[k]));
        const Rational probe = k + 1 < taus.size() ? (taus[k] + taus[k + 1]) / Rational(2) : taus[k] + Rational(1);
        if (dim_at(probe) != vals.back()) {
            throw InvariantError("shift-dimension changed between consecutive critical values at tau = " +
                                 probe.to_string());
        }
    }
    return StepFunction(taus, std::move(vals));
}

bool is_v_generating(const IntervalModule& m, const std::vector<Degree>& basis, const Degree& v) {
    for (const auto& b : basis) {
        if (!support_contains(m, b)) return false;
    }
    for (const auto& g : m.generators()) {
        const Degree target = g + v;
        if (!support_contains(m, target)) continue;
        bool covered = std::any_of(basis.begin(), basis.end(), [&](const Degree& b) { return b.leq(target); });
        if (!covered) return false;
    }
    return true;
}

ShiftDimResult subset_oracle(const IntervalModule& m, const Degree& v) {
    if (v.dim() != m.dim()) throw InputError("shift vector dimension does not match the module");
    const auto& gens = m.generators().points();
    const std::size_t n = gens.size();
    if (n > 64) throw RefusedError("subset oracle supports at most 64 generators");

    std::uint64_t targets = 0;
    std::vector<std::uint64_t> covers(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Degree t = gens[i] + v;
        if (!support_contains(m, t)) continue;
        targets |= std::uint64_t{1} << i;
        for (std::size_t j = 0; j < n; ++j) {
            if (gens[j].leq(t)) covers[j] |= std::uint64_t{1} << i;
        }
    }

    ShiftDimResult res;
    for (std::size_t k = 0; k <= n; ++k) {
        // Lexicographic k-combinations of {0, ..., n-1}.
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            ++res.iterations;
            std::uint64_t got = 0;
            for (auto i : idx) got |= covers[i];
            if ((got & targets) == targets) {
                for (auto i : idx) res.basis.push_back(gens[i]);
                res.dimension = k;
                return res;
            }
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    throw InvariantError("no generating subset found");
}

}  // namespace shiftdim
