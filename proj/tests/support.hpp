#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "shiftdim/fp_linalg.hpp"
#include "shiftdim/grid_module.hpp"
#include "shiftdim/interval_module.hpp"

namespace shiftdim::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Degree random_point(Rng& rng, std::size_t r, std::int64_t box) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < r; ++i) c.emplace_back(uniform(rng, 0, box));
    return Degree(std::move(c));
}

/// Random interval module with up to `max_gens` generators in [0, box]^r and
/// up to `max_rels` relations, each placed above a random generator.
inline IntervalModule random_interval(Rng& rng, std::size_t r, std::size_t max_gens, std::size_t max_rels,
                                      std::int64_t box) {
    std::vector<Degree> gens;
    const auto ng = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_gens)));
    for (std::size_t k = 0; k < ng; ++k) gens.push_back(random_point(rng, r, box));
    const Staircase g(r, gens);
    std::vector<Degree> rels;
    const auto nr = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_rels)));
    for (std::size_t k = 0; k < nr; ++k) {
        const Degree& base = g[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(g.size()) - 1))];
        std::vector<Rational> c;
        for (std::size_t i = 0; i < r; ++i) c.push_back(base[i] + Rational(uniform(rng, 0, box / 2 + 1)));
        rels.emplace_back(std::move(c));
    }
    return IntervalModule(r, g.points(), std::move(rels));
}

inline Degree random_shift(Rng& rng, std::size_t r, std::int64_t max, bool allow_zero = false) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < r; ++i) c.emplace_back(uniform(rng, allow_zero ? 0 : 1, max));
    return Degree(std::move(c));
}

/// dim_v of an interval module by brute force over subsets of generators:
/// a subset works iff every generator g with g + v in the support has a
/// subset element below g + v.
inline std::size_t naive_interval_dim(const IntervalModule& m, const Degree& v) {
    const auto& gens = m.generators().points();
    std::vector<Degree> targets;
    for (const auto& g : gens) {
        const Degree t = g + v;
        bool in_support = false;
        bool killed = false;
        for (const auto& h : gens) in_support = in_support || h.leq(t);
        for (const auto& rel : m.relations().points()) killed = killed || rel.leq(t);
        if (in_support && !killed) targets.push_back(t);
    }
    const std::size_t n = gens.size();
    std::size_t best = n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto k = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (k >= best) continue;
        bool ok = true;
        for (const auto& t : targets) {
            bool covered = false;
            for (std::size_t i = 0; i < n && !covered; ++i) covered = ((mask >> i) & 1u) && gens[i].leq(t);
            if (!covered) {
                ok = false;
                break;
            }
        }
        if (ok) best = k;
    }
    return best;
}

/// Submodule span at grid point d of the given elements, computed directly.
inline Subspace span_at(const GridModule& m, const std::vector<std::pair<GridPoint, FpVec>>& elems,
                        const GridPoint& d) {
    Subspace s(m.fiber_dim(d));
    for (const auto& [at, vec] : elems) {
        if (at.leq(d)) s.add(m.field(), apply(m.field(), m.map_between(at, d), vec));
    }
    return s;
}

/// True iff the shift by (wx, wy) of every fiber lands inside the span of `elems`.
inline bool naive_annihilates(const GridModule& m, const std::vector<std::pair<GridPoint, FpVec>>& elems,
                              const Rational& wx, const Rational& wy) {
    for (std::size_t idx = 0; idx < m.npoints(); ++idx) {
        const GridPoint d = m.point(idx);
        if (m.fiber_dim(d) == 0) continue;
        const GridPoint t = m.shifted(d, wx, wy);
        const Subspace img = Subspace::column_space(m.field(), m.map_between(d, t));
        if (!span_at(m, elems, t).contains(m.field(), img)) return false;
    }
    return true;
}

/// Every nonzero vector of F_p^n (not normalized).
inline std::vector<FpVec> all_nonzero_vectors(std::uint32_t p, std::size_t n) {
    std::vector<FpVec> out;
    FpVec x(n, 0);
    while (true) {
        std::size_t i = 0;
        while (i < n && ++x[i] == p) x[i++] = 0;
        if (i == n) break;
        out.push_back(x);
    }
    return out;
}

/// Unpruned exhaustive dim_w over all nonzero homogeneous elements of a tiny grid module.
inline std::size_t naive_grid_dim(const GridModule& m, const Rational& wx, const Rational& wy) {
    std::vector<std::pair<GridPoint, FpVec>> cand;
    for (std::size_t idx = 0; idx < m.npoints(); ++idx) {
        const GridPoint d = m.point(idx);
        for (auto& x : all_nonzero_vectors(m.p(), m.fiber_dim(d))) cand.emplace_back(d, std::move(x));
    }
    std::vector<std::pair<GridPoint, FpVec>> chosen;
    for (std::size_t k = 0;; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        if (k > cand.size()) return k;  // unreachable for modules with a finite basis
        while (true) {
            chosen.clear();
            for (auto i : idx) chosen.push_back(cand[i]);
            if (naive_annihilates(m, chosen, wx, wy)) return k;
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == cand.size() - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Free rank-one grid module generated at (xs[gi], ys[gj]).
inline GridModule free_grid(std::uint32_t p, std::vector<Rational> xs, std::vector<Rational> ys, std::size_t gi,
                            std::size_t gj) {
    const std::size_t nx = xs.size();
    const std::size_t ny = ys.size();
    std::vector<std::vector<std::size_t>> dims(nx, std::vector<std::size_t>(ny, 0));
    for (std::size_t i = gi; i < nx; ++i) {
        for (std::size_t j = gj; j < ny; ++j) dims[i][j] = 1;
    }
    std::vector<std::vector<FpMatrix>> h(nx - 1, std::vector<FpMatrix>(ny));
    std::vector<std::vector<FpMatrix>> v(nx, std::vector<FpMatrix>(ny - 1));
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            if (i + 1 < nx) h[i][j] = dims[i][j] && dims[i + 1][j] ? FpMatrix::identity(1) : FpMatrix(dims[i + 1][j], dims[i][j]);
            if (j + 1 < ny) v[i][j] = dims[i][j] && dims[i][j + 1] ? FpMatrix::identity(1) : FpMatrix(dims[i][j + 1], dims[i][j]);
        }
    }
    return GridModule(p, std::move(xs), std::move(ys), std::move(dims), std::move(h), std::move(v));
}

inline std::vector<Rational> range(std::int64_t n) {
    std::vector<Rational> out;
    for (std::int64_t i = 0; i < n; ++i) out.emplace_back(i);
    return out;
}

}  // namespace shiftdim::testing
