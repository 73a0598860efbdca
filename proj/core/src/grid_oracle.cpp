#include "shiftdim/grid_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "shiftdim/errors.hpp"

namespace shiftdim {

namespace {

/// Adds x at g and pushes images forward until nothing grows.
void propagate(const GridModule& m, SubmoduleFibers& q, const GridPoint& g, FpVec x) {
    const PrimeField& F = m.field();
    std::vector<std::pair<GridPoint, FpVec>> stack;
    stack.emplace_back(g, std::move(x));
    while (!stack.empty()) {
        auto [at, vec] = std::move(stack.back());
        stack.pop_back();
        if (!q[m.index(at)].add(F, vec)) continue;
        if (at.i + 1 < m.nx()) {
            const GridPoint n{at.i + 1, at.j};
            FpVec y = apply(F, m.hmap(at), vec);
            if (m.fiber_dim(n) > 0 && !q[m.index(n)].contains(F, y)) stack.emplace_back(n, std::move(y));
        }
        if (at.j + 1 < m.ny()) {
            const GridPoint n{at.i, at.j + 1};
            FpVec y = apply(F, m.vmap(at), vec);
            if (m.fiber_dim(n) > 0 && !q[m.index(n)].contains(F, y)) stack.emplace_back(n, std::move(y));
        }
    }
}

SubmoduleFibers empty_fibers(const GridModule& m) {
    SubmoduleFibers q;
    q.reserve(m.npoints());
    for (std::size_t idx = 0; idx < m.npoints(); ++idx) q.emplace_back(m.fiber_dim(m.point(idx)));
    return q;
}

void check_shift(const GridModule& m, const Degree& w) {
    (void)m;
    if (w.dim() != 2) throw InputError("grid modules need a 2-dimensional shift");
}

/// A target fiber together with the subspace that must be generated there.
struct Constraint {
    GridPoint target;
    Subspace required;
};

struct Candidate {
    HomogeneousElement element;
    std::vector<std::optional<FpVec>> image;  ///< image at each constraint target, if below it
};

struct SearchSpace {
    std::vector<Constraint> constraints;
    std::vector<Candidate> candidates;
};

SearchSpace build_search_space(const GridModule& m, const Degree& w) {
    const PrimeField& F = m.field();
    SearchSpace s;
    std::map<std::size_t, std::size_t> by_target;
    // w * M is generated by the shifted fibers at points with a nonzero cokernel.
    for (std::size_t j = 0; j < m.ny(); ++j) {
        for (std::size_t i = 0; i < m.nx(); ++i) {
            const GridPoint g{i, j};
            if (m.fiber_dim(g) == m.incoming_image(g).dim()) continue;
            const GridPoint t = m.shifted(g, w[0], w[1]);
            Subspace img = Subspace::column_space(F, m.map_between(g, t));
            if (img.dim() == 0) continue;
            auto [it, fresh] = by_target.emplace(m.index(t), s.constraints.size());
            if (fresh) {
                s.constraints.push_back({t, std::move(img)});
            } else {
                s.constraints[it->second].required.add(F, img);
            }
        }
    }
    // An element in the image of a single incoming map is dominated by its
    // preimage, and elements above every target contribute nothing.
    for (std::size_t j = 0; j < m.ny(); ++j) {
        for (std::size_t i = 0; i < m.nx(); ++i) {
            const GridPoint d{i, j};
            const std::size_t n = m.fiber_dim(d);
            if (n == 0) continue;
            const bool useful = std::any_of(s.constraints.begin(), s.constraints.end(),
                                            [&](const Constraint& c) { return d.leq(c.target); });
            if (!useful) continue;
            Subspace from_left(n);
            Subspace from_below(n);
            if (i > 0) from_left = Subspace::column_space(F, m.hmap({i - 1, j}));
            if (j > 0) from_below = Subspace::column_space(F, m.vmap({i, j - 1}));
            std::vector<std::optional<FpMatrix>> to_target;
            for (const auto& c : s.constraints) {
                if (d.leq(c.target)) {
                    to_target.emplace_back(m.map_between(d, c.target));
                } else {
                    to_target.emplace_back(std::nullopt);
                }
            }
            for (auto& vec : normalized_vectors(F, n)) {
                if (from_left.contains(F, vec) || from_below.contains(F, vec)) continue;
                Candidate cand{{d, vec}, {}};
                for (const auto& mt : to_target) {
                    if (mt) {
                        cand.image.emplace_back(apply(F, *mt, vec));
                    } else {
                        cand.image.emplace_back(std::nullopt);
                    }
                }
                s.candidates.push_back(std::move(cand));
            }
        }
    }
    return s;
}

class Searcher {
public:
    Searcher(const GridModule& m, const SearchSpace& s) : m_(m), s_(s) {}

    /// Branches available at the root (candidate indices), or empty if already solved.
    std::vector<std::size_t> root_branches(const SubmoduleFibers& q) const { return branches(q); }

    bool solved(const SubmoduleFibers& q) const {
        for (const auto& c : s_.constraints) {
            if (!q[m_.index(c.target)].contains(m_.field(), c.required)) return false;
        }
        return true;
    }

    /// Depth-first search for at most `budget` further elements.
    bool search(const SubmoduleFibers& q, std::size_t budget, std::vector<std::size_t>& chosen,
                const std::atomic<bool>* stop) {
        ++nodes_;
        if (solved(q)) return true;
        if (budget == 0 || (stop && stop->load(std::memory_order_relaxed))) return false;
        if (lower_bound(q) > budget) return false;
        for (std::size_t c : branches(q)) {
            SubmoduleFibers next = q;
            const auto& el = s_.candidates[c].element;
            propagate(m_, next, el.at, el.vector);
            chosen.push_back(c);
            if (search(next, budget - 1, chosen, stop)) return true;
            chosen.pop_back();
        }
        return false;
    }

    std::size_t lower_bound(const SubmoduleFibers& q) const {
        std::size_t lb = 0;
        for (const auto& c : s_.constraints) {
            Subspace sum = q[m_.index(c.target)];
            const std::size_t before = sum.dim();
            sum.add(m_.field(), c.required);
            lb = std::max(lb, sum.dim() - before);
        }
        return lb;
    }

    std::size_t nodes() const { return nodes_; }

private:
    /// Candidates that enlarge the closure at the most constrained uncovered target.
    std::vector<std::size_t> branches(const SubmoduleFibers& q) const {
        std::vector<std::size_t> best;
        bool found = false;
        for (std::size_t k = 0; k < s_.constraints.size(); ++k) {
            const auto& c = s_.constraints[k];
            const Subspace& here = q[m_.index(c.target)];
            if (here.contains(m_.field(), c.required)) continue;
            std::vector<std::size_t> useful;
            for (std::size_t ci = 0; ci < s_.candidates.size(); ++ci) {
                const auto& img = s_.candidates[ci].image[k];
                if (img && !here.contains(m_.field(), *img)) useful.push_back(ci);
            }
            if (!found || useful.size() < best.size()) {
                best = std::move(useful);
                found = true;
            }
        }
        return best;
    }

    const GridModule& m_;
    const SearchSpace& s_;
    std::size_t nodes_ = 0;
};

}  // namespace

unsigned configured_threads() {
    if (const char* env = std::getenv("SHIFTDIM_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

SubmoduleFibers submodule_closure(const GridModule& m, const std::vector<HomogeneousElement>& elements) {
    SubmoduleFibers q = empty_fibers(m);
    for (const auto& e : elements) {
        if (e.at.i >= m.nx() || e.at.j >= m.ny()) throw InputError("element degree lies off the grid");
        if (e.vector.size() != m.fiber_dim(e.at)) throw InputError("element vector has the wrong length");
        propagate(m, q, e.at, e.vector);
    }
    return q;
}

bool is_v_annihilating(const GridModule& m, const std::vector<HomogeneousElement>& elements, const Degree& w) {
    check_shift(m, w);
    const SubmoduleFibers q = submodule_closure(m, elements);
    for (std::size_t idx = 0; idx < m.npoints(); ++idx) {
        const GridPoint d = m.point(idx);
        if (m.fiber_dim(d) == 0) continue;
        const GridPoint t = m.shifted(d, w[0], w[1]);
        const Subspace img = Subspace::column_space(m.field(), m.map_between(d, t));
        if (!q[m.index(t)].contains(m.field(), img)) return false;
    }
    return true;
}

OracleResult shift_dimension_bruteforce(const GridModule& m, const Degree& w, const OracleOptions& opts) {
    check_shift(m, w);
    const SearchSpace space = build_search_space(m, w);
    const std::size_t cap = opts.cap.value_or(beta0_grid(m));
    const unsigned threads = opts.threads ? opts.threads : configured_threads();
    const SubmoduleFibers root = empty_fibers(m);

    OracleResult res;
    Searcher probe(m, space);
    if (probe.solved(root)) {
        res.dimension = 0;
        return res;
    }
    const std::vector<std::size_t> top = probe.root_branches(root);
    for (std::size_t k = std::max<std::size_t>(1, probe.lower_bound(root)); k <= cap; ++k) {
        // Branch b succeeds with witness found[b]; the smallest successful b wins.
        std::vector<std::optional<std::vector<std::size_t>>> found(top.size());
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best{top.size()};
        std::atomic<bool> stop{false};
        std::atomic<std::size_t> nodes{0};
        auto worker = [&]() {
            Searcher s(m, space);
            while (true) {
                const std::size_t b = next.fetch_add(1);
                if (b >= top.size() || b > best.load()) break;
                SubmoduleFibers q = root;
                const auto& el = space.candidates[top[b]].element;
                propagate(m, q, el.at, el.vector);
                std::vector<std::size_t> chosen{top[b]};
                if (s.search(q, k - 1, chosen, nullptr)) {
                    found[b] = chosen;
                    std::size_t cur = best.load();
                    while (b < cur && !best.compare_exchange_weak(cur, b)) {
                    }
                }
            }
            nodes += s.nodes();
        };
        if (threads <= 1 || top.size() < 2) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < std::min<std::size_t>(threads, top.size()); ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        res.nodes += nodes.load();
        if (best.load() < top.size()) {
            for (std::size_t c : *found[best.load()]) res.witness.push_back(space.candidates[c].element);
            res.dimension = k;
            if (!is_v_annihilating(m, res.witness, w)) {
                throw InvariantError("oracle witness does not annihilate the shift");
            }
            return res;
        }
    }
    return res;
}

StepFunction oracle_curve(const GridModule& m, const Degree& v, const OracleOptions& opts) {
    check_shift(m, v);
    if (v.is_zero()) throw InputError("curve needs a nonzero direction");
    // The shifted lookup changes exactly when xs[i] + tau v_x crosses some xs[k].
    std::set<Rational> events;
    Rational horizon(0);
    auto collect = [&](const std::vector<Rational>& c, const Rational& vc) {
        if (vc == Rational(0)) return;
        horizon = std::max(horizon, (c.back() - c.front()) / vc);
        for (std::size_t a = 0; a < c.size(); ++a) {
            for (std::size_t b = a + 1; b < c.size(); ++b) events.insert((c[b] - c[a]) / vc);
        }
    };
    collect(m.xs(), v[0]);
    collect(m.ys(), v[1]);

    std::vector<Rational> bps{Rational(0)};
    std::vector<StepValue> vals{beta0_grid(m)};
    for (const auto& tau : events) {
        if (tau > horizon || vals.back() == 0) break;
        OracleOptions o = opts;
        o.cap = vals.back();
        const OracleResult r = shift_dimension_bruteforce(m, v.scaled(tau), o);
        if (!r.dimension) throw InvariantError("shift-dimension increased along the curve");
        if (*r.dimension != vals.back()) {
            bps.push_back(tau);
            vals.push_back(*r.dimension);
        }
    }
    return StepFunction(std::move(bps), std::move(vals));
}

}  // namespace shiftdim
