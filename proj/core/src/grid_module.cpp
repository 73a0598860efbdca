#include "shiftdim/grid_module.hpp"

#include <algorithm>
#include <set>

#include "shiftdim/errors.hpp"

namespace shiftdim {

namespace {

void check_increasing(const std::vector<Rational>& c, const char* axis) {
    if (c.empty()) throw InputError(std::string("grid needs at least one ") + axis + " coordinate");
    for (std::size_t k = 1; k < c.size(); ++k) {
        if (!(c[k - 1] < c[k])) throw InputError(std::string(axis) + " coordinates must increase strictly");
    }
}

std::string where(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<Rational> union_sorted(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::set<Rational> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return {s.begin(), s.end()};
}

}  // namespace

GridModule::GridModule(std::uint32_t p, std::vector<Rational> xs, std::vector<Rational> ys,
                       std::vector<std::vector<std::size_t>> dims, std::vector<std::vector<FpMatrix>> hmaps,
                       std::vector<std::vector<FpMatrix>> vmaps)
    : field_(p), xs_(std::move(xs)), ys_(std::move(ys)), dims_(std::move(dims)), hmaps_(std::move(hmaps)),
      vmaps_(std::move(vmaps)) {
    check_increasing(xs_, "x");
    check_increasing(ys_, "y");
    const std::size_t nx = xs_.size();
    const std::size_t ny = ys_.size();
    if (dims_.size() != nx) throw InputError("dims must have one column per x coordinate");
    for (const auto& col : dims_) {
        if (col.size() != ny) throw InputError("dims must have one entry per y coordinate");
    }
    if (hmaps_.size() != nx - 1) throw InputError("hmaps must have nx-1 columns");
    if (vmaps_.size() != nx) throw InputError("vmaps must have nx columns");
    for (std::size_t i = 0; i < nx; ++i) {
        if (i + 1 < nx && hmaps_[i].size() != ny) throw InputError("hmaps must have ny rows");
        if (vmaps_[i].size() != ny - 1) throw InputError("vmaps must have ny-1 rows");
    }
    auto normalize = [&](FpMatrix& m, std::size_t rows, std::size_t cols, const std::string& name) {
        if (m.rows != rows || m.cols != cols) {
            if (rows * cols == 0 && m.a.empty()) {
                m = FpMatrix(rows, cols);
                return;
            }
            throw InputError(name + " has shape " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                             ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
        }
        for (auto& e : m.a) e %= field_.p();
    };
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            if (i + 1 < nx) normalize(hmaps_[i][j], dims_[i + 1][j], dims_[i][j], "hmap at " + where(i, j));
            if (j + 1 < ny) normalize(vmaps_[i][j], dims_[i][j + 1], dims_[i][j], "vmap at " + where(i, j));
        }
    }
    for (std::size_t i = 0; i + 1 < nx; ++i) {
        for (std::size_t j = 0; j + 1 < ny; ++j) {
            FpMatrix right_up = multiply(field_, vmaps_[i + 1][j], hmaps_[i][j]);
            FpMatrix up_right = multiply(field_, hmaps_[i][j + 1], vmaps_[i][j]);
            if (!(right_up == up_right)) throw InputError("square at " + where(i, j) + " does not commute");
        }
    }
}

GridModule GridModule::zero(std::uint32_t p) {
    return GridModule(p, {Rational(0)}, {Rational(0)}, {{0}}, {}, {{}});
}

FpMatrix GridModule::map_between(const GridPoint& a, const GridPoint& b) const {
    if (!a.leq(b)) throw InvariantError("map_between needs a <= b");
    FpMatrix m = FpMatrix::identity(fiber_dim(a));
    for (std::size_t i = a.i; i < b.i; ++i) m = multiply(field_, hmaps_[i][a.j], m);
    for (std::size_t j = a.j; j < b.j; ++j) m = multiply(field_, vmaps_[b.i][j], m);
    return m;
}

GridPoint GridModule::shifted(const GridPoint& g, const Rational& wx, const Rational& wy) const {
    const Rational tx = xs_[g.i] + wx;
    const Rational ty = ys_[g.j] + wy;
    auto ix = std::upper_bound(xs_.begin(), xs_.end(), tx) - xs_.begin() - 1;
    auto iy = std::upper_bound(ys_.begin(), ys_.end(), ty) - ys_.begin() - 1;
    return {static_cast<std::size_t>(ix), static_cast<std::size_t>(iy)};
}

Subspace GridModule::incoming_image(const GridPoint& g) const {
    Subspace s(fiber_dim(g));
    if (g.i > 0) s.add(field_, Subspace::column_space(field_, hmaps_[g.i - 1][g.j]));
    if (g.j > 0) s.add(field_, Subspace::column_space(field_, vmaps_[g.i][g.j - 1]));
    return s;
}

std::size_t beta0_grid(const GridModule& m) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < m.nx(); ++i) {
        for (std::size_t j = 0; j < m.ny(); ++j) {
            const GridPoint g{i, j};
            total += m.fiber_dim(g) - m.incoming_image(g).dim();
        }
    }
    return total;
}

GridModule regrid(const GridModule& m, std::vector<Rational> xs, std::vector<Rational> ys) {
    check_increasing(xs, "x");
    check_increasing(ys, "y");
    auto locate = [](const std::vector<Rational>& old, const std::vector<Rational>& fresh) {
        // Old index of the grid line at or below each new coordinate, -1 if none.
        std::vector<long> out;
        for (const auto& c : fresh) {
            out.push_back(static_cast<long>(std::upper_bound(old.begin(), old.end(), c) - old.begin()) - 1);
        }
        for (const auto& c : old) {
            if (!std::binary_search(fresh.begin(), fresh.end(), c)) {
                throw InputError("regrid must keep every existing coordinate");
            }
        }
        return out;
    };
    const auto ox = locate(m.xs(), xs);
    const auto oy = locate(m.ys(), ys);
    const std::size_t nx = xs.size();
    const std::size_t ny = ys.size();
    auto dim_of = [&](std::size_t i, std::size_t j) -> std::size_t {
        if (ox[i] < 0 || oy[j] < 0) return 0;
        return m.fiber_dim({static_cast<std::size_t>(ox[i]), static_cast<std::size_t>(oy[j])});
    };
    std::vector<std::vector<std::size_t>> dims(nx, std::vector<std::size_t>(ny));
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) dims[i][j] = dim_of(i, j);
    }
    std::vector<std::vector<FpMatrix>> h(nx > 0 ? nx - 1 : 0, std::vector<FpMatrix>(ny));
    std::vector<std::vector<FpMatrix>> v(nx, std::vector<FpMatrix>(ny > 0 ? ny - 1 : 0));
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            if (i + 1 < nx) {
                if (ox[i] < 0 || oy[j] < 0) {
                    h[i][j] = FpMatrix(dims[i + 1][j], dims[i][j]);
                } else if (ox[i] == ox[i + 1]) {
                    h[i][j] = FpMatrix::identity(dims[i][j]);
                } else {
                    h[i][j] = m.hmap({static_cast<std::size_t>(ox[i]), static_cast<std::size_t>(oy[j])});
                }
            }
            if (j + 1 < ny) {
                if (ox[i] < 0 || oy[j] < 0) {
                    v[i][j] = FpMatrix(dims[i][j + 1], dims[i][j]);
                } else if (oy[j] == oy[j + 1]) {
                    v[i][j] = FpMatrix::identity(dims[i][j]);
                } else {
                    v[i][j] = m.vmap({static_cast<std::size_t>(ox[i]), static_cast<std::size_t>(oy[j])});
                }
            }
        }
    }
    return GridModule(m.p(), std::move(xs), std::move(ys), std::move(dims), std::move(h), std::move(v));
}

GridModule direct_sum(const GridModule& a, const GridModule& b) {
    if (a.p() != b.p()) throw InputError("direct sum needs a common field");
    auto xs = union_sorted(a.xs(), b.xs());
    auto ys = union_sorted(a.ys(), b.ys());
    const GridModule A = regrid(a, xs, ys);
    const GridModule B = regrid(b, xs, ys);
    const std::size_t nx = xs.size();
    const std::size_t ny = ys.size();
    auto block = [](const FpMatrix& x, const FpMatrix& y) {
        FpMatrix m(x.rows + y.rows, x.cols + y.cols);
        for (std::size_t r = 0; r < x.rows; ++r)
            for (std::size_t c = 0; c < x.cols; ++c) m.at(r, c) = x.at(r, c);
        for (std::size_t r = 0; r < y.rows; ++r)
            for (std::size_t c = 0; c < y.cols; ++c) m.at(x.rows + r, x.cols + c) = y.at(r, c);
        return m;
    };
    std::vector<std::vector<std::size_t>> dims(nx, std::vector<std::size_t>(ny));
    std::vector<std::vector<FpMatrix>> h(nx - 1, std::vector<FpMatrix>(ny));
    std::vector<std::vector<FpMatrix>> v(nx, std::vector<FpMatrix>(ny - 1));
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            dims[i][j] = A.dims()[i][j] + B.dims()[i][j];
            if (i + 1 < nx) h[i][j] = block(A.hmaps()[i][j], B.hmaps()[i][j]);
            if (j + 1 < ny) v[i][j] = block(A.vmaps()[i][j], B.vmaps()[i][j]);
        }
    }
    return GridModule(a.p(), std::move(xs), std::move(ys), std::move(dims), std::move(h), std::move(v));
}

GridModule grid_from_intervals(const DirectSumModule& summands, std::uint32_t p) {
    if (summands.dim() != 2) throw RefusedError("grid discretization needs r = 2");
    std::set<Rational> sx;
    std::set<Rational> sy;
    for (const auto& s : summands.summands()) {
        for (const auto* st : {&s.generators(), &s.relations()}) {
            for (const auto& d : *st) {
                sx.insert(d[0]);
                sy.insert(d[1]);
            }
        }
    }
    if (sx.empty()) return GridModule::zero(p);
    std::vector<Rational> xs(sx.begin(), sx.end());
    std::vector<Rational> ys(sy.begin(), sy.end());
    const std::size_t nx = xs.size();
    const std::size_t ny = ys.size();

    // Summands alive at each grid point, in summand order.
    std::vector<std::vector<std::vector<std::size_t>>> alive(nx, std::vector<std::vector<std::size_t>>(ny));
    std::vector<std::vector<std::size_t>> dims(nx, std::vector<std::size_t>(ny));
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            const Degree d({xs[i], ys[j]});
            for (std::size_t k = 0; k < summands.summands().size(); ++k) {
                if (support_contains(summands.summands()[k], d)) alive[i][j].push_back(k);
            }
            dims[i][j] = alive[i][j].size();
        }
    }
    auto transfer = [](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
        FpMatrix m(to.size(), from.size());
        for (std::size_t r = 0; r < to.size(); ++r) {
            for (std::size_t c = 0; c < from.size(); ++c) {
                if (to[r] == from[c]) m.at(r, c) = 1;
            }
        }
        return m;
    };
    std::vector<std::vector<FpMatrix>> h(nx - 1, std::vector<FpMatrix>(ny));
    std::vector<std::vector<FpMatrix>> v(nx, std::vector<FpMatrix>(ny - 1));
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            if (i + 1 < nx) h[i][j] = transfer(alive[i][j], alive[i + 1][j]);
            if (j + 1 < ny) v[i][j] = transfer(alive[i][j], alive[i][j + 1]);
        }
    }
    return GridModule(p, std::move(xs), std::move(ys), std::move(dims), std::move(h), std::move(v));
}

GridModule grid_from_intervals(const IntervalModule& m, std::uint32_t p) {
    return grid_from_intervals(DirectSumModule(m.dim(), {m}), p);
}

}  // namespace shiftdim
