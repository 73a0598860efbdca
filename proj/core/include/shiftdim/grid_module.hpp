#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "shiftdim/fp_linalg.hpp"
#include "shiftdim/interval_module.hpp"
#include "shiftdim/rational.hpp"

namespace shiftdim {

/// Index of a grid point: column i (x coordinate xs[i]) and row j (y coordinate ys[j]).
struct GridPoint {
    std::size_t i = 0;
    std::size_t j = 0;
    bool leq(const GridPoint& o) const { return i <= o.i && j <= o.j; }
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Finitely presented two-parameter module over F_p given on a finite grid.
///
/// The module at a real degree d is the fiber at the largest grid point <= d,
/// zero if there is none. Beyond the last column and row the module is
/// constant, so maps out of the grid are identities.
class GridModule {
public:
    GridModule() : field_(2) {}

    /// hmaps[i][j] maps (i,j) -> (i+1,j) and vmaps[i][j] maps (i,j) -> (i,j+1); each
    /// has shape dims of target x dims of source. Entries are reduced mod p.
    /// Throws InputError on non-increasing coordinates, shape mismatches or
    /// non-commuting squares.
    GridModule(std::uint32_t p, std::vector<Rational> xs, std::vector<Rational> ys,
               std::vector<std::vector<std::size_t>> dims, std::vector<std::vector<FpMatrix>> hmaps,
               std::vector<std::vector<FpMatrix>> vmaps);

    static GridModule zero(std::uint32_t p = 2);

    const PrimeField& field() const { return field_; }
    std::uint32_t p() const { return field_.p(); }
    const std::vector<Rational>& xs() const { return xs_; }
    const std::vector<Rational>& ys() const { return ys_; }
    std::size_t nx() const { return xs_.size(); }
    std::size_t ny() const { return ys_.size(); }
    std::size_t npoints() const { return xs_.size() * ys_.size(); }
    std::size_t index(const GridPoint& g) const { return g.i + nx() * g.j; }
    GridPoint point(std::size_t idx) const { return {idx % nx(), idx / nx()}; }

    std::size_t fiber_dim(const GridPoint& g) const { return dims_[g.i][g.j]; }
    const FpMatrix& hmap(const GridPoint& g) const { return hmaps_[g.i][g.j]; }
    const FpMatrix& vmap(const GridPoint& g) const { return vmaps_[g.i][g.j]; }
    const std::vector<std::vector<std::size_t>>& dims() const { return dims_; }
    const std::vector<std::vector<FpMatrix>>& hmaps() const { return hmaps_; }
    const std::vector<std::vector<FpMatrix>>& vmaps() const { return vmaps_; }

    /// Structure map M_a -> M_b for a <= b (horizontal steps first).
    FpMatrix map_between(const GridPoint& a, const GridPoint& b) const;

    /// Grid point reached from g by the shift (wx, wy), clamped to the last row and column.
    GridPoint shifted(const GridPoint& g, const Rational& wx, const Rational& wy) const;

    /// Sum of the images of the incoming horizontal and vertical maps at g.
    Subspace incoming_image(const GridPoint& g) const;

private:
    PrimeField field_;
    std::vector<Rational> xs_;
    std::vector<Rational> ys_;
    std::vector<std::vector<std::size_t>> dims_;
    std::vector<std::vector<FpMatrix>> hmaps_;
    std::vector<std::vector<FpMatrix>> vmaps_;
};

/// Sum over grid points of dim(M_d / incoming images).
std::size_t beta0_grid(const GridModule& m);

/// The same module presented on a finer grid. `xs` and `ys` must contain the
/// current coordinates; new coordinates copy the fiber of the grid point below.
GridModule regrid(const GridModule& m, std::vector<Rational> xs, std::vector<Rational> ys);

GridModule direct_sum(const GridModule& a, const GridModule& b);

/// Discretizes a direct sum of bivariate interval modules onto the grid of
/// their critical coordinates, one F_p coordinate per summand containing the point.
GridModule grid_from_intervals(const DirectSumModule& summands, std::uint32_t p = 2);
GridModule grid_from_intervals(const IntervalModule& m, std::uint32_t p = 2);

}  // namespace shiftdim
