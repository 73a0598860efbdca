#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shiftdim/degree.hpp"
#include "shiftdim/grid_module.hpp"
#include "shiftdim/step_function.hpp"

namespace shiftdim {

/// Nonzero element of one fiber, normalized so its first nonzero entry is 1.
struct HomogeneousElement {
    GridPoint at;
    FpVec vector;
    friend bool operator==(const HomogeneousElement&, const HomogeneousElement&) = default;
};

/// Fiberwise subspaces, indexed like GridModule::index.
using SubmoduleFibers = std::vector<Subspace>;

/// Smallest submodule containing the given elements.
SubmoduleFibers submodule_closure(const GridModule& m, const std::vector<HomogeneousElement>& elements);

/// True iff w * M is contained in the submodule generated by `elements`.
bool is_v_annihilating(const GridModule& m, const std::vector<HomogeneousElement>& elements, const Degree& w);

struct OracleResult {
    std::optional<std::size_t> dimension;  ///< nullopt if the cap was reached
    std::vector<HomogeneousElement> witness;
    std::size_t nodes = 0;                 ///< search nodes visited
};

struct OracleOptions {
    /// Largest cardinality tried; defaults to beta0, which always suffices.
    std::optional<std::size_t> cap;
    /// Worker threads; 0 reads SHIFTDIM_THREADS and falls back to 1.
    unsigned threads = 0;
};

/// Exact dim_w by exhaustive search with iterative deepening on the cardinality.
OracleResult shift_dimension_bruteforce(const GridModule& m, const Degree& w, const OracleOptions& opts = {});

/// tau -> dim_{tau v}(M) evaluated at every tau where the shifted grid lookup changes.
StepFunction oracle_curve(const GridModule& m, const Degree& v, const OracleOptions& opts = {});

/// Thread count from SHIFTDIM_THREADS (at least 1).
unsigned configured_threads();

}  // namespace shiftdim
