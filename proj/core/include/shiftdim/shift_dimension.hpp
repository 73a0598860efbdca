#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shiftdim/degree.hpp"
#include "shiftdim/interval_module.hpp"
#include "shiftdim/step_function.hpp"

namespace shiftdim {

struct ShiftDimResult {
    std::size_t dimension = 0;
    std::vector<Degree> basis;  ///< minimal generators forming a v-basis
    std::size_t iterations = 0;
};

enum class ClusterOrder { FromAbove, FromBelow };

/// dim_v of a bivariate interval module by clustering the generator staircase.
/// Linear in the number of generators and relations.
ShiftDimResult shift_dimension_2d(const IntervalModule& m, const Degree& v,
                                  ClusterOrder order = ClusterOrder::FromAbove);

/// Every tau >= 0 at which the value of dim_{tau v}(m) can change, sorted, starting with 0.
std::vector<Rational> critical_taus(const IntervalModule& m, const Degree& v);

/// tau -> dim_{tau v}(m) as a right-continuous step function.
StepFunction stable_rank_curve(const IntervalModule& m, const Degree& v);

/// Smallest subset of minimal generators that v-generates m, by enumerating
/// subsets in order of increasing size. Works for any r; exponential in beta0.
ShiftDimResult subset_oracle(const IntervalModule& m, const Degree& v);

/// True iff `basis` (any degrees in the support) v-generates m.
bool is_v_generating(const IntervalModule& m, const std::vector<Degree>& basis, const Degree& v);

}  // namespace shiftdim
