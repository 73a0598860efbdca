#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "shiftdim/rational.hpp"

namespace shiftdim {

/// Value in N together with infinity.
using StepValue = std::uint64_t;
inline constexpr StepValue kInfiniteValue = std::numeric_limits<StepValue>::max();

/// Right-continuous, non-increasing step function [0, inf) -> N u {inf}.
/// values[k] holds on [breakpoints[k], breakpoints[k+1]); the last value
/// holds on [breakpoints.back(), inf). Adjacent equal values are merged.
class StepFunction {
public:
    StepFunction() : StepFunction(std::vector<Rational>{Rational(0)}, {0}) {}
    StepFunction(std::vector<Rational> breakpoints, std::vector<StepValue> values);

    static StepFunction constant(StepValue v) { return StepFunction({Rational(0)}, {v}); }

    const std::vector<Rational>& breakpoints() const { return bp_; }
    const std::vector<StepValue>& values() const { return vals_; }

    StepValue at(const Rational& t) const;
    StepValue final_value() const { return vals_.back(); }

    std::string to_string() const;

    friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
    std::vector<Rational> bp_;
    std::vector<StepValue> vals_;
};

/// Half-open interval [lo, hi); hi == nullopt means unbounded.
struct HalfOpenInterval {
    Rational lo;
    std::optional<Rational> hi;
    friend bool operator==(const HalfOpenInterval&, const HalfOpenInterval&) = default;
};

/// Distance in a finite metric space; nullopt is infinity.
using Distance = std::optional<Rational>;

/// tau -> min { f(y) : d(x, y) <= tau } over a finite metric space.
StepFunction stabilize(const std::vector<std::vector<Distance>>& d, const std::vector<StepValue>& f,
                       std::size_t x);

/// inf { eps >= 0 : f(t+eps) <= g(t) and g(t+eps) <= f(t) for all t }; nullopt if no such eps.
std::optional<Rational> interleaving_distance(const StepFunction& f, const StepFunction& g);

StepFunction sum(const std::vector<StepFunction>& fs);

/// Exact integral of |f-g|^p for integer p >= 1; nullopt if infinite.
std::optional<Rational> lp_distance_pow(const StepFunction& f, const StepFunction& g, int p);

/// (integral of |f-g|^p)^(1/p) for real p >= 1; +inf if the integral diverges.
double lp_distance(const StepFunction& f, const StepFunction& g, double p);

/// Maximal half-open intervals where the sum of the summand curves differs from `sum_curve`.
std::vector<HalfOpenInterval> locus_nonadditivity(const std::vector<StepFunction>& summand_curves,
                                                  const StepFunction& sum_curve);

/// L^p distance between the summed summand curves and `sum_curve`.
/// Throws InvariantError if the summed curves fall below `sum_curve` anywhere.
double err_vp(const std::vector<StepFunction>& summand_curves, const StepFunction& sum_curve, double p);

}  // namespace shiftdim
