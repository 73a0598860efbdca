#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "shiftdim/contours.hpp"
#include "shiftdim/degree.hpp"
#include "shiftdim/grid_module.hpp"
#include "shiftdim/grid_oracle.hpp"
#include "shiftdim/interval_module.hpp"
#include "shiftdim/shift_dimension.hpp"
#include "shiftdim/step_function.hpp"

namespace shiftdim {

using json = nlohmann::json;

using AnyModule = std::variant<IntervalModule, DirectSumModule, GridModule>;

/// Integers, [num, den] pairs, "num/den" strings and decimal numbers.
Rational rational_from_json(const json& j);
/// Integers when the denominator is 1, otherwise [num, den].
json to_json(const Rational& q);

Degree degree_from_json(const json& j);
json to_json(const Degree& d);

IntervalModule interval_from_json(const json& j);
json to_json(const IntervalModule& m);
json to_json(const DirectSumModule& m);

/// dims[i][j] is the fiber at (xs[i], ys[j]). hmaps/vmaps are objects keyed
/// "i,j" holding row-major matrices for (i,j)->(i+1,j) and (i,j)->(i,j+1).
/// A missing map is zero if either fiber is zero and the identity if both
/// fibers have the same dimension; anything else must be given.
GridModule grid_from_json(const json& j);
json to_json(const GridModule& m);

AnyModule module_from_json(const json& j);
json to_json(const AnyModule& m);

json to_json(const ShiftDimResult& r);
json to_json(const OracleResult& r, const GridModule& m);

StepFunction step_function_from_json(const json& j);
json to_json(const StepFunction& f);
/// "tau,value" lines with a header.
std::string to_csv(const StepFunction& f);
/// Axis-aligned polyline plot; `tau_max` bounds the drawn range.
std::string to_svg(const StepFunction& f, double tau_max = 0.0, const std::string& title = "");

json to_json(const HalfOpenInterval& iv);

Density density_from_json(const json& j, std::size_t r);
ContourPtr contour_from_json(const json& j);
json to_json(const ContourResult& r);

/// Reads and parses a JSON file; throws InputError with the path on failure.
json read_json_file(const std::string& path);

}  // namespace shiftdim
