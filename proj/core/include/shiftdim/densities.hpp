#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace shiftdim {

using RealPoint = std::vector<double>;

/// Non-negative density on R^r. `box` integrates over [lo, hi] (entries of hi
/// may be +inf) in closed form; it is empty for user callbacks, which fall
/// back to midpoint quadrature.
struct Density {
    std::string name;
    std::size_t dim = 0;
    std::function<double(const RealPoint&)> f;
    std::function<double(const RealPoint& lo, const RealPoint& hi)> box;
};

/// f = c.
Density constant_density(std::size_t r, double c = 1.0);
/// f(y) = c * exp(-sum_i rates[i] * y_i); a zero rate means no decay along that axis.
Density exp_decay_density(std::vector<double> rates, double c = 1.0);
/// f(y) = c * prod_i exp(-(y_i - mu_i)^2 / (2 sigma_i^2)).
Density gauss_density(std::vector<double> mu, std::vector<double> sigma, double c = 1.0);
/// Callback without a closed-form integral.
Density callback_density(std::size_t r, std::function<double(const RealPoint&)> f, std::string name = "callback");

struct QuadratureOptions {
    /// Midpoint rule on 2^depth cells per axis.
    unsigned depth = 7;
    /// Unbounded sides are cut off this far beyond the lower corner.
    double truncation = 64.0;
};

struct Integral {
    double value = 0.0;
    double error = 0.0;  ///< 0 for closed forms; refinement delta plus tail estimate otherwise
};

/// Integral of f over the box [lo, hi]. Returns +inf for divergent closed forms.
/// Throws InputError if a negative density sample is seen.
Integral box_integral(const Density& d, const RealPoint& lo, const RealPoint& hi, const QuadratureOptions& q = {});

/// Non-negative super-additive function m with m(a+b) >= m(a) + m(b).
struct Superadditive {
    std::string name;
    std::function<double(double)> m;
};

/// m(e) = a * e.
Superadditive linear_shift(double a = 1.0);
/// m(e) = a * e^k with k >= 1.
Superadditive power_shift(double a, double k);

/// Samples m on a grid of pairs and throws InputError if super-additivity fails.
void check_superadditive(const Superadditive& m, double upto = 10.0, double tol = 1e-9);

}  // namespace shiftdim
