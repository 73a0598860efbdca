#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shiftdim/densities.hpp"

namespace shiftdim {

/// A real point or the top element infinity (nullopt).
using ExtPoint = std::optional<RealPoint>;

struct ContourResult {
    ExtPoint value;
    double accuracy = 0.0;   ///< 0 for exact families
    std::string diagnostic;  ///< why the value is infinite, if it is
};

/// Evaluation contract (x, eps) -> C(x, eps). Implementations are immutable.
class Contour {
public:
    virtual ~Contour() = default;
    virtual std::size_t dim() const = 0;
    virtual std::string family() const = 0;
    /// Infinity maps to infinity; throws InputError for eps < 0.
    ContourResult eval(const ExtPoint& x, double eps) const;

protected:
    virtual ContourResult eval_finite(const RealPoint& x, double eps) const = 0;
};

using ContourPtr = std::shared_ptr<const Contour>;

/// C(x, eps) = x + eps v.
class StandardContour final : public Contour {
public:
    explicit StandardContour(RealPoint v);
    std::size_t dim() const override { return v_.size(); }
    std::string family() const override { return "standard"; }

protected:
    ContourResult eval_finite(const RealPoint& x, double eps) const override;

private:
    RealPoint v_;
};

/// Inner value, or infinity once it reaches alpha.
class TruncatedContour final : public Contour {
public:
    TruncatedContour(ContourPtr inner, RealPoint alpha);
    std::size_t dim() const override { return alpha_.size(); }
    std::string family() const override { return "truncated"; }

protected:
    ContourResult eval_finite(const RealPoint& x, double eps) const override;

private:
    ContourPtr inner_;
    RealPoint alpha_;
};

/// Travel eps along the translate of a monotone polyline that passes through x.
/// The polyline is parameterized by Euclidean arc length from its first vertex;
/// translates move along every axis except one.
class CurveContour final : public Contour {
public:
    CurveContour(std::vector<RealPoint> vertices, std::vector<std::size_t> translation_axes);
    std::size_t dim() const override { return r_; }
    std::string family() const override { return "curve"; }

    /// Point of the base polyline at arc length s (nullopt past the end).
    std::optional<RealPoint> at(double s) const;

protected:
    ContourResult eval_finite(const RealPoint& x, double eps) const override;

private:
    std::size_t r_ = 0;
    std::size_t free_axis_ = 0;
    std::vector<RealPoint> vertices_;
    std::vector<double> arc_;  ///< arc length at each vertex
};

struct DistanceOptions {
    double tol = 1e-12;          ///< bisection width on delta, relative to max(1, delta)
    QuadratureOptions quad{};    ///< used only for densities without a closed form
    double search_cap = 1e6;     ///< largest delta considered
};

/// C(x, eps) = x + delta v where the region between x and x + delta v carries mass eps.
/// The region is the L-shape {y >= x, not y >= x + delta v}; the rectangle
/// variant [x, x + delta v] exists to demonstrate that it breaks the lax action.
class DistanceTypeContour final : public Contour {
public:
    enum class Region { LShape, Rectangle };
    DistanceTypeContour(RealPoint v, Density f, DistanceOptions opts = {}, Region region = Region::LShape);
    std::size_t dim() const override { return v_.size(); }
    std::string family() const override { return region_ == Region::LShape ? "distance" : "distance_rectangle"; }

    /// Mass of the region for a given delta, with its quadrature error.
    Integral mass(const RealPoint& x, double delta) const;

protected:
    ContourResult eval_finite(const RealPoint& x, double eps) const override;

private:
    RealPoint v_;
    Density f_;
    DistanceOptions opts_;
    Region region_;
};

struct ComponentwiseOptions {
    double tol = 1e-13;
    double search_cap = 1e6;
    QuadratureOptions quad{};
};

/// Per axis i: y_i = inf { t : F_i(t) = x_i } with F_i(t) = int_0^t f_i, then C_i = F_i(y_i + m_i(eps)).
class ComponentwiseShiftContour final : public Contour {
public:
    ComponentwiseShiftContour(std::vector<Density> f, std::vector<Superadditive> m, ComponentwiseOptions opts = {});
    std::size_t dim() const override { return f_.size(); }
    std::string family() const override { return "componentwise"; }

protected:
    ContourResult eval_finite(const RealPoint& x, double eps) const override;

private:
    double cumulative(std::size_t i, double t) const;

    std::vector<Density> f_;
    std::vector<Superadditive> m_;
    ComponentwiseOptions opts_;
};

struct MultivariateOptions {
    std::size_t grid0 = 8;         ///< initial grid cells per axis on [0, search_cap]
    std::size_t refine_levels = 40;
    double search_cap = 100.0;
    QuadratureOptions quad{};
};

/// C(x, eps) = join(F(b(x) + eps v), x) with F_j(y) the f_j-mass of [0, y] and b(x)
/// the meet of B(x) = { y : F_j(y) >= x_j for all j }.
class MultivariateShiftContour final : public Contour {
public:
    MultivariateShiftContour(std::vector<Density> f, RealPoint v, MultivariateOptions opts = {});
    std::size_t dim() const override { return v_.size(); }
    std::string family() const override { return "multivariate"; }

    /// F(y).
    RealPoint masses(const RealPoint& y) const;
    /// Estimates of b(x) after each refinement level (level 0 first); empty if B(x) is empty.
    std::vector<RealPoint> meet_estimates(const RealPoint& x) const;

protected:
    ContourResult eval_finite(const RealPoint& x, double eps) const override;

private:
    bool in_b(const RealPoint& y, const RealPoint& x) const;

    std::vector<Density> f_;
    RealPoint v_;
    MultivariateOptions opts_;
};

struct AxiomSample {
    RealPoint x;
    RealPoint x2;  ///< x2 >= x
    double eps = 0.0;
    double eps2 = 0.0;  ///< eps2 >= eps
    double tau = 0.0;
};

struct AxiomReport {
    bool passed = true;
    std::size_t samples = 0;
    std::size_t failures = 0;
    /// Worst violation of (i) x <= C(x,e), (ii) C(C(x,e),t) <= C(x,e+t), (iii) monotonicity.
    double worst[3] = {0.0, 0.0, 0.0};
    std::string first_failure;
};

AxiomReport check_contour_axioms(const Contour& c, const std::vector<AxiomSample>& samples, double tol);

/// Uniform samples with x in [0, xmax]^r, eps and tau in [0, emax].
std::vector<AxiomSample> random_axiom_samples(std::size_t r, std::size_t n, std::uint64_t seed, double xmax,
                                              double emax);

}  // namespace shiftdim
