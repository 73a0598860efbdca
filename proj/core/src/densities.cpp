#include "shiftdim/densities.hpp"

#include <cmath>
#include <limits>

#include "shiftdim/errors.hpp"

namespace shiftdim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_box(const Density& d, const RealPoint& lo, const RealPoint& hi) {
    if (lo.size() != d.dim || hi.size() != d.dim) throw InputError("box dimension does not match the density");
}

/// Midpoint rule over [lo, hi] with n cells per axis.
double midpoint(const Density& d, const RealPoint& lo, const RealPoint& hi, std::size_t n) {
    const std::size_t r = d.dim;
    RealPoint h(r);
    double cell = 1.0;
    for (std::size_t i = 0; i < r; ++i) {
        h[i] = (hi[i] - lo[i]) / static_cast<double>(n);
        cell *= h[i];
    }
    if (cell == 0.0) return 0.0;
    std::vector<std::size_t> idx(r, 0);
    RealPoint y(r);
    double total = 0.0;
    while (true) {
        for (std::size_t i = 0; i < r; ++i) y[i] = lo[i] + (static_cast<double>(idx[i]) + 0.5) * h[i];
        const double v = d.f(y);
        if (v < 0.0) throw InputError("density '" + d.name + "' is negative at a sample point");
        total += v;
        std::size_t k = 0;
        while (k < r && ++idx[k] == n) idx[k++] = 0;
        if (k == r) break;
    }
    return total * cell;
}

}  // namespace

Density constant_density(std::size_t r, double c) {
    if (c < 0.0) throw InputError("constant density must be non-negative");
    Density d;
    d.name = "const";
    d.dim = r;
    d.f = [c](const RealPoint&) { return c; };
    d.box = [c](const RealPoint& lo, const RealPoint& hi) {
        double vol = 1.0;
        for (std::size_t i = 0; i < lo.size(); ++i) vol *= std::max(0.0, hi[i] - lo[i]);
        if (c == 0.0 || vol == 0.0) return 0.0;
        return c * vol;
    };
    return d;
}

Density exp_decay_density(std::vector<double> rates, double c) {
    if (c < 0.0) throw InputError("density scale must be non-negative");
    for (double l : rates) {
        if (l < 0.0) throw InputError("decay rates must be non-negative");
    }
    Density d;
    d.name = "exp_decay";
    d.dim = rates.size();
    d.f = [rates, c](const RealPoint& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < rates.size(); ++i) s += rates[i] * y[i];
        return c * std::exp(-s);
    };
    d.box = [rates, c](const RealPoint& lo, const RealPoint& hi) {
        double total = c;
        for (std::size_t i = 0; i < rates.size(); ++i) {
            const double a = lo[i];
            const double b = hi[i];
            if (!(b > a)) return 0.0;
            const double l = rates[i];
            double factor;
            if (l == 0.0) {
                factor = b - a;
            } else if (std::isinf(b)) {
                factor = std::exp(-l * a) / l;
            } else {
                factor = std::exp(-l * a) * -std::expm1(-l * (b - a)) / l;
            }
            total *= factor;
        }
        return c == 0.0 ? 0.0 : total;
    };
    return d;
}

Density gauss_density(std::vector<double> mu, std::vector<double> sigma, double c) {
    if (mu.size() != sigma.size()) throw InputError("gauss density needs one sigma per mean");
    if (c < 0.0) throw InputError("density scale must be non-negative");
    for (double s : sigma) {
        if (!(s > 0.0)) throw InputError("gauss sigma must be positive");
    }
    Density d;
    d.name = "gauss";
    d.dim = mu.size();
    d.f = [mu, sigma, c](const RealPoint& y) {
        double e = 0.0;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            const double z = (y[i] - mu[i]) / sigma[i];
            e += z * z;
        }
        return c * std::exp(-0.5 * e);
    };
    d.box = [mu, sigma, c](const RealPoint& lo, const RealPoint& hi) {
        double total = c;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            if (!(hi[i] > lo[i])) return 0.0;
            const double s = sigma[i] * std::sqrt(2.0);
            const double upper = std::isinf(hi[i]) ? 1.0 : std::erf((hi[i] - mu[i]) / s);
            // erfc keeps precision in the far tails.
            const double mass = std::isinf(hi[i]) ? std::erfc((lo[i] - mu[i]) / s) : upper - std::erf((lo[i] - mu[i]) / s);
            total *= sigma[i] * std::sqrt(M_PI / 2.0) * mass;
        }
        return total;
    };
    return d;
}

Density callback_density(std::size_t r, std::function<double(const RealPoint&)> f, std::string name) {
    Density d;
    d.name = std::move(name);
    d.dim = r;
    d.f = std::move(f);
    return d;
}

Integral box_integral(const Density& d, const RealPoint& lo, const RealPoint& hi, const QuadratureOptions& q) {
    check_box(d, lo, hi);
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (!(hi[i] > lo[i])) return {0.0, 0.0};
    }
    if (d.box) return {d.box(lo, hi), 0.0};

    RealPoint top = hi;
    bool truncated = false;
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (std::isinf(top[i])) {
            top[i] = lo[i] + q.truncation;
            truncated = true;
        }
    }
    const std::size_t n = std::size_t{1} << q.depth;
    const double fine = midpoint(d, lo, top, n);
    const double coarse = midpoint(d, lo, top, n / 2 ? n / 2 : 1);
    double tail = 0.0;
    if (truncated) {
        // Mass of the outermost eighth along each truncated axis, as a proxy for what was cut off.
        for (std::size_t i = 0; i < top.size(); ++i) {
            if (!std::isinf(hi[i])) continue;
            RealPoint slab_lo = lo;
            slab_lo[i] = top[i] - q.truncation / 8.0;
            tail += midpoint(d, slab_lo, top, std::max<std::size_t>(2, n / 8));
        }
    }
    return {fine, std::abs(fine - coarse) + tail};
}

Superadditive linear_shift(double a) {
    if (a < 0.0) throw InputError("linear shift slope must be non-negative");
    return {"linear", [a](double e) { return a * e; }};
}

Superadditive power_shift(double a, double k) {
    if (a < 0.0 || k < 1.0) throw InputError("power shift needs a >= 0 and k >= 1");
    return {"power", [a, k](double e) { return a * std::pow(e, k); }};
}

void check_superadditive(const Superadditive& m, double upto, double tol) {
    constexpr int kSteps = 16;
    for (int i = 0; i <= kSteps; ++i) {
        for (int j = 0; j <= kSteps; ++j) {
            const double a = upto * i / kSteps;
            const double b = upto * j / kSteps;
            const double ma = m.m(a);
            const double mb = m.m(b);
            if (ma < -tol || m.m(a + b) < ma + mb - tol * (1.0 + std::abs(ma + mb))) {
                throw InputError("shift function '" + m.name + "' is not super-additive and non-negative");
            }
        }
    }
}

}  // namespace shiftdim
