#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiftdim/rational.hpp"

namespace shiftdim {

/// A point of the parameter poset: r non-negative rationals, ordered componentwise.
class Degree {
public:
    Degree() = default;
    explicit Degree(std::vector<Rational> coords);
    Degree(std::initializer_list<Rational> coords);

    /// Degree with `r` zero coordinates.
    static Degree zero(std::size_t r);

    /// Parses "3/2,1" style comma-separated coordinates.
    static Degree parse(std::string_view text);

    std::size_t dim() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;

    /// Componentwise order; dimensions must agree.
    bool leq(const Degree& o) const;
    /// Neither leq nor geq.
    bool incomparable(const Degree& o) const { return !leq(o) && !o.leq(*this); }

    Degree operator+(const Degree& o) const;
    /// Scales every coordinate by a non-negative factor.
    Degree scaled(const Rational& t) const;

    std::string to_string() const;

    friend bool operator==(const Degree&, const Degree&) = default;
    /// Lexicographic order, used only for canonical sorting.

private:
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Degree& d);

Degree meet(const Degree& a, const Degree& b);
Degree join(const Degree& a, const Degree& b);

/// Lexicographic order on coordinates; used to sort staircases.
inline bool lex_less(const Degree& a, const Degree& b) { return a.coords() < b.coords(); }

/// Throws InputError unless both degrees have the same dimension.
void require_same_dim(const Degree& a, const Degree& b, const char* what);

/// A Degree or the top element Infinity, which dominates every point.
class ExtendedDegree {
public:
    ExtendedDegree() = default;  // Infinity
    ExtendedDegree(Degree d) : d_(std::move(d)) {}  // NOLINT(google-explicit-constructor)

    static ExtendedDegree infinity() { return {}; }

    bool is_infinite() const { return !d_.has_value(); }
    const Degree& degree() const { return *d_; }

    bool leq(const ExtendedDegree& o) const;
    ExtendedDegree operator+(const Degree& v) const;

    friend bool operator==(const ExtendedDegree&, const ExtendedDegree&) = default;

private:
    std::optional<Degree> d_;
};

}  // namespace shiftdim
