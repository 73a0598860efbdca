#include "shiftdim/degree.hpp"

#include <algorithm>
#include <ostream>

#include "shiftdim/errors.hpp"

namespace shiftdim {

namespace {

void check_nonnegative(const std::vector<Rational>& c) {
    for (const auto& q : c) {
        if (q < Rational(0)) throw InputError("degree coordinates must be non-negative");
    }
}

}  // namespace

Degree::Degree(std::vector<Rational> coords) : c_(std::move(coords)) { check_nonnegative(c_); }

Degree::Degree(std::initializer_list<Rational> coords) : c_(coords) { check_nonnegative(c_); }

Degree Degree::zero(std::size_t r) { return Degree(std::vector<Rational>(r, Rational(0))); }

Degree Degree::parse(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(Rational::parse(text.substr(start, comma - start)));
        start = comma + 1;
    }
    if (out.empty()) throw InputError("empty degree");
    return Degree(std::move(out));
}

bool Degree::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == Rational(0); });
}

bool Degree::leq(const Degree& o) const {
    require_same_dim(*this, o, "comparison");
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (o.c_[i] < c_[i]) return false;
    }
    return true;
}

Degree Degree::operator+(const Degree& o) const {
    require_same_dim(*this, o, "addition");
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] + o.c_[i];
    Degree d;
    d.c_ = std::move(out);
    return d;
}

Degree Degree::scaled(const Rational& t) const {
    if (t < Rational(0)) throw InputError("negative scale factor");
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * t;
    Degree d;
    d.c_ = std::move(out);
    return d;
}

std::string Degree::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].to_string();
    }
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.to_string(); }

void require_same_dim(const Degree& a, const Degree& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw InputError(std::string("dimension mismatch in ") + what + ": " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
    }
}

Degree meet(const Degree& a, const Degree& b) {
    require_same_dim(a, b, "meet");
    std::vector<Rational> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::min(a[i], b[i]);
    return Degree(std::move(out));
}

Degree join(const Degree& a, const Degree& b) {
    require_same_dim(a, b, "join");
    std::vector<Rational> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::max(a[i], b[i]);
    return Degree(std::move(out));
}

bool ExtendedDegree::leq(const ExtendedDegree& o) const {
    if (o.is_infinite()) return true;
    if (is_infinite()) return false;
    return d_->leq(*o.d_);
}

ExtendedDegree ExtendedDegree::operator+(const Degree& v) const {
    if (is_infinite()) return {};
    return ExtendedDegree(*d_ + v);
}

}  // namespace shiftdim
