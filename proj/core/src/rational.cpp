#include "shiftdim/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "shiftdim/errors.hpp"

namespace shiftdim {

namespace {

wide_int gcd128(wide_int a, wide_int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(wide_int x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(x);
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError("not a rational number: '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw InputError("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational Rational::from_wide(wide_int n, wide_int d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const wide_int g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        return Rational(parse_int(s.substr(0, slash), text), parse_int(s.substr(slash + 1), text));
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip.front() == '-';
        if (neg || (!ip.empty() && ip.front() == '+')) ip.remove_prefix(1);
        if (fp.size() > 17) throw InputError("too many decimal digits: '" + std::string(text) + "'");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        std::int64_t whole = ip.empty() ? 0 : parse_int(ip, text);
        std::int64_t frac = fp.empty() ? 0 : parse_int(fp, text);
        if (whole < 0 || frac < 0) throw InputError("not a rational number: '" + std::string(text) + "'");
        Rational r = Rational(whole) + Rational(frac, scale);
        return neg ? -r : r;
    }
    return Rational(parse_int(s, text));
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-static_cast<wide_int>(num_));
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) {
        *this = from_wide(static_cast<wide_int>(num_) + o.num_, den_);
    } else {
        *this = from_wide(static_cast<wide_int>(num_) * o.den_ + static_cast<wide_int>(o.num_) * den_,
                          static_cast<wide_int>(den_) * o.den_);
    }
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    *this = from_wide(static_cast<wide_int>(num_) * o.num_, static_cast<wide_int>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    *this = from_wide(static_cast<wide_int>(num_) * o.den_, static_cast<wide_int>(den_) * o.num_);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace shiftdim
