#ifndef NEVW_SCALAR_HPP
#define NEVW_SCALAR_HPP

#include <gmpxx.h>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include "nevw/errors.hpp"

namespace nevw {

/// Arbitrary-precision rational number in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1. All public constructors canonicalize;
/// arithmetic preserves the invariant.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(mpz_class(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw ParseError("Rational: zero denominator");
        v_ = mpq_class(mpz_class(num), mpz_class(den));
        v_.canonicalize();
    }

    /// Accepts "p", "p/q", and decimal literals like "-0.25" (converted
    /// exactly). Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_), raw_tag{}); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_), raw_tag{}); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_), raw_tag{}); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw PoleError("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_), raw_tag{});
    }
    Rational operator-() const { return Rational(mpq_class(-v_), raw_tag{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_)), raw_tag{}); }

private:
    struct raw_tag {};
    // Assumes v is already canonical (results of mpq arithmetic on canonical
    // operands stay canonical).
    Rational(mpq_class v, raw_tag) : v_(std::move(v)) {}

    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    // Trim surrounding whitespace, allow one leading '+'.
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) throw ParseError("Rational: empty literal");

    const std::string s(text);
    try {
        if (const auto slash = s.find('/'); slash != std::string::npos) {
            if (s.find('/', slash + 1) != std::string::npos || s.find('.') != std::string::npos)
                throw ParseError("Rational: malformed literal '" + s + "'");
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw ParseError("Rational: zero denominator in '" + s + "'");
            mpq_class q(num, den);
            q.canonicalize();
            return Rational(std::move(q), raw_tag{});
        }
        if (const auto dot = s.find('.'); dot != std::string::npos) {
            const bool neg = !s.empty() && s[0] == '-';
            std::string digits = s.substr(neg ? 1 : 0);
            const auto d = digits.find('.');
            std::string frac = digits.substr(d + 1);
            digits = digits.substr(0, d) + frac;
            if (digits.empty()) throw ParseError("Rational: malformed literal '" + s + "'");
            mpz_class num(digits);
            mpz_class den(1);
            for (size_t i = 0; i < frac.size(); ++i) den *= 10;
            if (neg) num = -num;
            mpq_class q(num, den);
            q.canonicalize();
            return Rational(std::move(q), raw_tag{});
        }
        return Rational(mpq_class(mpz_class(s)), raw_tag{});
    } catch (const std::invalid_argument&) {
        throw ParseError("Rational: malformed literal '" + s + "'");
    }
}

/// Shortest decimal representation that round-trips to the same double.
inline std::string double_str(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw Error("double_str: to_chars failed");
    return std::string(buf, p);
}

/// Per-mode scalar interface. A computation is instantiated once for S =
/// Rational (exact) or S = double (float); the two never mix.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational parse(std::string_view s) { return Rational::parse(s); }
    static std::string str(const Rational& v) { return v.str(); }
    static double to_double(const Rational& v) { return v.to_double(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double parse(std::string_view s) {
        // Accept both decimal literals and "p/q" (converted from exact).
        if (s.find('/') != std::string_view::npos) return Rational::parse(s).to_double();
        const std::string owned(s);
        char* end = nullptr;
        const double v = std::strtod(owned.c_str(), &end);
        if (end == owned.c_str() || *end != '\0') throw ParseError("double: malformed literal '" + owned + "'");
        return v;
    }
    static std::string str(double v) { return double_str(v); }
    static double to_double(double v) { return v; }
};

} // namespace nevw

#endif
