#ifndef NEVW_POLY_HPP
#define NEVW_POLY_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "nevw/scalar.hpp"

namespace nevw {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// Canonical form: no trailing zero coefficient; the zero polynomial is the
/// empty list and reports degree -1.
template <class S>
class Poly {
public:
    Poly() = default;
    explicit Poly(S constant) {
        c_.push_back(std::move(constant));
        strip();
    }
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(S(1)); }
    static Poly x() { return Poly(std::vector<S>{S(0), S(1)}); }

    /// Monic polynomial with the given roots.
    static Poly from_roots(std::span<const S> roots) {
        std::vector<S> c{S(1)};
        for (const S& r : roots) {
            c.push_back(S(0));
            for (size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
            c[0] = -r * c[0];
        }
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<S>& coeffs() const { return c_; }

    /// Coefficient of x^i; zero beyond the degree.
    S coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return S(0);
        return c_[static_cast<size_t>(i)];
    }

    S leading() const { return c_.empty() ? S(0) : c_.back(); }

    /// Horner evaluation.
    S operator()(const S& x) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// n-th derivative; the zero polynomial when n exceeds the degree.
    Poly derivative(int n = 1) const {
        Poly p = *this;
        for (int round = 0; round < n && !p.is_zero(); ++round) {
            std::vector<S> d;
            d.reserve(p.c_.size() > 0 ? p.c_.size() - 1 : 0);
            for (size_t i = 1; i < p.c_.size(); ++i) d.push_back(S(static_cast<long>(i)) * p.c_[i]);
            p = Poly(std::move(d));
        }
        return p;
    }

    Poly operator-() const {
        std::vector<S> c(c_);
        for (S& v : c) v = -v;
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const S& k, const Poly& p) {
        std::vector<S> c(p.c_);
        for (S& v : c) v = k * v;
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& p, const S& k) { return k * p; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Scaled to unit leading coefficient; the zero polynomial stays zero.
    Poly monic() const {
        if (is_zero()) return *this;
        const S inv = S(1) / c_.back();
        return inv * *this;
    }

    /// Largest |coefficient| (as double in float mode, exact in exact mode).
    S inf_norm() const {
        using std::abs;
        S m(0);
        for (const S& v : c_)
            if (abs(v) > m) m = abs(v);
        return m;
    }

private:
    void strip() {
        while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
    }

    std::vector<S> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Exact mode only.
template <class S>
std::pair<Poly<S>, Poly<S>> poly_divmod(const Poly<S>& a, const Poly<S>& b) {
    static_assert(scalar_traits<S>::is_exact, "polynomial division is exact-mode only");
    if (b.is_zero()) throw RangeError("poly_divmod: division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly<S>(), a};
    std::vector<S> rem(a.coeffs());
    std::vector<S> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, S(0));
    const S lead_inv = S(1) / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const S q = rem[static_cast<size_t>(k + b.degree())] * lead_inv;
        quot[static_cast<size_t>(k)] = q;
        if (q == S(0)) continue;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= q * b.coeff(i);
    }
    return {Poly<S>(std::move(quot)), Poly<S>(std::move(rem))};
}

/// Exact quotient; throws if the division leaves a remainder.
template <class S>
Poly<S> poly_div_exact(const Poly<S>& a, const Poly<S>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw RangeError("poly_div_exact: division is not exact");
    return q;
}

/// Monic greatest common divisor by the Euclidean algorithm over the
/// rationals. Exact mode only (float-mode GCD is numerically ill-posed and is
/// rejected at compile time). Errors when both inputs are zero.
template <class S>
Poly<S> poly_gcd(Poly<S> a, Poly<S> b) {
    static_assert(scalar_traits<S>::is_exact, "poly_gcd is exact-mode only");
    if (a.is_zero() && b.is_zero()) throw RangeError("poly_gcd: gcd(0, 0) is undefined");
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly<S> r = poly_divmod(a, b).second;
        a = std::move(b);
        b = r.monic(); // rescaling each remainder keeps coefficient heights down
    }
    return a;
}

} // namespace nevw

#endif
