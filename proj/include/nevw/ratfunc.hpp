#ifndef NEVW_RATFUNC_HPP
#define NEVW_RATFUNC_HPP

#include <cmath>
#include <utility>

#include "nevw/poly.hpp"

namespace nevw {

/// Quotient of two polynomials. In exact mode the pair is kept fully reduced
/// (constant gcd) with a monic denominator; in float mode no reduction is
/// attempted and only the leading denominator coefficient is scaled to 1.
template <class S>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<S>::one()) {}
    explicit RatFunc(Poly<S> p) : num_(std::move(p)), den_(Poly<S>::one()) {}
    RatFunc(Poly<S> num, Poly<S> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw RangeError("RatFunc: zero denominator polynomial");
        normalize();
    }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Poly<S>::one()); }

    const Poly<S>& num() const { return num_; }
    const Poly<S>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// True when the denominator is a constant, i.e. the value is polynomial.
    bool is_polynomial() const { return den_.degree() == 0; }

    /// The underlying polynomial; requires a constant denominator.
    Poly<S> as_polynomial() const {
        if (!is_polynomial()) throw RangeError("RatFunc: denominator is not constant");
        return (S(1) / den_.coeff(0)) * num_;
    }

    S operator()(const S& x) const {
        const S d = den_(x);
        if constexpr (scalar_traits<S>::is_exact) {
            if (d == S(0)) throw PoleError("RatFunc: evaluation at a pole");
        } else {
            // Scale-aware threshold keeps near-pole evaluations from turning
            // into huge finite garbage.
            using std::abs;
            if (abs(d) < 1e-12 * (1.0 + den_.inf_norm())) throw PoleError("RatFunc: evaluation too close to a pole");
        }
        return num_(x) / d;
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if constexpr (scalar_traits<S>::is_exact) {
            // Cross-cancel before multiplying to keep intermediate degrees low.
            if (a.is_zero() || b.is_zero()) return RatFunc();
            const Poly<S> g1 = poly_gcd(a.num_, b.den_);
            const Poly<S> g2 = poly_gcd(b.num_, a.den_);
            return RatFunc(poly_div_exact(a.num_, g1) * poly_div_exact(b.num_, g2),
                           poly_div_exact(a.den_, g2) * poly_div_exact(b.den_, g1));
        } else {
            return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
        }
    }
    friend RatFunc operator*(const Poly<S>& p, const RatFunc& r) { return RatFunc(p) * r; }
    friend RatFunc operator*(const RatFunc& r, const Poly<S>& p) { return RatFunc(p) * r; }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        if constexpr (scalar_traits<S>::is_exact) {
            // Canonical form makes representation equality value equality.
            return a.num_ == b.num_ && a.den_ == b.den_;
        } else {
            return a.num_ * b.den_ == b.num_ * a.den_;
        }
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<S>::one();
            return;
        }
        if constexpr (scalar_traits<S>::is_exact) {
            if (den_.degree() > 0) {
                const Poly<S> g = poly_gcd(num_, den_);
                if (g.degree() > 0) {
                    num_ = poly_div_exact(num_, g);
                    den_ = poly_div_exact(den_, g);
                }
            }
        }
        const S lead = den_.leading();
        if (lead != S(1)) {
            const S inv = S(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly<S> num_, den_;
};

} // namespace nevw

#endif
