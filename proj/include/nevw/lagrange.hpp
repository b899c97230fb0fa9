#ifndef NEVW_LAGRANGE_HPP
#define NEVW_LAGRANGE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "nevw/poly.hpp"
#include "nevw/stencil.hpp"

namespace nevw {

/// Samples f(x_{i+ell}) on the offsets of some stencil. A sample table taken
/// on a stencil also covers every one of its substencils, because windows
/// keep the origin's offset labels.
template <class S>
class SampledFunction {
public:
    SampledFunction(int m_minus, std::vector<S> values) : m_minus_(m_minus), values_(std::move(values)) {}

    template <class F>
    static SampledFunction sample(const Stencil<S>& s, F&& f) {
        std::vector<S> v;
        v.reserve(s.nodes().size());
        for (const S& x : s.nodes()) v.push_back(f(x));
        return SampledFunction(s.m_minus(), std::move(v));
    }

    /// Samples of x^j.
    static SampledFunction of_monomial(const Stencil<S>& s, int j) {
        return sample(s, [j](const S& x) {
            S acc(1);
            for (int k = 0; k < j; ++k) acc = acc * x;
            return acc;
        });
    }

    int offset_lo() const { return -m_minus_; }
    int offset_hi() const { return -m_minus_ + static_cast<int>(values_.size()) - 1; }

    const S& at(int ell) const {
        if (ell < offset_lo() || ell > offset_hi())
            throw ArityError("SampledFunction: no sample at offset " + std::to_string(ell));
        return values_[static_cast<size_t>(ell + m_minus_)];
    }

    bool covers(const Stencil<S>& s) const {
        return s.offset_lo() >= offset_lo() && s.offset_hi() <= offset_hi();
    }

private:
    int m_minus_;
    std::vector<S> values_;
};

/// Cardinal polynomial for nodes[j] among the window nodes[a..b]:
/// prod_{k in [a,b], k != j} (x - nodes[k]) / (nodes[j] - nodes[k]).
template <class S>
Poly<S> fundamental_on_range(const std::vector<S>& nodes, int a, int b, int j) {
    std::vector<S> roots;
    roots.reserve(static_cast<size_t>(b - a));
    S denom(1);
    for (int k = a; k <= b; ++k) {
        if (k == j) continue;
        roots.push_back(nodes[static_cast<size_t>(k)]);
        denom *= nodes[static_cast<size_t>(j)] - nodes[static_cast<size_t>(k)];
    }
    return (S(1) / denom) * Poly<S>::from_roots(roots);
}

/// Fundamental function alpha_{i+ell}: degree-M polynomial equal to 1 at
/// x_{i+ell} and 0 at the other nodes of s.
template <class S>
Poly<S> fundamental(const Stencil<S>& s, int ell) {
    if (ell < s.offset_lo() || ell > s.offset_hi())
        throw RangeError("fundamental: offset outside the stencil");
    return fundamental_on_range(s.nodes(), 0, s.m(), ell + s.m_minus());
}

/// Lagrange interpolating polynomial of the samples on s, degree <= M.
template <class S>
Poly<S> interpolate(const Stencil<S>& s, const SampledFunction<S>& f) {
    if (!f.covers(s)) throw ArityError("interpolate: samples do not cover the stencil");
    Poly<S> p;
    for (int ell = s.offset_lo(); ell <= s.offset_hi(); ++ell)
        p += f.at(ell) * fundamental(s, ell);
    return p;
}

/// Neville's algorithm: evaluates the interpolant at x by recursive pairwise
/// combination, without forming coefficients.
template <class S>
S neville_eval(const Stencil<S>& s, const SampledFunction<S>& f, const S& x) {
    if (!f.covers(s)) throw ArityError("neville_eval: samples do not cover the stencil");
    const std::vector<S>& xs = s.nodes();
    std::vector<S> t;
    t.reserve(xs.size());
    for (int ell = s.offset_lo(); ell <= s.offset_hi(); ++ell) t.push_back(f.at(ell));
    const size_t n = xs.size();
    for (size_t len = 1; len < n; ++len)
        for (size_t j = 0; j + len < n; ++j)
            t[j] = ((x - xs[j]) * t[j + 1] - (x - xs[j + len]) * t[j]) / (xs[j + len] - xs[j]);
    return t[0];
}

/// n-th derivative of the interpolant: sum of alpha^{(n)}_{i+ell} f_{i+ell}.
template <class S>
Poly<S> interp_derivative(const Stencil<S>& s, const SampledFunction<S>& f, int n) {
    if (n < 0) throw RangeError("interp_derivative: negative order");
    if (!f.covers(s)) throw ArityError("interp_derivative: samples do not cover the stencil");
    Poly<S> p;
    for (int ell = s.offset_lo(); ell <= s.offset_hi(); ++ell)
        p += f.at(ell) * fundamental(s, ell).derivative(n);
    return p;
}

} // namespace nevw

#endif
