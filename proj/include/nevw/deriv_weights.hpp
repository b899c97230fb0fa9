#ifndef NEVW_DERIV_WEIGHTS_HPP
#define NEVW_DERIV_WEIGHTS_HPP

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "nevw/lagrange.hpp"
#include "nevw/ratfunc.hpp"
#include "nevw/weights.hpp"

namespace nevw {

/// Rational weight-functions representing the n-th derivative of the
/// interpolant on the full stencil as a combination of the n-th derivatives
/// of the substencil interpolants. pole_poly is the product of the reduced
/// denominators; its root set contains every actual pole (cancellation can
/// make it a strict superset of the poles and the poles a strict subset of
/// its roots' candidates).
template <class S>
struct DerivWeightFamily {
    Stencil<S> stencil;
    int k_level;
    int deriv_order;
    std::vector<RatFunc<S>> sigmas;
    Poly<S> pole_poly;
};

namespace detail {

/// 1-level derivative weights of the window nodes[a..b]: ratios of the n-th
/// derivative of the end-node fundamental on the window over the same on the
/// end-deleted subwindow,
///   sigma_{1,0} = alpha^(n)_{[a,b],a} / alpha^(n)_{[a,b-1],a}
///   sigma_{1,1} = alpha^(n)_{[a,b],b} / alpha^(n)_{[a+1,b],b}
template <class S>
std::array<RatFunc<S>, 2> deriv_aitken_pair(const std::vector<S>& nodes, int a, int b, int n) {
    Poly<S> full_left = fundamental_on_range(nodes, a, b, a).derivative(n);
    Poly<S> sub_left = fundamental_on_range(nodes, a, b - 1, a).derivative(n);
    Poly<S> full_right = fundamental_on_range(nodes, a, b, b).derivative(n);
    Poly<S> sub_right = fundamental_on_range(nodes, a + 1, b, b).derivative(n);
    return {RatFunc<S>(std::move(full_left), std::move(sub_left)),
            RatFunc<S>(std::move(full_right), std::move(sub_right))};
}

template <class S>
Poly<S> denominator_product(const std::vector<RatFunc<S>>& sigmas) {
    Poly<S> p = Poly<S>::one();
    for (const RatFunc<S>& s : sigmas) p *= s.den();
    return p;
}

} // namespace detail

/// The K_s = 1 derivative family. Requires M >= 2 and 0 <= n <= M-1 (beyond
/// that the substencil interpolant's n-th derivative vanishes identically).
template <class S>
DerivWeightFamily<S> deriv_one_level(const Stencil<S>& s, int n) {
    detail::check_k_level(s, 1);
    if (n < 0 || n > s.m() - 1)
        throw RangeError("deriv_one_level: derivative order " + std::to_string(n) + " outside [0, " +
                         std::to_string(s.m() - 1) + "]");
    auto pair = detail::deriv_aitken_pair(s.nodes(), 0, s.m(), n);
    std::vector<RatFunc<S>> sigmas{pair[0], pair[1]};
    Poly<S> pole = detail::denominator_product(sigmas);
    return DerivWeightFamily<S>{s, 1, n, std::move(sigmas), std::move(pole)};
}

/// K_s-level derivative family by the subdivision recurrence over rational
/// functions. Requires 1 <= K_s <= M-1 and 0 <= n <= M-K_s. Reduction happens
/// inside every RatFunc operation (exact mode), so cancellations of poles are
/// reflected in the stored denominators.
template <class S>
DerivWeightFamily<S> deriv_weights(const Stencil<S>& s, int k_level, int n) {
    detail::check_k_level(s, k_level);
    if (n < 0 || n > s.m() - k_level)
        throw RangeError("deriv_weights: derivative order " + std::to_string(n) + " outside [0, " +
                         std::to_string(s.m() - k_level) + "]");
    // The recurrence asks for the same window repeatedly; memoize.
    std::map<std::pair<int, int>, std::array<RatFunc<S>, 2>> cache;
    auto one_level = [&](int a, int b) -> const std::array<RatFunc<S>, 2>& {
        auto it = cache.find({a, b});
        if (it == cache.end())
            it = cache.emplace(std::make_pair(a, b), detail::deriv_aitken_pair(s.nodes(), a, b, n)).first;
        return it->second;
    };
    std::vector<RatFunc<S>> sigmas = subdivision_recurrence<RatFunc<S>>(s.m() + 1, k_level, one_level);
    Poly<S> pole = detail::denominator_product(sigmas);
    return DerivWeightFamily<S>{s, k_level, n, std::move(sigmas), std::move(pole)};
}

/// Product of the reduced denominators of the family's weights. Every actual
/// pole is a root of this polynomial.
template <class S>
Poly<S> pole_report(const DerivWeightFamily<S>& fam) {
    return detail::denominator_product(fam.sigmas);
}

/// Unreduced candidate pole polynomial, assembled straight from the
/// fundamental-function derivatives over the recursion tree: the product over
/// all intermediate windows of alpha^(n) of the window's right-deleted
/// neighbour at its right end. The family's pole set is contained in this
/// polynomial's root set.
template <class S>
Poly<S> pole_candidate_poly(const Stencil<S>& s, int k_level, int n) {
    detail::check_k_level(s, k_level);
    if (n < 0 || n > s.m() - k_level) throw RangeError("pole_candidate_poly: derivative order out of range");
    const int m = s.m();
    Poly<S> p = Poly<S>::one();
    for (int level = 0; level <= k_level - 1; ++level)
        for (int l = 0; l <= level; ++l)
            p *= fundamental_on_range(s.nodes(), l + 1, m - level + l, m - level + l).derivative(n);
    return p;
}

} // namespace nevw

#endif
