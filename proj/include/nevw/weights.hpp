#ifndef NEVW_WEIGHTS_HPP
#define NEVW_WEIGHTS_HPP

#include <array>
#include <utility>
#include <vector>

#include "nevw/lagrange.hpp"
#include "nevw/poly.hpp"
#include "nevw/stencil.hpp"

namespace nevw {

/// Generic K_s-level weight recurrence. Works for any family equipped with a
/// 1-level subdivision rule: level K weights are sums of products of level
/// K-1 weights of the full window with 1-level weights of the level-(K-1)
/// subwindows,
///
///   w[K][k] = sum_{l = max(0,k-1)}^{min(K-1,k)} w[K-1][l] * one_level(window(l, K-1))[k-l]
///
/// where window(l, L) spans node positions [l, M-L+l]. `one_level(a, b)` must
/// return the two 1-level weights of the window [a, b]. V needs +, * and copy;
/// the same engine drives polynomial weights, their varsigma coefficients and
/// the rational derivative weights. Returns levels[k] = level-(k+1) weights
/// for k in 0..k_level-1.
template <class V, class OneLevel>
std::vector<std::vector<V>> subdivision_recurrence_levels(int node_count, int k_level, OneLevel&& one_level) {
    const int m = node_count - 1;
    std::vector<std::vector<V>> levels;
    levels.reserve(static_cast<size_t>(k_level));
    {
        std::array<V, 2> base = one_level(0, m);
        levels.push_back({base[0], base[1]});
    }
    for (int level = 2; level <= k_level; ++level) {
        const std::vector<V>& prev = levels.back();
        std::vector<V> next;
        next.reserve(static_cast<size_t>(level) + 1);
        for (int k = 0; k <= level; ++k) {
            const int lo = std::max(0, k - 1);
            const int hi = std::min(level - 1, k);
            V acc = prev[static_cast<size_t>(lo)] * one_level(lo, m - (level - 1) + lo)[static_cast<size_t>(k - lo)];
            for (int l = lo + 1; l <= hi; ++l)
                acc = acc + prev[static_cast<size_t>(l)] * one_level(l, m - (level - 1) + l)[static_cast<size_t>(k - l)];
            next.push_back(std::move(acc));
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

/// Only the top level of the recurrence.
template <class V, class OneLevel>
std::vector<V> subdivision_recurrence(int node_count, int k_level, OneLevel&& one_level) {
    auto levels = subdivision_recurrence_levels<V>(node_count, k_level, std::forward<OneLevel>(one_level));
    return std::move(levels.back());
}

/// Weight-functions for one stencil and subdivision level: K_s+1 polynomials
/// sigma_{K_s,k_s} of degree K_s summing to 1, with their positive varsigma
/// coefficients (sigma_{k_s} = (-1)^{K_s-k_s} varsigma_{k_s} * product of
/// (x - x_n) over the nodes excluded from window k_s).
template <class S>
struct WeightFamily {
    Stencil<S> stencil;
    int k_level;
    std::vector<Poly<S>> sigmas;
    std::vector<S> varsigma;
};

namespace detail {

/// Aitken 1-level weights of the window nodes[a..b]:
/// sigma_{1,0} = (x_b - x) / (x_b - x_a), sigma_{1,1} = (x - x_a) / (x_b - x_a).
template <class S>
std::array<Poly<S>, 2> aitken_pair(const std::vector<S>& nodes, int a, int b) {
    const S& xa = nodes[static_cast<size_t>(a)];
    const S& xb = nodes[static_cast<size_t>(b)];
    const S inv = S(1) / (xb - xa);
    return {Poly<S>(std::vector<S>{xb * inv, -inv}), Poly<S>(std::vector<S>{-xa * inv, inv})};
}

template <class S>
void check_k_level(const Stencil<S>& s, int k_level) {
    if (s.m() < 2) throw RangeError("weights: stencil must have m_minus + m_plus >= 2");
    if (k_level < 1 || k_level > s.m() - 1)
        throw RangeError("weights: k_level " + std::to_string(k_level) + " outside [1, " +
                         std::to_string(s.m() - 1) + "]");
}

/// varsigma of a recurrence-built sigma, read off the leading coefficient:
/// lead(sigma_{K,k}) = (-1)^{K-k} varsigma_{K,k}.
template <class S>
std::vector<S> varsigma_from_leading(const std::vector<Poly<S>>& sigmas, int k_level) {
    std::vector<S> vs;
    vs.reserve(sigmas.size());
    for (size_t k = 0; k < sigmas.size(); ++k) {
        const S lead = sigmas[k].coeff(k_level);
        vs.push_back(((k_level - static_cast<int>(k)) % 2 == 0) ? lead : -lead);
    }
    return vs;
}

} // namespace detail

/// The K_s = 1 family: Aitken's lemma on the full stencil.
template <class S>
WeightFamily<S> one_level_weights(const Stencil<S>& s) {
    detail::check_k_level(s, 1);
    auto base = detail::aitken_pair(s.nodes(), 0, s.m());
    const S varsigma = S(1) / (s.node_at(s.m()) - s.node_at(0));
    return WeightFamily<S>{s, 1, {base[0], base[1]}, {varsigma, varsigma}};
}

/// Builds sigma_{K_s,k_s} by the product-sum recurrence over the 1-level
/// weights of the intermediate windows.
template <class S>
WeightFamily<S> weights_by_recurrence(const Stencil<S>& s, int k_level) {
    detail::check_k_level(s, k_level);
    std::vector<Poly<S>> sigmas = subdivision_recurrence<Poly<S>>(
        s.m() + 1, k_level, [&nodes = s.nodes()](int a, int b) { return detail::aitken_pair(nodes, a, b); });
    std::vector<S> vs = detail::varsigma_from_leading(sigmas, k_level);
    return WeightFamily<S>{s, k_level, std::move(sigmas), std::move(vs)};
}

/// All levels 1..max_k in one sweep of the recurrence.
template <class S>
std::vector<WeightFamily<S>> weights_by_recurrence_all(const Stencil<S>& s, int max_k) {
    detail::check_k_level(s, max_k);
    auto levels = subdivision_recurrence_levels<Poly<S>>(
        s.m() + 1, max_k, [&nodes = s.nodes()](int a, int b) { return detail::aitken_pair(nodes, a, b); });
    std::vector<WeightFamily<S>> out;
    out.reserve(levels.size());
    for (size_t i = 0; i < levels.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        std::vector<S> vs = detail::varsigma_from_leading(levels[i], k);
        out.push_back(WeightFamily<S>{s, k, std::move(levels[i]), std::move(vs)});
    }
    return out;
}

/// Builds the family from the closed form: the varsigma recurrence plus the
/// signed product over excluded nodes. Coefficient-identical to
/// weights_by_recurrence in exact mode.
template <class S>
WeightFamily<S> weights_explicit(const Stencil<S>& s, int k_level) {
    detail::check_k_level(s, k_level);
    const std::vector<S>& nodes = s.nodes();
    const int m = s.m();

    std::vector<S> vs = subdivision_recurrence<S>(m + 1, k_level, [&nodes](int a, int b) {
        const S v = S(1) / (nodes[static_cast<size_t>(b)] - nodes[static_cast<size_t>(a)]);
        return std::array<S, 2>{v, v};
    });

    std::vector<Poly<S>> sigmas;
    sigmas.reserve(static_cast<size_t>(k_level) + 1);
    for (int k = 0; k <= k_level; ++k) {
        std::vector<S> excluded;
        excluded.reserve(static_cast<size_t>(k_level));
        for (int j = 0; j < k; ++j) excluded.push_back(nodes[static_cast<size_t>(j)]);
        for (int j = m - k_level + k + 1; j <= m; ++j) excluded.push_back(nodes[static_cast<size_t>(j)]);
        const S sign = ((k_level - k) % 2 == 0) ? S(1) : S(-1);
        sigmas.push_back((sign * vs[static_cast<size_t>(k)]) * Poly<S>::from_roots(excluded));
    }
    return WeightFamily<S>{s, k_level, std::move(sigmas), std::move(vs)};
}

/// Offsets (relative to the origin) of the interval on which all weights lie
/// in [0, 1]: [-m_minus + k_level - 1, m_plus - k_level + 1].
inline std::pair<int, int> positivity_interval_offsets(int m_minus, int m_plus, int k_level) {
    return {-m_minus + k_level - 1, m_plus - k_level + 1};
}

/// Node values bounding the positivity interval. Requires
/// 1 <= k_level <= ceil(M/2); the weights exist beyond that bound but are not
/// guaranteed to stay in [0, 1] anywhere.
template <class S>
std::pair<S, S> positivity_interval(const Stencil<S>& s, int k_level) {
    detail::check_k_level(s, k_level);
    const int ceil_half_m = (s.m() + 1) / 2;
    if (k_level > ceil_half_m)
        throw RangeError("positivity_interval: k_level " + std::to_string(k_level) + " exceeds ceil(M/2) = " +
                         std::to_string(ceil_half_m));
    const auto [lo, hi] = positivity_interval_offsets(s.m_minus(), s.m_plus(), k_level);
    return {s.node(lo), s.node(hi)};
}

} // namespace nevw

#endif
