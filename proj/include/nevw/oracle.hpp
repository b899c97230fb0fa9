#ifndef NEVW_ORACLE_HPP
#define NEVW_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nevw/deriv_weights.hpp"
#include "nevw/lagrange.hpp"
#include "nevw/weights.hpp"

namespace nevw {

// ---------------------------------------------------------------------------
// Random inputs for verification trials.
// ---------------------------------------------------------------------------

inline long rand_long(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random rational with small numerator/denominator height.
inline Rational random_rational(std::mt19937_64& rng, long max_num = 24, long max_den = 4) {
    return Rational(rand_long(rng, -max_num, max_num), rand_long(rng, 1, max_den));
}

namespace detail {

/// Strictly increasing node set built from positive random gaps; the minimum
/// gap of 1/4 keeps float-mode instantiations well separated.
inline std::vector<Rational> random_node_values(std::mt19937_64& rng, int count) {
    std::vector<Rational> nodes;
    nodes.reserve(static_cast<size_t>(count));
    Rational x(rand_long(rng, -24, 24), rand_long(rng, 1, 4));
    nodes.push_back(x);
    for (int j = 1; j < count; ++j) {
        x += Rational(rand_long(rng, 1, 12), rand_long(rng, 1, 4));
        nodes.push_back(x);
    }
    return nodes;
}

template <class S>
std::vector<S> to_scalar_nodes(const std::vector<Rational>& values) {
    std::vector<S> out;
    out.reserve(values.size());
    for (const Rational& v : values) {
        if constexpr (scalar_traits<S>::is_exact)
            out.push_back(v);
        else
            out.push_back(v.to_double());
    }
    return out;
}

} // namespace detail

template <class S>
Stencil<S> random_stencil(std::mt19937_64& rng, int m_minus, int m_plus) {
    return Stencil<S>(m_minus, m_plus,
                      detail::to_scalar_nodes<S>(detail::random_node_values(rng, m_minus + m_plus + 1)));
}

/// Random rational around (and a little beyond) the stencil hull.
template <class S>
S random_point_near(std::mt19937_64& rng, const Stencil<S>& s) {
    const Rational t(rand_long(rng, -2, 10), 8);
    if constexpr (scalar_traits<S>::is_exact) {
        return s.node_at(0) + t * (s.node_at(s.m()) - s.node_at(0));
    } else {
        return s.node_at(0) + t.to_double() * (s.node_at(s.m()) - s.node_at(0));
    }
}

// ---------------------------------------------------------------------------
// Discrepancy measures. All return the maximum scaled difference
// |a - b| / (1 + |a| + |b|); exact computations yield exactly zero.
// ---------------------------------------------------------------------------

template <class S>
S scaled_diff(const S& a, const S& b) {
    using std::abs;
    return abs(a - b) / (S(1) + abs(a) + abs(b));
}

template <class S>
S poly_max_diff(const Poly<S>& a, const Poly<S>& b) {
    S m(0);
    const int d = std::max(a.degree(), b.degree());
    for (int i = 0; i <= d; ++i) {
        const S v = scaled_diff(a.coeff(i), b.coeff(i));
        if (v > m) m = v;
    }
    return m;
}

/// sum_k sigma_k == 1 as polynomials.
template <class S>
S weights_consistency_discrepancy(const WeightFamily<S>& fam) {
    Poly<S> sum;
    for (const Poly<S>& sigma : fam.sigmas) sum += sigma;
    return poly_max_diff(sum, Poly<S>::one());
}

/// Full-stencil interpolant == weighted substencil interpolants, for every
/// monomial f = x^j, j <= M.
template <class S>
S weights_representation_discrepancy(const WeightFamily<S>& fam) {
    const Stencil<S>& s = fam.stencil;
    S worst(0);
    for (int j = 0; j <= s.m(); ++j) {
        const SampledFunction<S> f = SampledFunction<S>::of_monomial(s, j);
        const Poly<S> full = interpolate(s, f);
        Poly<S> combined;
        for (int k = 0; k <= fam.k_level; ++k)
            combined += fam.sigmas[static_cast<size_t>(k)] * interpolate(s.substencil({fam.k_level, k}), f);
        const S v = poly_max_diff(full, combined);
        if (v > worst) worst = v;
    }
    return worst;
}

/// Two families built by different routes must agree coefficient-wise.
template <class S>
S family_max_diff(const WeightFamily<S>& a, const WeightFamily<S>& b) {
    S worst(0);
    for (size_t k = 0; k < a.sigmas.size(); ++k) {
        S v = poly_max_diff(a.sigmas[k], b.sigmas[k]);
        if (v > worst) worst = v;
        v = scaled_diff(a.varsigma[k], b.varsigma[k]);
        if (v > worst) worst = v;
    }
    return worst;
}

/// sum_k sigma_k == 1 as rational functions (numerator equals denominator).
template <class S>
S deriv_consistency_discrepancy(const DerivWeightFamily<S>& fam) {
    RatFunc<S> sum;
    for (const RatFunc<S>& sigma : fam.sigmas) sum += sigma;
    return poly_max_diff(sum.num(), sum.den());
}

/// Denominator-cleared representation identity: with D = prod den_k,
///   sum_k num_k * (prod_{j != k} den_j) * p_sub_k^(n) == D * p_full^(n)
/// as exact polynomials, for every monomial f = x^j, j <= M.
template <class S>
S deriv_representation_symbolic_discrepancy(const DerivWeightFamily<S>& fam) {
    const Stencil<S>& s = fam.stencil;
    const int kl = fam.k_level;
    const size_t count = fam.sigmas.size();
    std::vector<Poly<S>> cofactor(count, Poly<S>::one());
    Poly<S> denom_product = Poly<S>::one();
    for (size_t k = 0; k < count; ++k) {
        for (size_t j = 0; j < count; ++j)
            if (j != k) cofactor[k] *= fam.sigmas[j].den();
        denom_product *= fam.sigmas[k].den();
    }
    S worst(0);
    for (int j = 0; j <= s.m(); ++j) {
        const SampledFunction<S> f = SampledFunction<S>::of_monomial(s, j);
        const Poly<S> rhs = denom_product * interp_derivative(s, f, fam.deriv_order);
        Poly<S> lhs;
        for (size_t k = 0; k < count; ++k)
            lhs += fam.sigmas[k].num() * cofactor[k] *
                   interp_derivative(s.substencil({kl, static_cast<int>(k)}), f, fam.deriv_order);
        const S v = poly_max_diff(lhs, rhs);
        if (v > worst) worst = v;
    }
    return worst;
}

/// Pointwise representation check at a sample point away from the poles.
template <class S>
S deriv_representation_pointwise_discrepancy(const DerivWeightFamily<S>& fam, const S& x) {
    const Stencil<S>& s = fam.stencil;
    S worst(0);
    for (int j = 0; j <= s.m(); ++j) {
        const SampledFunction<S> f = SampledFunction<S>::of_monomial(s, j);
        const S rhs = interp_derivative(s, f, fam.deriv_order)(x);
        S lhs(0);
        for (size_t k = 0; k < fam.sigmas.size(); ++k)
            lhs += fam.sigmas[k](x) *
                   interp_derivative(s.substencil({fam.k_level, static_cast<int>(k)}), f, fam.deriv_order)(x);
        const S v = scaled_diff(lhs, rhs);
        if (v > worst) worst = v;
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Pointwise weight values by an independent linear-system solve.
// ---------------------------------------------------------------------------

template <class S>
struct LinearWeightSolve {
    std::vector<S> weights;     // w_{k_s}, k_s = 0..K_s
    std::vector<int> used_rows; // node indices of the selected rows (exact mode)
    S max_unused_residual;      // scaled residual of the remaining rows
};

/// Solves for the weight values at x from the nodal-basis representation
/// equations: one row per stencil node j,
///   sum_k w_k * alpha^(n)_{sub_k, j}(x) = alpha^(n)_{full, j}(x)
/// (a node absent from sub_k contributes a zero entry). The system is
/// overdetermined but consistent; exact mode selects the first K_s+1
/// independent rows scanning top-down and asserts the rest are satisfied
/// exactly, float mode solves least squares and checks residuals against a
/// relative 1e-10 tolerance.
template <class S>
LinearWeightSolve<S> weights_via_linear_system(const Stencil<S>& s, int k_level, int n, const S& x) {
    detail::check_k_level(s, k_level);
    const int m = s.m();
    if (n < 0 || n > m - k_level)
        throw RangeError("weights_via_linear_system: derivative order out of range");
    if (n > 0) {
        const S candidate = pole_candidate_poly(s, k_level, n)(x);
        bool at_pole;
        if constexpr (scalar_traits<S>::is_exact) {
            at_pole = (candidate == S(0));
        } else {
            using std::abs;
            at_pole = abs(candidate) < 1e-12;
        }
        if (at_pole) throw PoleError("weights_via_linear_system: x lies in the candidate pole set");
    }

    const int w = k_level + 1;
    std::vector<std::vector<S>> rows(static_cast<size_t>(m) + 1, std::vector<S>(static_cast<size_t>(w) + 1, S(0)));
    for (int j = 0; j <= m; ++j) {
        for (int k = 0; k <= k_level; ++k)
            if (j >= k && j <= k + (m - k_level))
                rows[static_cast<size_t>(j)][static_cast<size_t>(k)] =
                    fundamental_on_range(s.nodes(), k, m - k_level + k, j).derivative(n)(x);
        rows[static_cast<size_t>(j)][static_cast<size_t>(w)] =
            fundamental_on_range(s.nodes(), 0, m, j).derivative(n)(x);
    }

    if constexpr (scalar_traits<S>::is_exact) {
        // Greedy Gauss-Jordan over the rows in ascending node order.
        std::vector<std::vector<S>> basis;
        std::vector<int> pivots;
        std::vector<int> used;
        for (int j = 0; j <= m && static_cast<int>(basis.size()) < w; ++j) {
            std::vector<S> r = rows[static_cast<size_t>(j)];
            for (size_t bi = 0; bi < basis.size(); ++bi) {
                const S f = r[static_cast<size_t>(pivots[bi])];
                if (f != S(0))
                    for (int c = 0; c <= w; ++c) r[static_cast<size_t>(c)] -= f * basis[bi][static_cast<size_t>(c)];
            }
            int pc = -1;
            for (int c = 0; c < w; ++c)
                if (r[static_cast<size_t>(c)] != S(0)) {
                    pc = c;
                    break;
                }
            if (pc < 0) {
                if (r[static_cast<size_t>(w)] != S(0))
                    throw InconsistentSystemError("weights_via_linear_system: inconsistent row during elimination");
                continue;
            }
            const S inv = S(1) / r[static_cast<size_t>(pc)];
            for (int c = 0; c <= w; ++c) r[static_cast<size_t>(c)] = r[static_cast<size_t>(c)] * inv;
            for (size_t bi = 0; bi < basis.size(); ++bi) {
                const S f = basis[bi][static_cast<size_t>(pc)];
                if (f != S(0))
                    for (int c = 0; c <= w; ++c) basis[bi][static_cast<size_t>(c)] -= f * r[static_cast<size_t>(c)];
            }
            basis.push_back(std::move(r));
            pivots.push_back(pc);
            used.push_back(j);
        }
        if (static_cast<int>(basis.size()) < w)
            throw SingularSystemError("weights_via_linear_system: selected rows are rank-deficient; resample x");
        std::vector<S> sol(static_cast<size_t>(w), S(0));
        for (size_t bi = 0; bi < basis.size(); ++bi)
            sol[static_cast<size_t>(pivots[bi])] = basis[bi][static_cast<size_t>(w)];

        S max_res(0);
        for (int j = 0; j <= m; ++j) {
            if (std::find(used.begin(), used.end(), j) != used.end()) continue;
            S acc(0);
            for (int k = 0; k < w; ++k) acc += rows[static_cast<size_t>(j)][static_cast<size_t>(k)] * sol[static_cast<size_t>(k)];
            const S res = scaled_diff(acc, rows[static_cast<size_t>(j)][static_cast<size_t>(w)]);
            if (res > max_res) max_res = res;
        }
        if (max_res != S(0))
            throw InconsistentSystemError("weights_via_linear_system: unused row not satisfied by the solution");
        return {std::move(sol), std::move(used), std::move(max_res)};
    } else {
        // Least squares via the normal equations; the system is tiny.
        std::vector<std::vector<S>> g(static_cast<size_t>(w), std::vector<S>(static_cast<size_t>(w) + 1, S(0)));
        for (int a = 0; a < w; ++a) {
            for (int b = 0; b <= w; ++b) {
                S acc(0);
                for (int j = 0; j <= m; ++j)
                    acc += rows[static_cast<size_t>(j)][static_cast<size_t>(a)] * rows[static_cast<size_t>(j)][static_cast<size_t>(b)];
                g[static_cast<size_t>(a)][static_cast<size_t>(b)] = acc;
            }
        }
        for (int col = 0; col < w; ++col) {
            int piv = col;
            for (int r2 = col + 1; r2 < w; ++r2)
                if (std::abs(g[static_cast<size_t>(r2)][static_cast<size_t>(col)]) >
                    std::abs(g[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
                    piv = r2;
            std::swap(g[static_cast<size_t>(col)], g[static_cast<size_t>(piv)]);
            if (std::abs(g[static_cast<size_t>(col)][static_cast<size_t>(col)]) < 1e-300)
                throw SingularSystemError("weights_via_linear_system: normal equations singular");
            for (int r2 = 0; r2 < w; ++r2) {
                if (r2 == col) continue;
                const S f = g[static_cast<size_t>(r2)][static_cast<size_t>(col)] / g[static_cast<size_t>(col)][static_cast<size_t>(col)];
                for (int c = col; c <= w; ++c)
                    g[static_cast<size_t>(r2)][static_cast<size_t>(c)] -= f * g[static_cast<size_t>(col)][static_cast<size_t>(c)];
            }
        }
        std::vector<S> sol(static_cast<size_t>(w));
        for (int k = 0; k < w; ++k)
            sol[static_cast<size_t>(k)] = g[static_cast<size_t>(k)][static_cast<size_t>(w)] / g[static_cast<size_t>(k)][static_cast<size_t>(k)];
        S max_res(0);
        for (int j = 0; j <= m; ++j) {
            S acc(0);
            for (int k = 0; k < w; ++k) acc += rows[static_cast<size_t>(j)][static_cast<size_t>(k)] * sol[static_cast<size_t>(k)];
            const S res = scaled_diff(acc, rows[static_cast<size_t>(j)][static_cast<size_t>(w)]);
            if (res > max_res) max_res = res;
        }
        if (max_res > 1e-10)
            throw InconsistentSystemError("weights_via_linear_system: residual above float tolerance");
        return {std::move(sol), {}, std::move(max_res)};
    }
}

// ---------------------------------------------------------------------------
// Aggregated verification.
// ---------------------------------------------------------------------------

struct VerificationReport {
    std::string case_desc;
    bool pass = false;
    std::string max_discrepancy;
    std::string detail;
};

namespace detail {

template <class S>
constexpr double verify_tolerance() {
    return scalar_traits<S>::is_exact ? 0.0 : 1e-10;
}

template <class S>
bool within_tolerance(const S& discrepancy) {
    if constexpr (scalar_traits<S>::is_exact)
        return discrepancy == S(0);
    else
        return discrepancy <= verify_tolerance<S>();
}

/// Draws sample points until the oracle accepts one (pole or singular-row
/// rejections are resampled, as both occur on measure-zero sets).
template <class S>
S oracle_pointwise_discrepancy(std::mt19937_64& rng, const Stencil<S>& s, int k_level, int n,
                               const std::vector<RatFunc<S>>& sigmas) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const S x = random_point_near(rng, s);
        try {
            const LinearWeightSolve<S> solved = weights_via_linear_system(s, k_level, n, x);
            S worst = solved.max_unused_residual;
            for (size_t k = 0; k < sigmas.size(); ++k) {
                const S v = scaled_diff(sigmas[k](x), solved.weights[k]);
                if (v > worst) worst = v;
            }
            return worst;
        } catch (const PoleError&) {
        } catch (const SingularSystemError&) {
        }
    }
    throw SingularSystemError("oracle_pointwise_discrepancy: no admissible sample point found");
}

template <class S>
std::vector<RatFunc<S>> as_ratfuncs(const std::vector<Poly<S>>& polys) {
    std::vector<RatFunc<S>> out;
    out.reserve(polys.size());
    for (const Poly<S>& p : polys) out.emplace_back(p);
    return out;
}

} // namespace detail

/// Runs the full per-family check battery (consistency, representation,
/// recurrence-vs-explicit agreement for n = 0, pointwise oracle agreement)
/// on `trials` random stencils sharing the arms of `shape`. Invalid
/// (k_level, n) combinations must be rejected by the builders with RangeError
/// and are reported as an "invalid input rejected" pass.
template <class S>
VerificationReport verify_family(const Stencil<S>& shape, int k_level, int n, int trials, std::uint64_t seed) {
    std::ostringstream desc;
    desc << "arms=(" << shape.m_minus() << "," << shape.m_plus() << ") K_s=" << k_level << " n=" << n
         << " trials=" << trials;
    VerificationReport report;
    report.case_desc = desc.str();

    const int m = shape.m();
    const bool valid = m >= 2 && k_level >= 1 && k_level <= m - 1 && n >= 0 && n <= m - k_level;
    std::mt19937_64 rng(seed);

    if (!valid) {
        try {
            const Stencil<S> s = random_stencil<S>(rng, shape.m_minus(), shape.m_plus());
            if (n == 0)
                (void)weights_by_recurrence(s, k_level);
            else
                (void)deriv_weights(s, k_level, n);
            report.pass = false;
            report.detail = "invalid input was accepted";
        } catch (const RangeError&) {
            report.pass = true;
            report.detail = "invalid input rejected (RangeError)";
        }
        report.max_discrepancy = scalar_traits<S>::str(S(0));
        return report;
    }

    S worst(0);
    std::string failure;
    for (int t = 0; t < trials; ++t) {
        const Stencil<S> s = random_stencil<S>(rng, shape.m_minus(), shape.m_plus());
        if (n == 0) {
            const WeightFamily<S> by_rec = weights_by_recurrence(s, k_level);
            const WeightFamily<S> by_exp = weights_explicit(s, k_level);
            const S d1 = family_max_diff(by_rec, by_exp);
            const S d2 = weights_consistency_discrepancy(by_rec);
            const S d3 = weights_representation_discrepancy(by_rec);
            const S d4 = detail::oracle_pointwise_discrepancy(rng, s, k_level, n, detail::as_ratfuncs(by_rec.sigmas));
            for (const S* d : {&d1, &d2, &d3, &d4})
                if (*d > worst) worst = *d;
            if (!detail::within_tolerance(worst) && failure.empty()) failure = "trial " + std::to_string(t);
        } else {
            const DerivWeightFamily<S> fam = deriv_weights(s, k_level, n);
            S d1(0), d2(0);
            if constexpr (scalar_traits<S>::is_exact) {
                d1 = deriv_consistency_discrepancy(fam);
                d2 = deriv_representation_symbolic_discrepancy(fam);
            } else {
                d1 = deriv_consistency_discrepancy(fam);
                for (int r = 0; r < 3; ++r) {
                    try {
                        const S v = deriv_representation_pointwise_discrepancy(fam, random_point_near(rng, s));
                        if (v > d2) d2 = v;
                    } catch (const PoleError&) {
                    }
                }
            }
            const S d3 = detail::oracle_pointwise_discrepancy(rng, s, k_level, n, fam.sigmas);
            for (const S* d : {&d1, &d2, &d3})
                if (*d > worst) worst = *d;
            if (!detail::within_tolerance(worst) && failure.empty()) failure = "trial " + std::to_string(t);
        }
    }
    report.pass = detail::within_tolerance(worst);
    report.max_discrepancy = scalar_traits<S>::str(worst);
    report.detail = report.pass ? "all checks passed" : ("first failure at " + failure);
    return report;
}

/// Sweeps every (M, K_s, n) combination with M <= max_m; the arms of each
/// case are drawn from the seed so biased stencils are exercised too.
template <class S = Rational>
std::vector<VerificationReport> run_verification_sweep(int max_m, int trials, std::uint64_t seed) {
    if (max_m < 2) throw RangeError("run_verification_sweep: max_m must be >= 2");
    std::vector<VerificationReport> reports;
    std::mt19937_64 arms_rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uint64_t case_seed = seed;
    for (int m = 2; m <= max_m; ++m) {
        for (int k = 1; k <= m - 1; ++k) {
            for (int n = 0; n <= m - k; ++n) {
                const int m_minus = static_cast<int>(rand_long(arms_rng, 0, m));
                std::vector<S> unit_nodes;
                for (int j = 0; j <= m; ++j) unit_nodes.push_back(S(j));
                const Stencil<S> shape(m_minus, m - m_minus, std::move(unit_nodes));
                reports.push_back(verify_family(shape, k, n, trials, ++case_seed));
            }
        }
    }
    return reports;
}

} // namespace nevw

#endif
