#ifndef NEVW_JSON_IO_HPP
#define NEVW_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "nevw/deriv_weights.hpp"
#include "nevw/oracle.hpp"
#include "nevw/stencil.hpp"
#include "nevw/weights.hpp"

namespace nevw {

using json = nlohmann::json;

/// Exact scalars serialize as canonical "p/q" strings, float scalars as
/// numbers (shortest round-trip form is nlohmann's default for doubles).
template <class S>
json scalar_to_json(const S& v) {
    if constexpr (scalar_traits<S>::is_exact)
        return json(v.str());
    else
        return json(v);
}

template <class S>
S scalar_from_json(const json& j) {
    if constexpr (scalar_traits<S>::is_exact) {
        if (j.is_string()) return Rational::parse(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
        throw ParseError("exact mode expects rational strings (or integers), got: " + j.dump());
    } else {
        if (j.is_number()) return j.get<double>();
        if (j.is_string()) return scalar_traits<double>::parse(j.get<std::string>());
        throw ParseError("float mode expects numbers, got: " + j.dump());
    }
}

template <class S>
json coeffs_to_json(const std::vector<S>& coeffs, size_t pad_to) {
    json arr = json::array();
    for (const S& c : coeffs) arr.push_back(scalar_to_json(c));
    while (arr.size() < pad_to) arr.push_back(scalar_to_json(S(0)));
    return arr;
}

template <class S>
json poly_to_json(const Poly<S>& p, size_t pad_to = 0) {
    return coeffs_to_json(p.coeffs(), pad_to);
}

template <class S>
json stencil_to_json(const Stencil<S>& s) {
    json j;
    j["m_minus"] = s.m_minus();
    j["m_plus"] = s.m_plus();
    json nodes = json::array();
    for (const S& x : s.nodes()) nodes.push_back(scalar_to_json(x));
    j["nodes"] = nodes;
    return j;
}

template <class S>
Stencil<S> stencil_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m_minus") || !j.contains("m_plus") || !j.contains("nodes"))
        throw ParseError("stencil descriptor needs m_minus, m_plus and nodes");
    if (!j["m_minus"].is_number_integer() || !j["m_plus"].is_number_integer() || !j["nodes"].is_array())
        throw ParseError("stencil descriptor has wrong field types");
    std::vector<S> nodes;
    nodes.reserve(j["nodes"].size());
    for (const json& v : j["nodes"]) nodes.push_back(scalar_from_json<S>(v));
    return Stencil<S>(j["m_minus"].get<int>(), j["m_plus"].get<int>(), std::move(nodes));
}

/// {"K_s", "sigmas" (rows of K_s+1 ascending coefficients), "varsigma",
///  "positivity_interval" ([lo, hi] when K_s <= ceil(M/2), else null)}.
template <class S>
json weight_family_to_json(const WeightFamily<S>& fam) {
    json j;
    j["K_s"] = fam.k_level;
    json sig = json::array();
    for (const Poly<S>& p : fam.sigmas) sig.push_back(poly_to_json(p, static_cast<size_t>(fam.k_level) + 1));
    j["sigmas"] = sig;
    json vs = json::array();
    for (const S& v : fam.varsigma) vs.push_back(scalar_to_json(v));
    j["varsigma"] = vs;
    if (fam.k_level <= (fam.stencil.m() + 1) / 2) {
        const auto [lo, hi] = positivity_interval(fam.stencil, fam.k_level);
        j["positivity_interval"] = json::array({scalar_to_json(lo), scalar_to_json(hi)});
    } else {
        j["positivity_interval"] = nullptr;
    }
    return j;
}

/// {"K_s", "n", "sigmas": [{"num": [...], "den": [...]}], "pole_poly": [...]}.
template <class S>
json deriv_family_to_json(const DerivWeightFamily<S>& fam) {
    json j;
    j["K_s"] = fam.k_level;
    j["n"] = fam.deriv_order;
    json sig = json::array();
    for (const RatFunc<S>& r : fam.sigmas) {
        json entry;
        entry["num"] = poly_to_json(r.num());
        entry["den"] = poly_to_json(r.den());
        sig.push_back(entry);
    }
    j["sigmas"] = sig;
    j["pole_poly"] = poly_to_json(fam.pole_poly);
    return j;
}

inline json report_to_json(const VerificationReport& r) {
    json j;
    j["case"] = r.case_desc;
    j["status"] = r.pass ? "pass" : "fail";
    j["max_discrepancy"] = r.max_discrepancy;
    j["detail"] = r.detail;
    return j;
}

} // namespace nevw

#endif
