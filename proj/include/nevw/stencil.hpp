#ifndef NEVW_STENCIL_HPP
#define NEVW_STENCIL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "nevw/scalar.hpp"

namespace nevw {

/// A K_s-level subdivision slot: the window shifted k_s nodes from the left
/// end. Valid when 1 <= k_level <= M-1 and 0 <= shift <= k_level.
struct SubdivisionSpec {
    int k_level = 0; // K_s
    int shift = 0;   // k_s
};

/// M+1 strictly increasing abscissae around an implicit origin index i,
/// addressed by the relative offset ell in {-m_minus, ..., m_plus}. The arms
/// may be negative as long as their sum M is >= 0 (this happens for
/// substencils of biased stencils).
template <class S>
class Stencil {
public:
    Stencil(int m_minus, int m_plus, std::vector<S> nodes)
        : m_minus_(m_minus), m_plus_(m_plus), nodes_(std::move(nodes)) {
        const int m = m_minus_ + m_plus_;
        if (m < 0) throw RangeError("Stencil: m_minus + m_plus must be >= 0");
        if (static_cast<int>(nodes_.size()) != m + 1)
            throw ArityError("Stencil: expected " + std::to_string(m + 1) + " nodes, got " +
                             std::to_string(nodes_.size()));
        for (size_t j = 1; j < nodes_.size(); ++j)
            if (!(nodes_[j - 1] < nodes_[j]))
                throw OrderError("Stencil: nodes must be strictly increasing");
    }

    int m_minus() const { return m_minus_; }
    int m_plus() const { return m_plus_; }
    int m() const { return m_minus_ + m_plus_; }

    int offset_lo() const { return -m_minus_; }
    int offset_hi() const { return m_plus_; }

    const std::vector<S>& nodes() const { return nodes_; }

    /// Node x_{i+ell}.
    const S& node(int ell) const {
        if (ell < offset_lo() || ell > offset_hi())
            throw RangeError("Stencil: offset " + std::to_string(ell) + " outside [" +
                             std::to_string(offset_lo()) + ", " + std::to_string(offset_hi()) + "]");
        return nodes_[static_cast<size_t>(ell + m_minus_)];
    }

    /// Node by 0-based position from the left end.
    const S& node_at(int index) const {
        if (index < 0 || index > m()) throw RangeError("Stencil: node index out of range");
        return nodes_[static_cast<size_t>(index)];
    }

    /// The k_s-th window of the K_s-level subdivision: drops k_level nodes
    /// overall, keeping positions [shift, M - k_level + shift]. The result
    /// keeps the same origin, so its arms are (m_minus - shift,
    /// m_plus - k_level + shift).
    Stencil substencil(const SubdivisionSpec& spec) const {
        validate_subdivision(spec);
        std::vector<S> sub(nodes_.begin() + spec.shift,
                           nodes_.begin() + spec.shift + (m() - spec.k_level + 1));
        return Stencil(m_minus_ - spec.shift, m_plus_ - spec.k_level + spec.shift, std::move(sub));
    }

    void validate_subdivision(const SubdivisionSpec& spec) const {
        if (spec.k_level < 1 || spec.k_level > m() - 1)
            throw RangeError("SubdivisionSpec: k_level " + std::to_string(spec.k_level) +
                             " outside [1, " + std::to_string(m() - 1) + "]");
        if (spec.shift < 0 || spec.shift > spec.k_level)
            throw RangeError("SubdivisionSpec: shift " + std::to_string(spec.shift) + " outside [0, " +
                             std::to_string(spec.k_level) + "]");
    }

    friend bool operator==(const Stencil& a, const Stencil& b) {
        return a.m_minus_ == b.m_minus_ && a.m_plus_ == b.m_plus_ && a.nodes_ == b.nodes_;
    }
    friend bool operator!=(const Stencil& a, const Stencil& b) { return !(a == b); }

private:
    int m_minus_;
    int m_plus_;
    std::vector<S> nodes_;
};

template <class S>
Stencil<S> make_stencil(int m_minus, int m_plus, std::vector<S> nodes) {
    return Stencil<S>(m_minus, m_plus, std::move(nodes));
}

/// Self-test: the union of all k_level-level windows recovers the stencil.
template <class S>
bool substencil_union_check(const Stencil<S>& s, int k_level) {
    if (k_level < 1 || k_level > s.m() - 1) throw RangeError("substencil_union_check: k_level out of range");
    std::vector<S> seen;
    for (int shift = 0; shift <= k_level; ++shift) {
        const Stencil<S> sub = s.substencil({k_level, shift});
        seen.insert(seen.end(), sub.nodes().begin(), sub.nodes().end());
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return seen == s.nodes();
}

} // namespace nevw

#endif
