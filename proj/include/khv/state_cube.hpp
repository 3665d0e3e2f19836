#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "khv/diagram.hpp"
#include "khv/errors.hpp"

namespace khv {

/// Marker assignment, one bit per crossing in PD order.
/// Bit 0 means positive marker, bit 1 negative.
using StateMask = std::uint32_t;

/// Circle signs, one bit per circle index.  Bit 0 means sign +1, bit 1 sign -1.
using SignMask = std::uint32_t;

inline constexpr int kMaxCubeCrossings = 24;

/// A state of the cube of resolutions.
struct State {
    StateMask markers = 0;
    int n_crossings = 0;

    int negatives() const { return std::popcount(markers); }
    /// sigma = (#positive markers) - (#negative markers).
    int sigma() const { return n_crossings - 2 * negatives(); }
    bool marker_positive(int k) const { return ((markers >> k) & 1u) == 0; }
};

/// The circles of a smoothed diagram.  Circles built from edges come first,
/// indexed by their minimal edge label; free loops follow in input order.
struct CircleSet {
    int count = 0;
    int edge_circles = 0;                // circles containing at least one edge
    std::vector<int> circle_of_edge;     // 1-based edge label -> circle index

    int circle_of(int edge) const { return circle_of_edge[static_cast<size_t>(edge)]; }
};

/// Smooth every crossing of `d` by its marker and trace the closed circles.
inline CircleSet resolve(const Diagram& d, StateMask markers) {
    if (d.n_crossings() > kMaxCubeCrossings) throw TooLarge("too many crossings to resolve");
    CircleSet cs;
    const int ne = d.n_edges();
    detail::UnionFind uf(ne + 1);
    const auto& xs = d.crossings();
    for (size_t k = 0; k < xs.size(); ++k) {
        const bool pos = ((markers >> k) & 1u) == 0;
        for (const auto& [u, v] : xs[k].joins(pos)) uf.unite(u, v);
    }
    cs.circle_of_edge.assign(static_cast<size_t>(ne) + 1, -1);
    std::vector<int> index_of_root(static_cast<size_t>(ne) + 1, -1);
    int next = 0;
    for (int e = 1; e <= ne; ++e) {
        int r = uf.find(e);
        if (index_of_root[static_cast<size_t>(r)] < 0) index_of_root[static_cast<size_t>(r)] = next++;
        cs.circle_of_edge[static_cast<size_t>(e)] = index_of_root[static_cast<size_t>(r)];
    }
    cs.edge_circles = next;
    cs.count = next + d.free_loops();
    return cs;
}

/// An enhanced state: markers plus a sign per circle, with the Viro gradings
///   i = (w(D) - sigma(s)) / 2,   j = w(D) + i + tau(S).
struct EnhancedState {
    StateMask markers = 0;
    SignMask circle_signs = 0;  // bit c set: circle c carries sign -1
    int n_circles = 0;
    int tau = 0;
    int i = 0;
    int j = 0;

    bool circle_positive(int c) const { return ((circle_signs >> c) & 1u) == 0; }

    bool operator==(const EnhancedState& o) const {
        return markers == o.markers && circle_signs == o.circle_signs;
    }
    bool operator<(const EnhancedState& o) const {
        return markers != o.markers ? markers < o.markers : circle_signs < o.circle_signs;
    }
};

/// i-grading from writhe and marker sum; the division is exact because
/// sigma and the crossing count have the same parity.
inline int grading_i(int writhe, int sigma) {
    const int num = writhe - sigma;
    if (num % 2 != 0) throw OrientationConflict("w - sigma is odd; gradings undefined");
    return num / 2;
}

inline int grading_j(int writhe, int i, int tau) { return writhe + i + tau; }

inline EnhancedState make_enhanced(const Diagram& d, StateMask markers, const CircleSet& cs, SignMask signs) {
    if (cs.count > 28) throw TooLarge("too many circles for the sign mask");
    EnhancedState s;
    s.markers = markers;
    s.circle_signs = signs;
    s.n_circles = cs.count;
    const SignMask live = (SignMask(1) << cs.count) - 1u;
    s.tau = cs.count - 2 * std::popcount(signs & live);
    State st{markers, d.n_crossings()};
    s.i = grading_i(d.writhe(), st.sigma());
    s.j = grading_j(d.writhe(), s.i, s.tau);
    return s;
}

/// Enumerate all enhanced states of `d` in a fixed deterministic order:
/// states as a binary counter over crossings in PD order, then circle-sign
/// masks as a binary counter over circle indices.
template <class Fn>
void for_each_enhanced(const Diagram& d, Fn&& fn) {
    const int n = d.n_crossings();
    if (n > kMaxCubeCrossings) throw TooLarge("too many crossings to enumerate");
    const StateMask n_states = StateMask(1) << n;
    for (StateMask m = 0; m < n_states; ++m) {
        const CircleSet cs = resolve(d, m);
        const SignMask n_signs = SignMask(1) << cs.count;
        for (SignMask sg = 0; sg < n_signs; ++sg) fn(make_enhanced(d, m, cs, sg), cs);
    }
}

inline std::vector<EnhancedState> enumerate_enhanced(const Diagram& d) {
    std::vector<EnhancedState> out;
    for_each_enhanced(d, [&](const EnhancedState& s, const CircleSet&) { out.push_back(s); });
    return out;
}

}  // namespace khv
