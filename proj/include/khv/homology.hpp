#pragma once

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "khv/diagram.hpp"
#include "khv/errors.hpp"
#include "khv/linalg.hpp"
#include "khv/state_cube.hpp"

namespace khv {

/// (i, j) -> rank of H^{i,j}; keys are present only for nonzero ranks.
struct BigradedRanks {
    std::map<std::pair<int, int>, int> ranks;

    int rank(int i, int j) const {
        auto it = ranks.find({i, j});
        return it == ranks.end() ? 0 : it->second;
    }
    int total() const {
        int t = 0;
        for (const auto& [k, r] : ranks) t += r;
        return t;
    }
    bool operator==(const BigradedRanks&) const = default;
};

enum class Ring { rationals, gf2 };

namespace detail {

/// Per-state circle data cache; resolve() is pure in the state mask.
class CircleCache {
public:
    explicit CircleCache(const Diagram& d) : d_(d) {}
    const CircleSet& get(StateMask m) {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(m, resolve(d_, m)).first->second;
    }

private:
    const Diagram& d_;
    std::unordered_map<StateMask, CircleSet> cache_;
};

}  // namespace detail

/// One target state of the differential with its integer coefficient.
struct DifferentialTerm {
    EnhancedState state;
    int coeff;  // +1 or -1
};

namespace detail {

// Emit the terms produced by switching the positive marker at crossing k of
// S to negative.  The circle relabeling between the two smoothings decides
// merge vs split; signs follow the Frobenius rules
//   merge: (+,+)->+, (+,-)->-, (-,-)->0
//   split: + -> (+,-)+(-,+),  - -> (-,-).
template <class Out>
void switch_marker(const Diagram& d, const EnhancedState& S, int k, const CircleSet& old_cs,
                   const CircleSet& new_cs, int cube_sign, Out&& out) {
    const StateMask new_markers = S.markers | (StateMask(1) << k);
    const int delta = new_cs.count - old_cs.count;
    if (delta != -1 && delta != 1)
        throw std::logic_error("marker switch changed the circle count by " + std::to_string(delta) +
                               "; the PD code is not a planar diagram");

    // Transfer signs of untouched circles.  Edge circles map via any edge
    // they contain; free loops keep their relative position after the edge
    // circles of the respective smoothing.
    const int ne = d.n_edges();
    auto free_loop_index = [](const CircleSet& cs, int loop) { return cs.edge_circles + loop; };

    if (delta == -1) {
        // Two circles merged into one.  The old smoothing's two join pairs
        // sit on the two circles being merged.
        const auto js = d.crossings()[static_cast<size_t>(k)].joins(true);
        const int merged_old_a = old_cs.circle_of(js[0].first);
        const int merged_old_b = old_cs.circle_of(js[1].first);
        const int merged_new = new_cs.circle_of(js[0].first);
        if (merged_old_a == merged_old_b)
            throw std::logic_error("merge detected but the crossing edges share one circle");
        SignMask base = 0;
        for (int e = 1; e <= ne; ++e) {
            const int oc = old_cs.circle_of(e);
            const int nc = new_cs.circle_of(e);
            if (nc == merged_new) continue;
            if (!S.circle_positive(oc)) base |= SignMask(1) << nc;
        }
        for (int loop = 0; loop < d.free_loops(); ++loop)
            if (!S.circle_positive(free_loop_index(old_cs, loop)))
                base |= SignMask(1) << free_loop_index(new_cs, loop);

        const bool p1 = S.circle_positive(merged_old_a);
        const bool p2 = S.circle_positive(merged_old_b);
        if (!p1 && !p2) return;  // (-,-) -> 0
        SignMask sg = base;
        if (!p1 || !p2) sg |= SignMask(1) << merged_new;  // (+,-) -> -
        out(DifferentialTerm{make_enhanced(d, new_markers, new_cs, sg), cube_sign});
        return;
    }

    // delta == +1: one circle split into two, carried by the new smoothing's
    // two join pairs.
    const auto js = d.crossings()[static_cast<size_t>(k)].joins(false);
    const int split_old = old_cs.circle_of(js[0].first);
    const int na = new_cs.circle_of(js[0].first);
    const int nb = new_cs.circle_of(js[1].first);
    if (na == nb) throw std::logic_error("split detected but only one new circle at the crossing");

    SignMask base = 0;
    for (int e = 1; e <= ne; ++e) {
        const int oc = old_cs.circle_of(e);
        const int nc = new_cs.circle_of(e);
        if (nc == na || nc == nb) {
            if (oc != split_old) throw std::logic_error("split circle mapping is inconsistent");
            continue;
        }
        if (!S.circle_positive(oc)) base |= SignMask(1) << nc;
    }
    for (int loop = 0; loop < d.free_loops(); ++loop)
        if (!S.circle_positive(free_loop_index(old_cs, loop)))
            base |= SignMask(1) << free_loop_index(new_cs, loop);

    if (S.circle_positive(split_old)) {
        // + -> (+,-) + (-,+)
        out(DifferentialTerm{make_enhanced(d, new_markers, new_cs, base | (SignMask(1) << nb)), cube_sign});
        out(DifferentialTerm{make_enhanced(d, new_markers, new_cs, base | (SignMask(1) << na)), cube_sign});
    } else {
        // - -> (-,-)
        out(DifferentialTerm{
            make_enhanced(d, new_markers, new_cs, base | (SignMask(1) << na) | (SignMask(1) << nb)), cube_sign});
    }
}

template <class Out>
void differential_impl(const Diagram& d, const EnhancedState& S, CircleCache& cache, Out&& out) {
    const int n = d.n_crossings();
    const CircleSet& old_cs = cache.get(S.markers);
    for (int k = 0; k < n; ++k) {
        if (((S.markers >> k) & 1u) != 0) continue;  // already negative
        // (-1)^{#negative markers at crossings before k in PD order}
        const int below = std::popcount(S.markers & ((StateMask(1) << k) - 1u));
        const int cube_sign = (below % 2 == 0) ? +1 : -1;
        const CircleSet& new_cs = cache.get(S.markers | (StateMask(1) << k));
        switch_marker(d, S, k, old_cs, new_cs, cube_sign, out);
    }
}

}  // namespace detail

/// The Khovanov differential applied to one enhanced state.  Every emitted
/// term has gradings (i+1, j); this is asserted, not assumed.
inline std::vector<DifferentialTerm> differential(const Diagram& d, const EnhancedState& S) {
    detail::CircleCache cache(d);
    std::vector<DifferentialTerm> out;
    detail::differential_impl(d, S, cache, [&](DifferentialTerm t) {
        if (t.state.i != S.i + 1 || t.state.j != S.j)
            throw std::logic_error("differential term violates the (i+1, j) grading");
        out.push_back(std::move(t));
    });
    return out;
}

/// Basis of the chain complex: (i, j) -> enhanced states in enumeration order.
struct ChainBasis {
    std::map<std::pair<int, int>, std::vector<EnhancedState>> groups;

    static ChainBasis build(const Diagram& d) {
        ChainBasis b;
        for_each_enhanced(d, [&](const EnhancedState& s, const CircleSet&) {
            b.groups[{s.i, s.j}].push_back(s);
        });
        return b;
    }
};

inline constexpr int kMaxHomologyCrossings = 14;

/// Bigraded homology ranks over the chosen coefficient ring.
/// rank H^{i,j} = dim C^{i,j} - rank d^{i,j} - rank d^{i-1,j}.
/// Also verifies d∘d = 0 on the whole complex as a side assertion.
inline BigradedRanks homology_ranks(const Diagram& d, Ring ring = Ring::rationals) {
    if (d.n_crossings() > kMaxHomologyCrossings)
        throw TooLarge("diagram has " + std::to_string(d.n_crossings()) + " crossings; homology_ranks caps at " +
                       std::to_string(kMaxHomologyCrossings));

    const ChainBasis basis = ChainBasis::build(d);
    detail::CircleCache cache(d);

    // Index of each enhanced state within its (i, j) group.
    std::map<std::pair<int, int>, std::map<EnhancedState, int>> index;
    for (const auto& [ij, states] : basis.groups) {
        auto& m = index[ij];
        for (size_t k = 0; k < states.size(); ++k) m.emplace(states[k], static_cast<int>(k));
    }

    // One sparse block per (i, j): columns C^{i,j}, rows C^{i+1,j}.
    std::map<std::pair<int, int>, SparseIntMatrix> blocks;
    for (const auto& [ij, states] : basis.groups) {
        const std::pair<int, int> tgt{ij.first + 1, ij.second};
        auto tg = basis.groups.find(tgt);
        const int rows = tg == basis.groups.end() ? 0 : static_cast<int>(tg->second.size());
        SparseIntMatrix m(rows, static_cast<int>(states.size()));
        for (size_t col = 0; col < states.size(); ++col) {
            detail::differential_impl(d, states[col], cache, [&](const DifferentialTerm& t) {
                if (t.state.i != ij.first + 1 || t.state.j != ij.second)
                    throw std::logic_error("differential term violates the (i+1, j) grading");
                m.add(index.at(tgt).at(t.state), static_cast<int>(col), t.coeff);
            });
        }
        blocks.emplace(ij, std::move(m));
    }

    // d∘d = 0, checked exactly state by state.
    for (const auto& [ij, states] : basis.groups) {
        for (const auto& s : states) {
            std::map<EnhancedState, long long> dd;
            detail::differential_impl(d, s, cache, [&](const DifferentialTerm& t1) {
                detail::differential_impl(d, t1.state, cache, [&](const DifferentialTerm& t2) {
                    dd[t2.state] += static_cast<long long>(t1.coeff) * t2.coeff;
                });
            });
            for (const auto& [st, c] : dd)
                if (c != 0) throw std::logic_error("d∘d != 0");
        }
    }

    std::map<std::pair<int, int>, int> block_rank;
    for (const auto& [ij, m] : blocks)
        block_rank[ij] = ring == Ring::rationals ? rank_over_rationals(m) : rank_gf2(m);
    auto rank_of = [&](const std::pair<int, int>& key) {
        auto it = block_rank.find(key);
        return it == block_rank.end() ? 0 : it->second;
    };

    BigradedRanks out;
    for (const auto& [ij, states] : basis.groups) {
        const int dim = static_cast<int>(states.size());
        const int h = dim - rank_of(ij) - rank_of({ij.first - 1, ij.second});
        if (h < 0) throw std::logic_error("negative homology rank");
        if (h > 0) out.ranks[ij] = h;
    }
    return out;
}

}  // namespace khv
