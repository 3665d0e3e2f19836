#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "khv/errors.hpp"

namespace khv {

/// One crossing of a PD code: edge labels (a,b,c,d) listed counterclockwise
/// starting at the incoming under-strand, so the under-strand runs a -> c and
/// the over-strand occupies {b,d}.  `over_in_at_d` records the inferred
/// over-strand direction (entering at d makes the crossing positive).
struct Crossing {
    std::array<int, 4> edges{};
    int sign = 0;
    bool over_in_at_d = false;

    int under_in() const { return edges[0]; }
    int under_out() const { return edges[2]; }
    int over_in() const { return over_in_at_d ? edges[3] : edges[1]; }
    int over_out() const { return over_in_at_d ? edges[1] : edges[3]; }

    /// Smoothing joins by marker: the positive marker joins (a,b) and (c,d),
    /// the negative marker joins (a,d) and (b,c).
    std::array<std::pair<int, int>, 2> joins(bool positive_marker) const {
        if (positive_marker)
            return {{{edges[0], edges[1]}, {edges[2], edges[3]}}};
        return {{{edges[0], edges[3]}, {edges[1], edges[2]}}};
    }
};

/// A validated oriented link diagram.  Edge labels are 1..n_edges, each of
/// degree two; orientation follows increasing labels cyclically per component
/// (the KnotAtlas PD convention).  Crossingless unknot components are kept as
/// explicit free loops.
class Diagram {
public:
    static Diagram parse_pd(std::string_view text);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int n_crossings() const { return static_cast<int>(crossings_.size()); }
    int n_edges() const { return n_edges_; }
    int components() const { return components_; }
    int free_loops() const { return free_loops_; }

    int writhe() const {
        int w = 0;
        for (const auto& c : crossings_) w += c.sign;
        return w;
    }

    /// Swap every crossing's over/under role (a one-step rotation of each PD
    /// tuple).  The writhe negates.
    Diagram mirrored() const {
        std::vector<std::array<int, 4>> tuples;
        tuples.reserve(crossings_.size());
        for (const auto& c : crossings_) {
            const auto& e = c.edges;
            if (c.over_in_at_d)
                tuples.push_back({e[3], e[0], e[1], e[2]});
            else
                tuples.push_back({e[1], e[2], e[3], e[0]});
        }
        return from_tuples(tuples, free_loops_);
    }

    /// Build and validate a diagram from raw PD tuples plus free loops.
    static Diagram from_tuples(const std::vector<std::array<int, 4>>& tuples, int free_loops);

private:
    std::vector<Crossing> crossings_;
    int n_edges_ = 0;
    int components_ = 0;
    int free_loops_ = 0;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace detail

inline Diagram Diagram::from_tuples(const std::vector<std::array<int, 4>>& tuples, int free_loops) {
    Diagram d;
    d.free_loops_ = free_loops;
    if (tuples.empty()) {
        if (free_loops == 0) throw MalformedTerm("diagram has no crossings and no loops");
        d.components_ = free_loops;
        return d;
    }

    const int n_edges = 2 * static_cast<int>(tuples.size());
    d.n_edges_ = n_edges;

    // Every label must lie in 1..n_edges and appear exactly twice.
    std::vector<int> degree(static_cast<size_t>(n_edges) + 1, 0);
    for (const auto& t : tuples)
        for (int e : t) {
            if (e < 1 || e > n_edges)
                throw EdgeDegree("edge label " + std::to_string(e) + " outside 1.." + std::to_string(n_edges));
            ++degree[static_cast<size_t>(e)];
        }
    for (int e = 1; e <= n_edges; ++e)
        if (degree[static_cast<size_t>(e)] != 2)
            throw EdgeDegree("edge label " + std::to_string(e) + " appears " +
                             std::to_string(degree[static_cast<size_t>(e)]) + " times (want 2)");

    // Link components: the two strands through a crossing tie (a,c) and (b,d).
    detail::UnionFind uf(n_edges + 1);
    for (const auto& t : tuples) {
        uf.unite(t[0], t[2]);
        uf.unite(t[1], t[3]);
    }
    std::vector<std::vector<int>> comp_edges;
    std::vector<int> comp_of(static_cast<size_t>(n_edges) + 1, -1);
    for (int e = 1; e <= n_edges; ++e) {
        int r = uf.find(e);
        if (comp_of[static_cast<size_t>(r)] < 0) {
            comp_of[static_cast<size_t>(r)] = static_cast<int>(comp_edges.size());
            comp_edges.emplace_back();
        }
        comp_of[static_cast<size_t>(e)] = comp_of[static_cast<size_t>(r)];
        comp_edges[static_cast<size_t>(comp_of[static_cast<size_t>(e)])].push_back(e);
    }
    d.components_ = static_cast<int>(comp_edges.size()) + free_loops;

    // Successor along the orientation: next larger label in the component,
    // wrapping from the maximum to the minimum.
    std::vector<int> succ(static_cast<size_t>(n_edges) + 1, 0);
    for (auto& edges : comp_edges) {
        std::sort(edges.begin(), edges.end());
        for (size_t k = 0; k < edges.size(); ++k)
            succ[static_cast<size_t>(edges[k])] = edges[(k + 1) % edges.size()];
    }

    // Under passages are fixed by the tuple; check them and seed the edge
    // in/out usage that disambiguates over-strand directions.
    std::vector<bool> in_used(static_cast<size_t>(n_edges) + 1, false);
    std::vector<bool> out_used(static_cast<size_t>(n_edges) + 1, false);
    for (const auto& t : tuples) {
        if (succ[static_cast<size_t>(t[0])] != t[2])
            throw OrientationConflict("under-strand " + std::to_string(t[0]) + " -> " + std::to_string(t[2]) +
                                      " breaks the label succession");
        if (in_used[static_cast<size_t>(t[0])] || out_used[static_cast<size_t>(t[2])])
            throw OrientationConflict("edge used twice in the same direction at under-strands");
        in_used[static_cast<size_t>(t[0])] = true;
        out_used[static_cast<size_t>(t[2])] = true;
    }

    // Over passages: direction b->d or d->b.  A direction is possible only if
    // it follows the succession and does not reuse an edge end.  Commit
    // passages as they become forced; anything still open at the fixpoint is
    // genuinely ambiguous and rejected rather than guessed.
    d.crossings_.resize(tuples.size());
    for (size_t k = 0; k < tuples.size(); ++k) d.crossings_[k].edges = tuples[k];
    std::vector<bool> decided(tuples.size(), false);
    size_t remaining = tuples.size();
    bool progress = true;
    while (remaining > 0 && progress) {
        progress = false;
        for (size_t k = 0; k < tuples.size(); ++k) {
            if (decided[k]) continue;
            const int b = tuples[k][1], dd = tuples[k][3];
            const bool bd_ok = succ[static_cast<size_t>(b)] == dd &&
                               !in_used[static_cast<size_t>(b)] && !out_used[static_cast<size_t>(dd)];
            const bool db_ok = succ[static_cast<size_t>(dd)] == b &&
                               !in_used[static_cast<size_t>(dd)] && !out_used[static_cast<size_t>(b)];
            if (!bd_ok && !db_ok)
                throw OrientationConflict("no consistent over-strand direction at crossing " + std::to_string(k + 1));
            if (bd_ok && db_ok) continue;
            const int over_in = bd_ok ? b : dd;
            const int over_out = bd_ok ? dd : b;
            in_used[static_cast<size_t>(over_in)] = true;
            out_used[static_cast<size_t>(over_out)] = true;
            d.crossings_[k].over_in_at_d = !bd_ok;
            d.crossings_[k].sign = bd_ok ? -1 : +1;
            decided[k] = true;
            --remaining;
            progress = true;
        }
    }
    if (remaining > 0)
        throw OrientationConflict("orientation is ambiguous: a component meets the rest of the diagram only "
                                  "through over-strands of a two-edge circle");
    return d;
}

inline Diagram Diagram::parse_pd(std::string_view text) {
    std::vector<std::array<int, 4>> tuples;
    int free_loops = 0;

    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw MalformedTerm("empty PD code");
    while (pos < text.size()) {
        size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        std::string_view tok = text.substr(pos, end - pos);
        pos = end;
        skip_ws();

        if (tok == "U") {
            ++free_loops;
            continue;
        }
        if (tok.size() < 3 || (tok[0] != 'X')) throw MalformedTerm("unrecognized term '" + std::string(tok) + "'");
        const char open = tok[1];
        const char close = open == '(' ? ')' : (open == '[' ? ']' : '\0');
        if (close == '\0' || tok.back() != close)
            throw MalformedTerm("unrecognized term '" + std::string(tok) + "'");
        std::string_view body = tok.substr(2, tok.size() - 3);

        std::array<int, 4> t{};
        size_t field = 0, bp = 0;
        while (bp <= body.size()) {
            size_t comma = body.find(',', bp);
            std::string_view num = body.substr(bp, comma == std::string_view::npos ? body.size() - bp : comma - bp);
            if (num.empty() || field >= 4)
                throw MalformedTerm("crossing term needs exactly four labels: '" + std::string(tok) + "'");
            int value = 0;
            for (char ch : num) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw MalformedTerm("bad edge label '" + std::string(num) + "' in '" + std::string(tok) + "'");
                value = value * 10 + (ch - '0');
                if (value > 1000000) throw MalformedTerm("edge label too large in '" + std::string(tok) + "'");
            }
            if (value == 0) throw MalformedTerm("edge labels are positive: '" + std::string(tok) + "'");
            t[field++] = value;
            if (comma == std::string_view::npos) break;
            bp = comma + 1;
        }
        if (field != 4) throw MalformedTerm("crossing term needs exactly four labels: '" + std::string(tok) + "'");
        tuples.push_back(t);
    }
    return from_tuples(tuples, free_loops);
}

}  // namespace khv
