#pragma once

#include <string>
#include <vector>

#include "khv/diagram.hpp"
#include "khv/errors.hpp"
#include "khv/homology.hpp"
#include "khv/laurent.hpp"

namespace khv {

/// Kh(L)(t, q) = sum over (i, j) of rank H^{i,j} t^i q^j.
/// Keys are (t-exponent, q-exponent); coefficients are positive integers.
using KhPoly = Laurent2<Int>;

/// The Jones polynomial in one of two forms: the unnormalized J(q) with
/// J(unknot) = q + q^-1, or the normalized V with V(unknot) = 1.  The
/// normalized form lives in Z[r^(1/2), r^(-1/2)]; its exponents are stored
/// doubled, so key m stands for r^(m/2).
struct JonesPoly {
    enum class Form { unnormalized_q, normalized_r };
    Laurent1<Int> coeffs;
    Form form = Form::unnormalized_q;

    bool operator==(const JonesPoly&) const = default;
};

/// Kauffman bracket state sum in the variable A.
using BracketPoly = Laurent1<Int>;

inline KhPoly khovanov_polynomial(const BigradedRanks& r) {
    KhPoly p;
    for (const auto& [ij, rank] : r.ranks) p.add(ij.first, ij.second, Int(rank));
    return p;
}

/// Inverse of khovanov_polynomial; rejects anything that is not a valid rank
/// generating function.
inline BigradedRanks ranks_from_kh(const KhPoly& p) {
    BigradedRanks r;
    for (const auto& [ij, c] : p.terms()) {
        if (c <= 0) throw MalformedTerm("Khovanov coefficients must be positive");
        r.ranks[{ij.first, ij.second}] = static_cast<int>(c.convert_to<long>());
    }
    return r;
}

/// J(q) = Kh(-1, q).
inline JonesPoly jones_from_kh(const KhPoly& p) {
    JonesPoly j;
    for (const auto& [ij, c] : p.terms()) j.coeffs.add(ij.second, (ij.first % 2 == 0) ? c : Int(-c));
    return j;
}

inline constexpr int kMaxBracketCrossings = 16;

namespace detail {

// Circle count for the bracket oracle.  Deliberately not the union-find used
// by the state cube: walks the join adjacency lists and counts cycles.
inline int bracket_circles(const Diagram& d, StateMask markers) {
    const int ne = d.n_edges();
    std::vector<std::array<int, 2>> adj(static_cast<size_t>(ne) + 1, {0, 0});
    std::vector<int> deg(static_cast<size_t>(ne) + 1, 0);
    const auto& xs = d.crossings();
    for (size_t k = 0; k < xs.size(); ++k) {
        const bool pos = ((markers >> k) & 1u) == 0;
        for (const auto& [u, v] : xs[k].joins(pos)) {
            adj[static_cast<size_t>(u)][static_cast<size_t>(deg[static_cast<size_t>(u)]++)] = v;
            adj[static_cast<size_t>(v)][static_cast<size_t>(deg[static_cast<size_t>(v)]++)] = u;
        }
    }
    std::vector<char> seen(static_cast<size_t>(ne) + 1, 0);
    int circles = 0;
    for (int start = 1; start <= ne; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        ++circles;
        int e = start;
        while (!seen[static_cast<size_t>(e)]) {
            seen[static_cast<size_t>(e)] = 1;
            const int n0 = adj[static_cast<size_t>(e)][0];
            e = seen[static_cast<size_t>(n0)] ? adj[static_cast<size_t>(e)][1] : n0;
        }
    }
    return circles + d.free_loops();
}

}  // namespace detail

/// Kauffman bracket: sum over all states of A^sigma(s) * delta^{#circles(s)}
/// with delta = -A^2 - A^-2.  The 0-crossing unknot brackets to delta.
inline BracketPoly kauffman_bracket(const Diagram& d) {
    const int n = d.n_crossings();
    if (n > kMaxBracketCrossings)
        throw TooLarge("diagram has " + std::to_string(n) + " crossings; kauffman_bracket caps at " +
                       std::to_string(kMaxBracketCrossings));
    BracketPoly delta;
    delta.add(2, Int(-1));
    delta.add(-2, Int(-1));

    // delta powers up to the largest circle count we can meet.
    std::vector<BracketPoly> delta_pow(static_cast<size_t>(d.n_edges() + d.free_loops()) + 2);
    delta_pow[0] = BracketPoly::monomial(0, Int(1));
    for (size_t p = 1; p < delta_pow.size(); ++p) delta_pow[p] = delta_pow[p - 1] * delta;

    BracketPoly sum;
    const StateMask n_states = StateMask(1) << n;
    for (StateMask m = 0; m < n_states; ++m) {
        const int sigma = n - 2 * std::popcount(m);
        const int circles = detail::bracket_circles(d, m);
        sum += delta_pow[static_cast<size_t>(circles)].shifted(sigma);
    }
    return sum;
}

/// Unnormalized Jones from the bracket: (-A^3)^{-w(D)} <D>, then q = -A^-2.
inline JonesPoly jones_from_bracket(const Diagram& d) {
    const BracketPoly br = kauffman_bracket(d);
    const int w = d.writhe();
    JonesPoly j;
    for (const auto& [e, c] : br.terms()) {
        const int exp = e - 3 * w;  // A-exponent after the framing factor
        if (exp % 2 != 0) throw InexactDivision("odd A-exponent after framing; convention bug");
        const int k = exp / 2;      // A^{2k} = (-1)^k q^{-k}
        Int coeff = c;
        if (w % 2 != 0) coeff = -coeff;
        if (k % 2 != 0) coeff = -coeff;
        j.coeffs.add(-k, coeff);
    }
    return j;
}

/// Normalized Jones V with V(unknot) = 1: divide J(q) exactly by (q + q^-1)
/// and substitute q = -r^(1/2).  Exponent key m of the result means r^(m/2).
inline JonesPoly normalize_jones(const JonesPoly& j) {
    if (j.form != JonesPoly::Form::unnormalized_q)
        throw InexactDivision("normalize_jones expects the unnormalized q-form");
    Laurent1<Int> den;
    den.add(1, Int(1));
    den.add(-1, Int(1));
    const Laurent1<Int> w = divide_exact(j.coeffs, den);
    JonesPoly v;
    v.form = JonesPoly::Form::normalized_r;
    for (const auto& [m, c] : w.terms()) v.coeffs.add(m, (m % 2 == 0) ? c : Int(-c));
    return v;
}

/// Exact test of the unnormalized skein relation
///   q^-2 J(L+) - q^2 J(L-) = (q^-1 - q) J(L0).
inline bool check_skein_triple(const JonesPoly& jp, const JonesPoly& jm, const JonesPoly& j0) {
    if (jp.form != JonesPoly::Form::unnormalized_q || jm.form != JonesPoly::Form::unnormalized_q ||
        j0.form != JonesPoly::Form::unnormalized_q)
        throw InexactDivision("check_skein_triple expects unnormalized q-forms");
    Laurent1<Int> lhs = jp.coeffs.shifted(-2);
    lhs -= jm.coeffs.shifted(2);
    Laurent1<Int> rhs = j0.coeffs.shifted(-1);
    rhs -= j0.coeffs.shifted(1);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Canonical text forms
// ---------------------------------------------------------------------------

/// Kh text: terms sorted by (t-exponent, q-exponent) ascending; each term
/// prints the q part before the t part, e.g.
/// `q^-5*t^-2 + q^-1*t^-1 + q^-1 + q + q*t + q^5*t^2`.
inline std::string to_text(const KhPoly& p) {
    std::vector<TextTerm<Int>> terms;
    for (const auto& [ij, c] : p.terms())
        terms.push_back({c, {{'q', ij.second}, {'t', ij.first}}});
    return render_poly(terms);
}

inline KhPoly kh_from_text(std::string_view text) {
    if (text == "0") return {};
    return parse_poly2<Int>(text, 't', 'q');
}

/// Jones text in the polynomial's own variable: `q` for the unnormalized
/// form; the normalized form prints integer powers of `r` and half powers as
/// `r^(m/2)`.
inline std::string to_text(const JonesPoly& j) {
    if (j.form == JonesPoly::Form::unnormalized_q) {
        std::vector<TextTerm<Int>> terms;
        for (const auto& [e, c] : j.coeffs.terms()) terms.push_back({c, {{'q', e}}});
        return render_poly(terms);
    }
    if (j.coeffs.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : j.coeffs.terms()) {
        Int a = c;
        const bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        if (m != 0) {
            mono = "r";
            if (m != 2) {
                if (m % 2 == 0)
                    mono += "^" + std::to_string(m / 2);
                else
                    mono += "^(" + std::to_string(m) + "/2)";
            }
        }
        if (mono.empty())
            out += format_coeff(a);
        else if (a == 1)
            out += mono;
        else
            out += format_coeff(a) + "*" + mono;
    }
    return out;
}

inline JonesPoly jones_from_text(std::string_view text) {
    JonesPoly j;
    if (text != "0") j.coeffs = parse_poly1<Int>(text, 'q');
    return j;
}

}  // namespace khv
