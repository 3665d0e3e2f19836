#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "khv/errors.hpp"
#include "khv/homology.hpp"
#include "khv/laurent.hpp"
#include "khv/numeric.hpp"
#include "khv/polynomials.hpp"

namespace khv {

/// Coefficient of y^n in Kh(t, x e^y): a Laurent polynomial in (t, x) with
/// exact rational coefficients.  The coefficient at (i, j) is
/// (j^n / n!) * rank H^{i,j}.
struct VnPoly {
    Laurent2<Rational> poly;  // keys (t-exponent, x-exponent)
    unsigned n = 0;

    bool operator==(const VnPoly&) const = default;
};

/// Graded piece v_{n,j}: (j^n / n!) * (sum_i t^i rank H^{i,j}) * x^j.
inline VnPoly v_nj(const BigradedRanks& r, unsigned n, int j) {
    VnPoly v;
    v.n = n;
    const Rational scale = Rational(int_pow(Int(j), n), factorial(n));
    for (const auto& [ij, rank] : r.ranks)
        if (ij.second == j) v.poly.add(ij.first, j, scale * rank);
    return v;
}

/// v_n = sum over j of v_{n,j}.
inline VnPoly v_n(const BigradedRanks& r, unsigned n) {
    VnPoly v;
    v.n = n;
    const Int nfact = factorial(n);
    for (const auto& [ij, rank] : r.ranks) {
        const Rational c(int_pow(Int(ij.second), n) * rank, nfact);
        v.poly.add(ij.first, ij.second, c);
    }
    return v;
}

/// The Vassiliev specialization v_n(-1, 1).
inline Rational vassiliev_value(const VnPoly& p) {
    Rational sum = 0;
    for (const auto& [ij, c] : p.poly.terms()) sum += (ij.first % 2 == 0) ? c : -c;
    return sum;
}

/// The lowest-x-degree part: returns (j_min, the t-polynomial coefficient of
/// x^{j_min}), i.e. v_{n, j_min} divided by x^{j_min}.
inline std::pair<int, Laurent1<Rational>> extremal_term(const VnPoly& p) {
    if (p.poly.is_zero()) throw EmptyPolynomial("extremal_term of the zero polynomial");
    int j_min = 0;
    bool first = true;
    for (const auto& [ij, c] : p.poly.terms())
        if (first || ij.second < j_min) {
            j_min = ij.second;
            first = false;
        }
    Laurent1<Rational> coeff;
    for (const auto& [ij, c] : p.poly.terms())
        if (ij.second == j_min) coeff.add(ij.first, c);
    return {j_min, coeff};
}

/// Coefficients of y^0..y^N of Kh(t, x e^y), by direct substitution: every
/// q^j becomes x^j * sum_n (j y)^n / n!, collected exactly.
inline std::vector<VnPoly> series_reconstruct(const KhPoly& p, unsigned N) {
    std::vector<VnPoly> out(N + 1);
    for (unsigned n = 0; n <= N; ++n) out[n].n = n;
    for (const auto& [ij, rank] : p.terms()) {
        Rational jn = 1;  // j^n / n! built incrementally
        for (unsigned n = 0; n <= N; ++n) {
            if (n > 0) jn *= Rational(ij.second, n);
            out[n].poly.add(ij.first, ij.second, jn * rank);
        }
    }
    return out;
}

/// Power series u_0..u_N of V(e^x), from the normalized Jones polynomial
/// (exponent key m meaning r^(m/2), so r^(m/2) -> e^(m x / 2)).
struct BirmanLinSeries {
    std::vector<Rational> u;

    bool operator==(const BirmanLinSeries&) const = default;
};

inline BirmanLinSeries birman_lin(const JonesPoly& v, unsigned N) {
    if (v.form != JonesPoly::Form::normalized_r)
        throw InexactDivision("birman_lin expects the normalized Jones polynomial");
    BirmanLinSeries s;
    s.u.assign(N + 1, Rational(0));
    for (const auto& [m, c] : v.coeffs.terms()) {
        const Rational half(m, 2);
        Rational term = c;  // c * (m/2)^k / k!
        for (unsigned k = 0; k <= N; ++k) {
            if (k > 0) term *= half / k;
            s.u[k] += term;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Canonical text form: terms sorted by descending (x-exponent, t-exponent),
// mirroring the table layout, e.g. `9*t^3*x^9 + 5*t^2*x^5 + 3*x^3 + x`.
// ---------------------------------------------------------------------------

inline std::string to_text(const VnPoly& p) {
    std::vector<std::pair<std::pair<int, int>, Rational>> sorted(p.poly.terms().begin(), p.poly.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    std::vector<TextTerm<Rational>> terms;
    for (const auto& [ij, c] : sorted) terms.push_back({c, {{'t', ij.first}, {'x', ij.second}}});
    return render_poly(terms);
}

inline VnPoly vn_from_text(std::string_view text, unsigned n) {
    VnPoly v;
    v.n = n;
    if (text != "0") v.poly = parse_poly2<Rational>(text, 't', 'x');
    return v;
}

/// LaTeX-like pretty form for human diffing against printed tables: negative
/// powers move into the denominator, fractions render as \frac{..}{..}.
inline std::string to_latex(const VnPoly& p) {
    std::vector<std::pair<std::pair<int, int>, Rational>> sorted(p.poly.terms().begin(), p.poly.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [ij, c] : sorted) {
        Rational a = c;
        const bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? "-" : "+";
        }
        auto mono = [](const char* v, int e) -> std::string {
            if (e == 0) return "";
            std::string s = v;
            if (e != 1) s += "^{" + std::to_string(e) + "}";
            return s;
        };
        std::string num_mono, den_mono;
        for (auto [v, e] : {std::pair<const char*, int>{"t", ij.first}, {"x", ij.second}}) {
            if (e > 0) num_mono += (num_mono.empty() ? "" : " ") + mono(v, e);
            if (e < 0) den_mono += (den_mono.empty() ? "" : " ") + mono(v, -e);
        }
        const Int num = numerator(a), den = denominator(a);
        std::string top = (num == 1 && !num_mono.empty()) ? num_mono
                                                          : num.str() + (num_mono.empty() ? "" : " " + num_mono);
        std::string bottom = den == 1 ? den_mono : den.str() + (den_mono.empty() ? "" : " " + den_mono);
        out += bottom.empty() ? top : "\\frac{" + top + "}{" + bottom + "}";
    }
    return out.empty() ? "0" : out;
}

/// Same pretty form for the Khovanov polynomial (q before t, as printed).
inline std::string to_latex(const KhPoly& p) {
    std::vector<std::pair<std::pair<int, int>, Int>> sorted(p.terms().begin(), p.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [ij, c] : sorted) {
        if (!first) out += "+";
        first = false;
        auto mono = [](const char* v, int e) -> std::string {
            if (e == 0) return "";
            std::string s = v;
            if (e != 1) s += "^{" + std::to_string(e) + "}";
            return s;
        };
        std::string num_mono, den_mono;
        for (auto [v, e] : {std::pair<const char*, int>{"q", ij.second}, {"t", ij.first}}) {
            if (e > 0) num_mono += (num_mono.empty() ? "" : " ") + mono(v, e);
            if (e < 0) den_mono += (den_mono.empty() ? "" : " ") + mono(v, -e);
        }
        std::string top = (c == 1 && !num_mono.empty()) ? num_mono
                                                        : c.str() + (num_mono.empty() ? "" : " " + num_mono);
        out += den_mono.empty() ? top : "\\frac{" + top + "}{" + den_mono + "}";
    }
    return out.empty() ? "0" : out;
}

}  // namespace khv
