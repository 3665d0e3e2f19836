#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "khv/errors.hpp"
#include "khv/numeric.hpp"

namespace khv {

/// Sparse Laurent polynomial in one variable: exponent -> coefficient.
/// Zero coefficients are never stored.
template <class C>
class Laurent1 {
public:
    using Map = std::map<int, C>;

    Laurent1() = default;

    static Laurent1 monomial(int exp, C coeff) {
        Laurent1 p;
        p.add(exp, std::move(coeff));
        return p;
    }

    void add(int exp, const C& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(exp, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    C coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? C(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }

    int min_exp() const {
        if (is_zero()) throw EmptyPolynomial("min_exp of zero polynomial");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw EmptyPolynomial("max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    Laurent1& operator+=(const Laurent1& o) {
        if (this == &o) {
            for (auto& [e, c] : terms_) c += c;
            return *this;
        }
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    Laurent1& operator-=(const Laurent1& o) {
        if (this == &o) {
            terms_.clear();
            return *this;
        }
        for (const auto& [e, c] : o.terms_) add(e, C(-c));
        return *this;
    }
    friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { return a += b; }
    friend Laurent1 operator-(Laurent1 a, const Laurent1& b) { return a -= b; }

    friend Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
        Laurent1 r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, C(ca * cb));
        return r;
    }

    Laurent1& operator*=(const C& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    /// Multiply by var^k.
    Laurent1 shifted(int k) const {
        Laurent1 r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    /// Sum of all coefficients (the value at var = 1).
    C eval_at_one() const {
        C s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool operator==(const Laurent1&) const = default;

private:
    Map terms_;
};

/// Exact Laurent division; throws InexactDivision if `den` does not divide
/// `num` exactly (nonzero remainder or a non-exact coefficient quotient).
template <class C>
Laurent1<C> divide_exact(Laurent1<C> num, const Laurent1<C>& den) {
    if (den.is_zero()) throw InexactDivision("division by zero polynomial");
    if (num.is_zero()) return {};
    Laurent1<C> q;
    const int dlead = den.max_exp();
    const C dc = den.coeff(dlead);
    // In an exact division the quotient's lowest exponent is fixed by the
    // bottom ends; dipping below it means the remainder cannot clear.
    const int qfloor = num.min_exp() - den.min_exp();
    while (!num.is_zero()) {
        const int e = num.max_exp();
        if (e - dlead < qfloor) throw InexactDivision("nonzero remainder");
        C f;
        if constexpr (std::is_same_v<C, Int>) {
            if (num.coeff(e) % dc != 0) throw InexactDivision("coefficient not divisible");
            f = num.coeff(e) / dc;
        } else {
            f = num.coeff(e) / dc;
        }
        q.add(e - dlead, f);
        Laurent1<C> sub = den.shifted(e - dlead);
        sub *= f;
        num -= sub;
        if (!num.is_zero() && num.max_exp() >= e) throw InexactDivision("remainder does not reduce");
    }
    return q;
}

/// Sparse Laurent polynomial in two variables; key is (first exponent,
/// second exponent) in the map's natural lexicographic order.
template <class C>
class Laurent2 {
public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, C>;

    Laurent2() = default;

    void add(int e1, int e2, const C& coeff) {
        if (coeff == 0) return;
        Key k{e1, e2};
        auto [it, inserted] = terms_.try_emplace(k, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    C coeff(int e1, int e2) const {
        auto it = terms_.find(Key{e1, e2});
        return it == terms_.end() ? C(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }

    Laurent2& operator+=(const Laurent2& o) {
        if (this == &o) {
            for (auto& [k, c] : terms_) c += c;
            return *this;
        }
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
        return *this;
    }
    friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }

    Laurent2& operator*=(const C& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    bool operator==(const Laurent2&) const = default;

private:
    Map terms_;
};

// ---------------------------------------------------------------------------
// Canonical text form.
//
// A polynomial prints as terms joined by " + " / " - ".  Each term is
// coefficient (omitted when 1), then the variables with nonzero exponent as
// `v` or `v^k`, all joined by `*`.  Rational coefficients print as `p/q`.
// Examples: `q^-5*t^-2 + q^-1 + q`, `81/2*t^3*x^9 + 1/2*x`, `0`.
// ---------------------------------------------------------------------------

inline std::string format_coeff(const Int& c) { return c.str(); }
inline std::string format_coeff(const Rational& c) {
    std::string s = numerator(c).str();
    if (denominator(c) != 1) s += "/" + denominator(c).str();
    return s;
}

/// One rendered term: coefficient plus (variable, exponent) factors.
template <class C>
struct TextTerm {
    C coeff;
    std::vector<std::pair<char, int>> powers;  // print order; exponent 0 entries skipped
};

template <class C>
std::string render_poly(const std::vector<TextTerm<C>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        C a = t.coeff;
        const bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (const auto& [v, e] : t.powers) {
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += format_coeff(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += format_coeff(a) + "*" + mono;
        }
    }
    return out;
}

namespace detail {

// Recursive-descent scanner for the canonical text form.  `vars` lists the
// accepted variable letters; exponents are returned in that order.
class PolyScanner {
public:
    PolyScanner(std::string_view text, std::string_view vars) : s_(text), vars_(vars) {}

    // term list: (exponents per var, coefficient)
    std::vector<std::pair<std::vector<int>, Rational>> parse() {
        std::vector<std::pair<std::vector<int>, Rational>> out;
        skip_ws();
        if (eof()) throw MalformedTerm("empty polynomial text");
        bool neg = eat_sign();
        for (;;) {
            auto [exps, coeff] = parse_term();
            if (neg) coeff = -coeff;
            out.emplace_back(std::move(exps), std::move(coeff));
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                neg = (c == '-');
                skip_ws();
            } else {
                throw MalformedTerm("unexpected character '" + std::string(1, c) + "' in polynomial");
            }
        }
        return out;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool eat_sign() {
        if (!eof() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    Int parse_uint() {
        if (eof() || !isdigit(static_cast<unsigned char>(peek())))
            throw MalformedTerm("expected number in polynomial text");
        std::string digits;
        while (!eof() && isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
        return Int(digits);
    }

    int parse_exponent() {
        bool neg = false;
        if (!eof() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos_;
        }
        Int v = parse_uint();
        if (v > 1000000) throw MalformedTerm("exponent out of range");
        int e = static_cast<int>(v.convert_to<long>());
        return neg ? -e : e;
    }

    int var_index(char c) const {
        auto p = vars_.find(c);
        return p == std::string_view::npos ? -1 : static_cast<int>(p);
    }

    std::pair<std::vector<int>, Rational> parse_term() {
        std::vector<int> exps(vars_.size(), 0);
        Rational coeff = 1;
        bool have_coeff = false, have_var = false;
        if (!eof() && isdigit(static_cast<unsigned char>(peek()))) {
            Int num = parse_uint();
            Int den = 1;
            skip_ws();
            if (!eof() && peek() == '/') {
                ++pos_;
                skip_ws();
                den = parse_uint();
                if (den == 0) throw MalformedTerm("zero denominator");
            }
            coeff = Rational(num, den);
            have_coeff = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (eof() || var_index(peek()) < 0)
                    throw MalformedTerm("dangling '*' in polynomial term");
            }
        }
        while (!eof() && var_index(peek()) >= 0) {
            int vi = var_index(peek());
            ++pos_;
            int e = 1;
            if (!eof() && peek() == '^') {
                ++pos_;
                e = parse_exponent();
            }
            exps[static_cast<size_t>(vi)] += e;
            have_var = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (eof() || var_index(peek()) < 0)
                    throw MalformedTerm("dangling '*' in polynomial term");
            }
        }
        if (!have_coeff && !have_var) throw MalformedTerm("empty term in polynomial text");
        return {exps, coeff};
    }

    std::string_view s_;
    std::string_view vars_;
    size_t pos_ = 0;
};

template <class C>
C coeff_from_rational(const Rational& r) {
    if constexpr (std::is_same_v<C, Int>) {
        if (denominator(r) != 1) throw MalformedTerm("expected integer coefficient, got " + format_coeff(r));
        return numerator(r);
    } else {
        return r;
    }
}

}  // namespace detail

/// Parse canonical text with a single variable letter.
template <class C>
Laurent1<C> parse_poly1(std::string_view text, char var) {
    detail::PolyScanner sc(text, std::string_view(&var, 1));
    Laurent1<C> p;
    for (auto& [exps, coeff] : sc.parse()) p.add(exps[0], detail::coeff_from_rational<C>(coeff));
    return p;
}

/// Parse canonical text with two variable letters; key order is (var1, var2)
/// regardless of the order the variables appear in the text.
template <class C>
Laurent2<C> parse_poly2(std::string_view text, char var1, char var2) {
    char vars[2] = {var1, var2};
    detail::PolyScanner sc(text, std::string_view(vars, 2));
    Laurent2<C> p;
    for (auto& [exps, coeff] : sc.parse()) p.add(exps[0], exps[1], detail::coeff_from_rational<C>(coeff));
    return p;
}

}  // namespace khv
