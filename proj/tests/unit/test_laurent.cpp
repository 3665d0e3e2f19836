#include <catch2/catch_amalgamated.hpp>

#include "khv/laurent.hpp"

using namespace khv;

TEST_CASE("Laurent1 arithmetic collects and drops zeros") {
    Laurent1<Int> p;
    p.add(1, Int(1));
    p.add(-1, Int(1));
    p.add(1, Int(2));
    CHECK(p.coeff(1) == 3);
    p.add(1, Int(-3));
    CHECK(p.coeff(1) == 0);
    CHECK(p.terms().size() == 1);

    Laurent1<Int> q = Laurent1<Int>::monomial(2, Int(5));
    auto r = p + q;
    CHECK(r.coeff(-1) == 1);
    CHECK(r.coeff(2) == 5);
    r -= r;
    CHECK(r.is_zero());
}

TEST_CASE("Laurent1 multiplication and shift") {
    // (q + q^-1)^2 = q^2 + 2 + q^-2
    Laurent1<Int> d;
    d.add(1, Int(1));
    d.add(-1, Int(1));
    auto sq = d * d;
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(0) == 2);
    CHECK(sq.coeff(-2) == 1);
    CHECK(sq.terms().size() == 3);
    CHECK(d.shifted(3).coeff(4) == 1);
    CHECK(d.eval_at_one() == 2);
}

TEST_CASE("divide_exact recovers quotients and rejects non-multiples") {
    Laurent1<Int> den;
    den.add(1, Int(1));
    den.add(-1, Int(1));

    // J(right trefoil) / (q + q^-1) = q^2 + q^6 - q^8
    Laurent1<Int> j;
    j.add(1, Int(1));
    j.add(3, Int(1));
    j.add(5, Int(1));
    j.add(9, Int(-1));
    auto w = divide_exact(j, den);
    Laurent1<Int> expect;
    expect.add(2, Int(1));
    expect.add(6, Int(1));
    expect.add(8, Int(-1));
    CHECK(w == expect);
    CHECK(w * den == j);

    Laurent1<Int> one = Laurent1<Int>::monomial(0, Int(1));
    CHECK_THROWS_AS(divide_exact(one, den), InexactDivision);

    Laurent1<Int> odd;  // q^2 + q: remainder survives
    odd.add(2, Int(1));
    odd.add(1, Int(1));
    CHECK_THROWS_AS(divide_exact(odd, den), InexactDivision);
}

TEST_CASE("render_poly matches the canonical examples") {
    std::vector<TextTerm<Int>> kh_like = {
        {Int(1), {{'q', -5}, {'t', -2}}}, {Int(1), {{'q', -1}, {'t', -1}}}, {Int(1), {{'q', -1}, {'t', 0}}},
        {Int(1), {{'q', 1}, {'t', 0}}},   {Int(1), {{'q', 1}, {'t', 1}}},   {Int(1), {{'q', 5}, {'t', 2}}},
    };
    CHECK(render_poly(kh_like) == "q^-5*t^-2 + q^-1*t^-1 + q^-1 + q + q*t + q^5*t^2");

    std::vector<TextTerm<Rational>> vn_like = {
        {Rational(9), {{'t', 3}, {'x', 9}}},
        {Rational(5), {{'t', 2}, {'x', 5}}},
        {Rational(3), {{'x', 3}}},
        {Rational(1), {{'x', 1}}},
    };
    CHECK(render_poly(vn_like) == "9*t^3*x^9 + 5*t^2*x^5 + 3*x^3 + x");

    std::vector<TextTerm<Rational>> with_fractions = {
        {Rational(81, 2), {{'t', 3}, {'x', 9}}},
        {Rational(-1, 2), {{'x', -1}}},
    };
    CHECK(render_poly(with_fractions) == "81/2*t^3*x^9 - 1/2*x^-1");

    CHECK(render_poly(std::vector<TextTerm<Int>>{}) == "0");
    CHECK(render_poly(std::vector<TextTerm<Int>>{{Int(-3), {}}}) == "-3");
}

TEST_CASE("parse_poly round-trips and rejects malformed input") {
    auto p = parse_poly2<Rational>("81/2*t^3*x^9 + 25/2*t^2*x^5 + 9/2*x^3 + 1/2*x", 't', 'x');
    CHECK(p.coeff(3, 9) == Rational(81, 2));
    CHECK(p.coeff(2, 5) == Rational(25, 2));
    CHECK(p.coeff(0, 3) == Rational(9, 2));
    CHECK(p.coeff(0, 1) == Rational(1, 2));

    auto q = parse_poly2<Int>("q^-5*t^-2 + 2*q^-1 + q", 't', 'q');
    CHECK(q.coeff(-2, -5) == 1);
    CHECK(q.coeff(0, -1) == 2);
    CHECK(q.coeff(0, 1) == 1);

    auto one_var = parse_poly1<Int>("-q^9 + q^5 + q^3 + q", 'q');
    CHECK(one_var.coeff(9) == -1);
    CHECK(one_var.eval_at_one() == 2);

    CHECK(parse_poly1<Int>("1 - 1", 'q').is_zero());

    CHECK_THROWS_AS(parse_poly1<Int>("", 'q'), MalformedTerm);
    CHECK_THROWS_AS(parse_poly1<Int>("q +", 'q'), MalformedTerm);
    CHECK_THROWS_AS(parse_poly1<Int>("q^", 'q'), MalformedTerm);
    CHECK_THROWS_AS(parse_poly1<Int>("3*", 'q'), MalformedTerm);
    CHECK_THROWS_AS(parse_poly1<Int>("z^2", 'q'), MalformedTerm);
    CHECK_THROWS_AS(parse_poly1<Int>("1/2*q", 'q'), MalformedTerm);  // integer coefficients only
    CHECK_THROWS_AS(parse_poly2<Rational>("1/0*x", 't', 'x'), MalformedTerm);
}
