#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "khv/homology.hpp"
#include "support/braid_gen.hpp"

using namespace khv;

namespace {

const char* kRightTrefoil = "X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)";
const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
const char* kTrefoilKinked = "X(6,2,7,1) X(8,6,1,5) X(4,8,5,7) X(2,4,3,3)";

BigradedRanks ranks_of(const char* pd, Ring ring = Ring::rationals) {
    return homology_ranks(Diagram::parse_pd(pd), ring);
}

void check_dd_zero(const Diagram& d) {
    for (const auto& s : enumerate_enhanced(d)) {
        std::map<EnhancedState, long long> acc;
        for (const auto& t1 : differential(d, s)) {
            CHECK(t1.state.i == s.i + 1);
            CHECK(t1.state.j == s.j);
            for (const auto& t2 : differential(d, t1.state)) acc[t2.state] += t1.coeff * t2.coeff;
        }
        for (const auto& [st, c] : acc) CHECK(c == 0);
    }
}

}  // namespace

TEST_CASE("differential vanishes without positive markers") {
    auto u = Diagram::parse_pd("U");
    for (const auto& s : enumerate_enhanced(u)) CHECK(differential(u, s).empty());

    auto d = Diagram::parse_pd(kRightTrefoil);
    for (const auto& s : enumerate_enhanced(d))
        if (s.markers == 0b111) CHECK(differential(d, s).empty());
}

TEST_CASE("switching the kink marker splits a positive circle") {
    // Negative kink: the positive marker resolves to one circle.
    auto d = Diagram::parse_pd("X(1,2,2,1)");
    auto cs = resolve(d, 0);
    REQUIRE(cs.count == 1);
    auto s = make_enhanced(d, 0, cs, 0);  // circle sign +
    auto terms = differential(d, s);
    REQUIRE(terms.size() == 2);
    for (const auto& t : terms) {
        CHECK(t.coeff == 1);
        CHECK(t.state.n_circles == 2);
        CHECK(t.state.j == s.j);
        CHECK(t.state.i == s.i + 1);
        // exactly one of the two circles is negative
        CHECK(std::popcount(t.state.circle_signs & 0b11u) == 1);
    }
    CHECK(terms[0].state.circle_signs != terms[1].state.circle_signs);

    // A negative circle splits into (-,-).
    auto sneg = make_enhanced(d, 0, cs, 0b1);
    auto tneg = differential(d, sneg);
    REQUIRE(tneg.size() == 1);
    CHECK((tneg[0].state.circle_signs & 0b11u) == 0b11u);
}

TEST_CASE("homology of the unknot and its kinked presentations") {
    BigradedRanks expect;
    expect.ranks[{0, -1}] = 1;
    expect.ranks[{0, 1}] = 1;
    CHECK(ranks_of("U") == expect);
    CHECK(ranks_of("X(1,1,2,2)") == expect);
    CHECK(ranks_of("X(1,2,2,1)") == expect);
}

TEST_CASE("homology of the right trefoil matches the table row") {
    BigradedRanks expect;
    expect.ranks[{0, 1}] = 1;
    expect.ranks[{0, 3}] = 1;
    expect.ranks[{2, 5}] = 1;
    expect.ranks[{3, 9}] = 1;
    CHECK(ranks_of(kRightTrefoil) == expect);
}

TEST_CASE("homology of the figure-eight matches the table row") {
    BigradedRanks expect;
    expect.ranks[{-2, -5}] = 1;
    expect.ranks[{-1, -1}] = 1;
    expect.ranks[{0, -1}] = 1;
    expect.ranks[{0, 1}] = 1;
    expect.ranks[{1, 1}] = 1;
    expect.ranks[{2, 5}] = 1;
    CHECK(ranks_of(kFigureEight) == expect);
}

TEST_CASE("homology of the positive Hopf link") {
    BigradedRanks expect;
    expect.ranks[{0, 0}] = 1;
    expect.ranks[{0, 2}] = 1;
    expect.ranks[{2, 4}] = 1;
    expect.ranks[{2, 6}] = 1;
    CHECK(ranks_of("X(1,3,2,4) X(3,1,4,2)") == expect);
}

TEST_CASE("two trefoil presentations share one homology") {
    CHECK(ranks_of(kRightTrefoil) == ranks_of(kTrefoilKinked));
}

TEST_CASE("mirror duality on ranks") {
    auto d = Diagram::parse_pd(kRightTrefoil);
    auto r = homology_ranks(d);
    auto rm = homology_ranks(d.mirrored());
    CHECK(rm.ranks.size() == r.ranks.size());
    for (const auto& [ij, rank] : r.ranks) CHECK(rm.rank(-ij.first, -ij.second) == rank);

    // the figure-eight is its own mirror
    auto f = homology_ranks(Diagram::parse_pd(kFigureEight));
    for (const auto& [ij, rank] : f.ranks) CHECK(f.rank(-ij.first, -ij.second) == rank);
}

TEST_CASE("GF2 ranks extend the rational ranks by torsion pairs") {
    // Torsion-free cases agree exactly.
    for (const char* pd : {"U", "X(1,1,2,2)", "U U"})
        CHECK(ranks_of(pd, Ring::rationals) == ranks_of(pd, Ring::gf2));

    // The right trefoil carries one Z/2 (at H^{3,7}): by universal
    // coefficients the GF2 table gains exactly (2,7) and (3,7).
    auto q = ranks_of(kRightTrefoil, Ring::rationals);
    auto f2 = ranks_of(kRightTrefoil, Ring::gf2);
    BigradedRanks expect = q;
    expect.ranks[{2, 7}] = 1;
    expect.ranks[{3, 7}] = 1;
    CHECK(f2 == expect);

    // General cross-ring facts: GF2 dominates pointwise, and the per-j Euler
    // characteristics (the Jones coefficients) are field independent.
    for (const char* pd : {kRightTrefoil, kFigureEight, "X(1,3,2,4) X(3,1,4,2)"}) {
        auto rq = ranks_of(pd, Ring::rationals);
        auto rf = ranks_of(pd, Ring::gf2);
        for (const auto& [ij, rank] : rq.ranks) CHECK(rf.rank(ij.first, ij.second) >= rank);
        std::map<int, long long> euler_q, euler_f;
        for (const auto& [ij, rank] : rq.ranks) euler_q[ij.second] += (ij.first % 2 ? -rank : rank);
        for (const auto& [ij, rank] : rf.ranks) euler_f[ij.second] += (ij.first % 2 ? -rank : rank);
        std::erase_if(euler_q, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(euler_f, [](const auto& kv) { return kv.second == 0; });
        CHECK(euler_q == euler_f);
    }
}

TEST_CASE("d after d is zero on fixed and random diagrams") {
    for (const char* pd : {"U", "X(1,1,2,2)", kRightTrefoil, kFigureEight, "X(1,3,2,4) X(3,1,4,2)"})
        check_dd_zero(Diagram::parse_pd(pd));

    std::mt19937 rng(424242);
    for (int iter = 0; iter < 25; ++iter) {
        auto d = testsupport::random_diagram(rng, 5);
        check_dd_zero(d);
    }
}

TEST_CASE("homology_ranks enforces the crossing budget") {
    std::vector<std::pair<int, int>> word(15, {0, 1});
    auto d = Diagram::parse_pd(testsupport::braid_closure_pd(2, word));
    CHECK(d.n_crossings() == 15);
    CHECK_THROWS_AS(homology_ranks(d), TooLarge);
}
