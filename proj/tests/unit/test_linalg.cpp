#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "khv/linalg.hpp"

using namespace khv;

namespace {

// Test-side oracle: plain Gaussian elimination over exact rationals.
int rank_by_rational_gauss(const SparseIntMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rational>> a(static_cast<size_t>(nr), std::vector<Rational>(static_cast<size_t>(nc), 0));
    for (const auto& e : m.entries()) a[static_cast<size_t>(e.row)][static_cast<size_t>(e.col)] += e.value;
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int pivot = -1;
        for (int r = rank; r < nr; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(rank)]);
        for (int r = 0; r < nr; ++r) {
            if (r == rank || a[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) continue;
            const Rational f = a[static_cast<size_t>(r)][static_cast<size_t>(c)] /
                               a[static_cast<size_t>(rank)][static_cast<size_t>(c)];
            for (int k = c; k < nc; ++k)
                a[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
                    f * a[static_cast<size_t>(rank)][static_cast<size_t>(k)];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    SparseIntMatrix id3(3, 3);
    for (int k = 0; k < 3; ++k) id3.add(k, k, 1);
    CHECK(rank_over_rationals(id3) == 3);
    CHECK(rank_gf2(id3) == 3);

    SparseIntMatrix prop(2, 2);
    prop.add(0, 0, 2);
    prop.add(0, 1, 4);
    prop.add(1, 0, 1);
    prop.add(1, 1, 2);
    CHECK(rank_over_rationals(prop) == 1);

    SparseIntMatrix empty(0, 5);
    CHECK(rank_over_rationals(empty) == 0);
    CHECK(rank_gf2(empty) == 0);

    SparseIntMatrix zero(4, 4);
    CHECK(rank_over_rationals(zero) == 0);
}

TEST_CASE("GF2 rank reduces mod 2") {
    SparseIntMatrix m(2, 2);
    m.add(0, 0, 2);   // even: zero mod 2
    m.add(1, 1, 3);
    CHECK(rank_over_rationals(m) == 2);
    CHECK(rank_gf2(m) == 1);
}

TEST_CASE("duplicate triplets accumulate") {
    SparseIntMatrix m(1, 1);
    m.add(0, 0, 1);
    m.add(0, 0, -1);
    CHECK(rank_over_rationals(m) == 0);
    CHECK(rank_gf2(m) == 0);
}

TEST_CASE("Bareiss rank agrees with rational Gaussian elimination on random matrices") {
    std::mt19937 rng(1729);
    std::uniform_int_distribution<int> dim(1, 8), val(-3, 3);
    for (int iter = 0; iter < 200; ++iter) {
        const int nr = dim(rng), nc = dim(rng);
        SparseIntMatrix m(nr, nc);
        for (int r = 0; r < nr; ++r)
            for (int c = 0; c < nc; ++c) m.add(r, c, val(rng));
        CHECK(rank_over_rationals(m) == rank_by_rational_gauss(m));
    }
}
