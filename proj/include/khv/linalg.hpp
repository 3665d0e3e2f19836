#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "khv/numeric.hpp"

namespace khv {

/// Sparse integer matrix kept as coordinate triplets.  Entries at repeated
/// coordinates accumulate.
class SparseIntMatrix {
public:
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, std::int64_t v) {
        if (v != 0) entries_.push_back({r, c, v});
    }

    struct Entry {
        int row, col;
        std::int64_t value;
    };
    const std::vector<Entry>& entries() const { return entries_; }

private:
    int rows_, cols_;
    std::vector<Entry> entries_;
};

/// Exact rank over the rationals by fraction-free (Bareiss) elimination on
/// big integers.  Row and column swaps move each pivot into place; the
/// divisions by the previous pivot stay exact.
inline int rank_over_rationals(const SparseIntMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;
    std::vector<std::vector<Int>> a(static_cast<size_t>(nr), std::vector<Int>(static_cast<size_t>(nc), Int(0)));
    for (const auto& e : m.entries()) a[static_cast<size_t>(e.row)][static_cast<size_t>(e.col)] += e.value;

    int rank = 0;
    Int prev = 1;
    const int steps = std::min(nr, nc);
    for (int k = 0; k < steps; ++k) {
        int pr = -1, pc = -1;
        for (int i = k; i < nr && pr < 0; ++i)
            for (int j = k; j < nc; ++j)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        if (pr != k) std::swap(a[static_cast<size_t>(pr)], a[static_cast<size_t>(k)]);
        if (pc != k)
            for (int i = 0; i < nr; ++i)
                std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(pc)], a[static_cast<size_t>(i)][static_cast<size_t>(k)]);
        const Int pivot = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        ++rank;
        for (int i = k + 1; i < nr; ++i) {
            for (int j = k + 1; j < nc; ++j) {
                Int v = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * pivot -
                        a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v / prev;
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = pivot;
    }
    return rank;
}

/// Rank over GF(2): rows as bit vectors, plain Gaussian elimination.
inline int rank_gf2(const SparseIntMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;
    const int words = (nc + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(static_cast<size_t>(nr),
                                                 std::vector<std::uint64_t>(static_cast<size_t>(words), 0));
    for (const auto& e : m.entries())
        if (e.value & 1)
            rows[static_cast<size_t>(e.row)][static_cast<size_t>(e.col) / 64] ^= std::uint64_t(1) << (e.col % 64);

    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        const size_t w = static_cast<size_t>(c) / 64;
        const std::uint64_t bit = std::uint64_t(1) << (c % 64);
        int pivot = -1;
        for (int r = rank; r < nr; ++r)
            if (rows[static_cast<size_t>(r)][w] & bit) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(pivot)], rows[static_cast<size_t>(rank)]);
        for (int r = 0; r < nr; ++r) {
            if (r == rank) continue;
            if (rows[static_cast<size_t>(r)][w] & bit)
                for (size_t k = 0; k < static_cast<size_t>(words); ++k)
                    rows[static_cast<size_t>(r)][k] ^= rows[static_cast<size_t>(rank)][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace khv
