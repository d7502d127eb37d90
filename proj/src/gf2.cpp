// Copyright 2026 The qformc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qf/gf2.hpp"

#include <algorithm>
#include <cassert>

namespace qf {

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k)) out.row_xor_from(i, b, k);
    return out;
}

BitMatrix invert(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("invert: matrix not square");
    std::size_t n = m.rows();
    BitMatrix work = m;
    BitMatrix inv = BitMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !work.get(pivot, col)) ++pivot;
        if (pivot == n) throw SingularError("invert: singular matrix");
        work.swap_rows(col, pivot);
        inv.swap_rows(col, pivot);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && work.get(r, col)) {
                work.row_xor(r, col);
                inv.row_xor(r, col);
            }
        }
    }
    return inv;
}

std::size_t gf2_rank(BitMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(rank, pivot);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank && m.get(r, col)) m.row_xor(r, rank);
        ++rank;
    }
    return rank;
}

RankNormalForm rank_normal_decompose(const BitMatrix& g) {
    if (g.rows() != g.cols()) throw DimensionError("rank_normal_decompose: matrix not square");
    std::size_t n = g.rows();
    BitMatrix work = g;
    // Invariant: work = inv(r1t) * g * r2t. Row operation E applied to work
    // multiplies inv(r1t) on the left, so r1t picks up E^-1 on the right;
    // every GF(2) elementary row operation is its own inverse, and right
    // multiplication by it is the mirrored column operation on r1t.
    BitMatrix r1t = BitMatrix::identity(n);
    BitMatrix r2t = BitMatrix::identity(n);

    auto row_add = [&](std::size_t dst, std::size_t src) {
        work.row_xor(dst, src);
        r1t.col_xor(src, dst);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        work.swap_rows(a, b);
        r1t.swap_cols(a, b);
    };
    auto col_add = [&](std::size_t dst, std::size_t src) {
        work.col_xor(dst, src);
        r2t.col_xor(dst, src);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        work.swap_cols(a, b);
        r2t.swap_cols(a, b);
    };

    // Gauss-Jordan with recorded operations: leave one 1 per pivot row and
    // column.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < n && next_row < n; ++col) {
        std::size_t pivot = next_row;
        while (pivot < n && !work.get(pivot, col)) ++pivot;
        if (pivot == n) continue;
        row_swap(next_row, pivot);
        for (std::size_t r = 0; r < n; ++r)
            if (r != next_row && work.get(r, col)) row_add(r, next_row);
        pivots.emplace_back(next_row, col);
        ++next_row;
    }
    // Clear the rest of each pivot row with column operations; the pivot
    // column has a single 1, so only the pivot row changes.
    for (auto [pr, pc] : pivots) {
        for (std::size_t c = 0; c < n; ++c)
            if (c != pc && work.get(pr, c)) col_add(c, pc);
    }
    // Move the r pivot 1s into the lower-right corner.
    std::size_t r = pivots.size();
    for (std::size_t k = 0; k < r; ++k) {
        auto [pr, pc] = pivots[k];
        std::size_t tr = n - r + k;
        std::size_t tc = n - r + k;
        if (pr != tr) {
            row_swap(pr, tr);
            for (auto& [qr, qc] : pivots)
                if (qr == tr) qr = pr;
            pivots[k].first = tr;
        }
        if (pc != tc) {
            col_swap(pc, tc);
            for (auto& [qr, qc] : pivots)
                if (qc == tc) qc = pc;
            pivots[k].second = tc;
        }
    }
    return RankNormalForm{std::move(r1t), std::move(r2t), r};
}

BitVector diag_vec(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("diag_vec: matrix not square");
    BitVector v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m.get(i, i)) v.set(i, true);
    return v;
}

BitVector d_vec(const BitMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw DimensionError("d_vec: matrix must be 2n x 2n");
    std::size_t n = m.rows() / 2;
    BitVector v(2 * n);
    for (std::size_t t = 0; t < 2 * n; ++t) {
        bool acc = false;
        for (std::size_t i = 0; i < n; ++i) acc ^= m.get(i, t) && m.get(n + i, t);
        if (acc) v.set(t, true);
    }
    return v;
}

BitMatrix lower_strict(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("lower_strict: matrix not square");
    BitMatrix out(m.rows(), m.cols());
    for (std::size_t i = 1; i < m.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m.get(i, j)) out.set(i, j, true);
    return out;
}

std::optional<BitVector> solve_affine(const BitMatrix& a, const BitVector& b) {
    if (a.rows() != b.size()) throw DimensionError("solve_affine: rhs length mismatch");
    std::size_t rows = a.rows();
    std::size_t cols = a.cols();
    // Augmented elimination on [a | b].
    BitMatrix aug(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            if (a.get(r, c)) aug.set(r, c, true);
        if (b.get(r)) aug.set(r, cols, true);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && !aug.get(pivot, col)) ++pivot;
        if (pivot == rows) continue;
        aug.swap_rows(rank, pivot);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && aug.get(r, col)) aug.row_xor(r, rank);
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (aug.get(r, cols)) return std::nullopt;
    BitVector x(cols);
    for (std::size_t k = 0; k < rank; ++k)
        if (aug.get(k, cols)) x.set(pivot_col[k], true);
    return x;
}

std::size_t bits_to_index(const BitVector& v) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) idx = (idx << 1) | (v.get(i) ? 1u : 0u);
    return idx;
}

BitVector index_to_bits(std::size_t index, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((index >> (n - 1 - i)) & 1u) v.set(i, true);
    return v;
}

}  // namespace qf
