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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "qf/error.hpp"

namespace qf {

/// Dense bit vector packed into 64-bit words.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static BitVector from_bits(std::initializer_list<int> bits) {
        BitVector v(bits.size());
        std::size_t i = 0;
        for (int b : bits) v.set(i++, b != 0);
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i % 64);
        if (v)
            words_[i / 64] |= mask;
        else
            words_[i / 64] &= ~mask;
    }

    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t(1) << (i % 64); }

    BitVector& operator^=(const BitVector& o) {
        if (o.size_ != size_) throw DimensionError("bit vector length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    /// Parity of the AND with another vector (the GF(2) inner product).
    bool dot(const BitVector& o) const {
        if (o.size_ != size_) throw DimensionError("bit vector length mismatch");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return __builtin_parityll(acc);
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool operator==(const BitVector&) const = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix with machine-word-packed rows, so row operations are
/// word-parallel XORs.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        BitMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw DimensionError("ragged row list");
            std::size_t j = 0;
            for (int b : row) m.set(i, j++, b != 0);
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (c % 64);
        if (v)
            data_[r * wpr_ + c / 64] |= mask;
        else
            data_[r * wpr_ + c / 64] &= ~mask;
    }

    /// row dst ^= row src
    void row_xor(std::size_t dst, std::size_t src) {
        std::uint64_t* d = &data_[dst * wpr_];
        const std::uint64_t* s = &data_[src * wpr_];
        for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
    }

    /// row dst ^= row src of another matrix with the same column count.
    void row_xor_from(std::size_t dst, const BitMatrix& other, std::size_t src) {
        if (other.cols_ != cols_) throw DimensionError("row_xor_from: column count mismatch");
        std::uint64_t* d = &data_[dst * wpr_];
        const std::uint64_t* s = &other.data_[src * wpr_];
        for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < wpr_; ++w)
            std::swap(data_[a * wpr_ + w], data_[b * wpr_ + w]);
    }

    /// col dst ^= col src
    void col_xor(std::size_t dst, std::size_t src) {
        for (std::size_t r = 0; r < rows_; ++r)
            if (get(r, src)) set(r, dst, !get(r, dst));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) {
            bool x = get(r, a);
            bool y = get(r, b);
            set(r, a, y);
            set(r, b, x);
        }
    }

    BitVector row(std::size_t r) const {
        BitVector v(cols_);
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) v.set(c, true);
        return v;
    }

    BitVector col(std::size_t c) const {
        BitVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (get(r, c)) v.set(r, true);
        return v;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    BitVector mul(const BitVector& v) const {
        if (v.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
        BitVector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint64_t acc = 0;
            const std::uint64_t* rw = &data_[r * wpr_];
            for (std::size_t w = 0; w < wpr_; ++w) acc ^= rw[w] & word(v, w);
            if (__builtin_parityll(acc)) out.set(r, true);
        }
        return out;
    }

    bool operator==(const BitMatrix&) const = default;

  private:
    static std::uint64_t word(const BitVector& v, std::size_t w) {
        // BitVector exposes bits only; rebuild the word lazily.
        std::uint64_t out = 0;
        std::size_t base = w * 64;
        for (std::size_t b = 0; b < 64 && base + b < v.size(); ++b)
            if (v.get(base + b)) out |= std::uint64_t(1) << b;
        return out;
    }

    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Product over GF(2). Throws DimensionError unless a.cols == b.rows.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

/// Inverse over GF(2). Throws SingularError when rank < n.
BitMatrix invert(const BitMatrix& m);

std::size_t gf2_rank(BitMatrix m);

/// Invertible factors of the rank normal form: invert(r1t) * g * r2t equals
/// the block matrix with I_rank in the lower-right corner and zeros elsewhere.
struct RankNormalForm {
    BitMatrix r1t;
    BitMatrix r2t;
    std::size_t rank = 0;
};

RankNormalForm rank_normal_decompose(const BitMatrix& g);

/// Vector of diagonal entries of a square matrix.
BitVector diag_vec(const BitMatrix& m);

/// For a 2n x 2n matrix M, the vector diag(M^T [[0,I],[0,0]] M); entry t is
/// the GF(2) inner product of the top and bottom halves of column t.
BitVector d_vec(const BitMatrix& m);

/// Strictly lower-triangular part (everything on or above the diagonal
/// zeroed).
BitMatrix lower_strict(const BitMatrix& m);

/// A solution x of a*x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<BitVector> solve_affine(const BitMatrix& a, const BitVector& b);

/// Index of a bit vector read big-endian (entry 0 is the most significant
/// bit); the repo-wide basis-index convention.
std::size_t bits_to_index(const BitVector& v);

BitVector index_to_bits(std::size_t index, std::size_t n);

}  // namespace qf
