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

#include "qf/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qf {

ComplexMatrix ComplexMatrix::mul(const ComplexMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product: inner dimensions differ");
    ComplexMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            cplx a = at(i, k);
            if (a == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix& o) const {
    ComplexMatrix out(rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            cplx a = at(i, j);
            if (a == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    out.at(i * o.rows_ + k, j * o.cols_ + l) = a * o.at(k, l);
        }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::scaled(cplx s) const {
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) *= s;
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        m = std::max(m, std::abs(data_[i] - o.data_[i]));
    return m;
}

bool ComplexMatrix::is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    ComplexMatrix prod = mul(adjoint());
    return prod.max_abs_diff(identity(rows_)) <= tol;
}

}  // namespace qf
