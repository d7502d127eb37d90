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

#include <complex>
#include <cstddef>
#include <vector>

#include "qf/error.hpp"

namespace qf {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major, double precision.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix mul(const ComplexMatrix& o) const;
    ComplexMatrix kron(const ComplexMatrix& o) const;
    ComplexMatrix adjoint() const;
    ComplexMatrix scaled(cplx s) const;

    double max_abs() const;
    /// Largest entrywise |difference|; shapes must match.
    double max_abs_diff(const ComplexMatrix& o) const;
    bool is_unitary(double tol) const;

    bool operator==(const ComplexMatrix&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

}  // namespace qf
