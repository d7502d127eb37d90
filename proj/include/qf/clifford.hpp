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

#include <cstdint>
#include <string>
#include <vector>

#include "qf/circuit.hpp"
#include "qf/gf2.hpp"
#include "qf/pattern.hpp"
#include "qf/qfe.hpp"

namespace qf {

/// How an n-qubit Clifford unitary conjugates the 2n Pauli generators:
/// column t of c holds the X part (rows 0..n-1) and Z part (rows n..2n-1)
/// of the image of P_t, where P_t = X_t for t < n and Z_{t-n} otherwise;
/// h_t carries the sign. The hidden i^{d_t(c)} factor keeping images
/// Hermitian is a function of c, not stored.
struct LeuvenTableau {
    BitMatrix c;  // 2n x 2n
    BitVector h;  // length 2n

    std::size_t num_qubits() const { return c.rows() / 2; }
};

/// Pauli word in the canonical form i^phase_quarter * prod_j X_j^x Z_j^z.
struct PauliOperator {
    int phase_quarter = 0;
    BitVector x_bits;
    BitVector z_bits;

    static PauliOperator identity(std::size_t n) {
        return PauliOperator{0, BitVector(n), BitVector(n)};
    }

    bool commutes_with(const PauliOperator& o) const {
        return !(x_bits.dot(o.z_bits) ^ z_bits.dot(o.x_bits));
    }

    bool acts_on(std::size_t q) const { return x_bits.get(q) || z_bits.get(q); }

    PauliOperator& operator*=(const PauliOperator& o) {
        phase_quarter =
            (phase_quarter + o.phase_quarter + (z_bits.dot(o.x_bits) ? 2 : 0)) % 4;
        x_bits ^= o.x_bits;
        z_bits ^= o.z_bits;
        return *this;
    }

    bool operator==(const PauliOperator&) const = default;
};

/// Result of rewriting a tableau into a genuine expansion: the QFE runs over
/// V_b + V_c (inputs), V_r, the auxiliary ladder V_a, and the output copies
/// V_b' + V_r (outputs); r is the rank of the tableau's lower-left block and
/// r1, r2, t the change-of-variables metadata.
struct CliffordExpansion {
    QFE qfe;
    std::size_t r = 0;
    BitMatrix r1;
    BitMatrix r2;
    BitVector t;

    std::size_t num_qubits() const { return (qfe.size() + r) / 3; }
};

/// Empty when c is invertible and preserves the GF(2) symplectic form
/// (images of the generators commute/anticommute exactly as the generators
/// do); otherwise a list of violations.
std::vector<std::string> validate_tableau(const LeuvenTableau& tab);

/// The matrix-formula route from a tableau to a QFE: split off the rank
/// normal form of the lower-left block, build the two symmetric coupling
/// matrices and their strictly-lower parts, change variables on the input
/// and output bits, and splice in the auxiliary ladder that separates the
/// overlapping input/output indices. All cross terms come out in {0, pi}
/// and all square terms in multiples of pi/2.
CliffordExpansion clifford_to_qfe(const LeuvenTableau& tab);

/// Completes the expansion's positive branch into a full pattern by
/// simulating the graph-state stabilizer code: measuring u consumes a
/// generator anticommuting with u's observable, whose restriction to the
/// unmeasured qubits is the correction steered by s_u. X/Z correction
/// formulas accumulate per qubit as affine signal forms; measurements need
/// no adaptation.
MeasurementPattern interpolate_corrections(const CliffordExpansion& exp);

/// clifford_to_qfe then interpolate_corrections: a complete pattern on
/// 3n - r qubits with n - r auxiliaries.
MeasurementPattern clifford_pattern(const LeuvenTableau& tab);

/// Conjugation bookkeeping for a circuit over {H, S, CZ}; S is Z^(1/2).
LeuvenTableau tableau_from_clifford_circuit(const Circuit& c);

/// Tableau of a random word of Theta(n^2) gates over {H, S, CZ};
/// deterministic in the seed.
LeuvenTableau random_tableau(std::size_t n, std::uint64_t seed);

}  // namespace qf
