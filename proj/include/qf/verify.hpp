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
#include <optional>
#include <vector>

#include "qf/circuit.hpp"
#include "qf/clifford.hpp"
#include "qf/complex_matrix.hpp"
#include "qf/pattern.hpp"

namespace qf {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::size_t kCircuitWireLimit = 10;
inline constexpr std::size_t kPatternQubitLimit = 12;
inline constexpr std::size_t kPatternMeasureLimit = 10;

/// Linear map realized by one outcome assignment of a pattern, reported
/// unnormalized so that branch comparisons see both direction and
/// magnitude. probability_weight averages the branch probability over the
/// maximally mixed input.
struct BranchReport {
    std::vector<int> branch;  // outcome bits, one per measurement in order
    ComplexMatrix map;
    double probability_weight = 0.0;
};

/// Gate-by-gate product of the circuit, with |+>-initialized wires entering
/// as column isometries. Wire 0 is the most significant index.
ComplexMatrix simulate_circuit_dense(const Circuit& c,
                                     std::size_t max_wires = kCircuitWireLimit);

/// The branch map for one outcome assignment (one bit per measurement, in
/// measurement order).
ComplexMatrix simulate_pattern_branch(const MeasurementPattern& p,
                                      const std::vector<int>& outcomes,
                                      std::size_t max_qubits = kPatternQubitLimit);

/// All 2^N branch maps, ordered by branch bits read big-endian over the
/// measurement order.
std::vector<BranchReport> simulate_pattern_branches(
    const MeasurementPattern& p, std::size_t max_qubits = kPatternQubitLimit,
    std::size_t max_measured = kPatternMeasureLimit);

/// The scalar c with a = c * b entrywise within tol, pivoting on the
/// largest-magnitude entry of b, or nullopt. Throws on shape mismatch or
/// an identically zero b.
std::optional<std::complex<double>> proportional_up_to_scalar(const ComplexMatrix& a,
                                                              const ComplexMatrix& b,
                                                              double tol = kDefaultTol);

/// Dense matrix of a Pauli word on n qubits (qubit 0 most significant).
ComplexMatrix pauli_matrix(const PauliOperator& p);

/// Indices t of the Pauli generators whose conjugation by u disagrees with
/// the tableau, empty when u realizes it. Throws PreconditionError when u
/// is not unitary within tol.
std::vector<std::size_t> check_pauli_conjugation(const ComplexMatrix& u,
                                                 const LeuvenTableau& tab,
                                                 double tol = kDefaultTol);

}  // namespace qf
