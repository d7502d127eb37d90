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

#include "qf/circuit.hpp"
#include "qf/flows.hpp"
#include "qf/pattern.hpp"
#include "qf/qfe.hpp"

namespace qf {

/// Measurement pattern for a unit-weight QFE certified by a gflow: entangle
/// along the geometry's edges, measure each non-output u at -theta_uu in
/// descending layer order (ascending vertex id within a layer), steer with X
/// on g(u) and Z on Odd(g(u)) minus u after each measurement. Corrections on
/// later-measured qubits land in their measurement's adaptation signals;
/// corrections on outputs land in the final corrections.
///
/// Requires unit weights, a valid gflow, and no square terms on outputs
/// (the pattern command set has no output rotations).
MeasurementPattern pattern_from_gflow(const QFE& q, const GFlow& gf);

/// Canonical standard form: commands ordered prepare / entangle / measure /
/// correct (structural in this representation), with vacuous adaptation
/// signals dropped. An x-adaptation flips the sign of the measurement
/// angle, which does nothing for angles 0 and pi. Branch maps are preserved
/// exactly.
MeasurementPattern standardize_pattern(const MeasurementPattern& p);

/// Circuit for a QFE with a fractional-edge flow: each flow edge v-f(v)
/// becomes a J(theta_vv) gate advancing v's wire segment, every other edge
/// uv becomes CZ^W(uv) between the live segments, non-input wires start in
/// |+>, and square terms on outputs trail as Z rotations. Vertices are
/// processed in descending layer order; a vertex whose segment is not live
/// when due signals an invalid flow via SchedulingError.
Circuit circuit_from_flow(const QFE& q, const Flow& fl);

/// Three-way split of a QFE about a fractional edge ab: q2 is the diagonal
/// layer carrying the cross terms inside the cut V2 (including ab), q1
/// everything at or before the cut, q3 everything at or after. The cut
/// contains, per flow line, the latest vertex bounded above by a or b.
struct EdgeDecomposition {
    QFE q1;
    QFE q2;
    QFE q3;
    std::vector<int> interface;  // V2 as indices into q's vertices, ascending
};

EdgeDecomposition decompose_about_edge(const QFE& q, const Flow& fl, int a, int b);

/// Sum-over-paths translation of an {H, Z^t, CZ^t} circuit: one path
/// variable per wire segment (a new one after each H), pi x_h x_j per H,
/// t*pi x_h x_j per CZ^t, t*pi x_j^2 per Z^t. The normalization power
/// counts the H gates plus the |+>-initialized wires, so dense evaluation
/// reproduces the circuit simulation exactly.
QFE circuit_to_qfe(const Circuit& c);

/// Fourier transform over Z_{2^n} as an expansion: inputs x, outputs y,
/// cross terms 2^(h+j)/2^(n-1) * pi between x_h and y_j for h + j < n, and
/// C = sqrt(2^n). Input and output orders are declared most-significant
/// first, so the dense matrix is the integer-indexed DFT.
QFE qft_qfe(std::size_t n);

}  // namespace qf
