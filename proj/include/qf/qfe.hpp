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
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qf/angle.hpp"
#include "qf/complex_matrix.hpp"
#include "qf/geometry.hpp"
#include "qf/pattern.hpp"

namespace qf {

/// Angle per unordered vertex pair; u == v keys the square term of a vertex.
/// Zero angles are never stored.
struct QuadraticForm {
    std::map<std::pair<int, int>, Angle> terms;  // key (u, v) with u <= v

    void add(int u, int v, const Angle& a) {
        if (u > v) std::swap(u, v);
        auto it = terms.find({u, v});
        if (it == terms.end()) {
            if (!a.is_zero()) terms.emplace(std::make_pair(u, v), a);
            return;
        }
        it->second += a;
        if (it->second.is_zero()) terms.erase(it);
    }

    Angle at(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = terms.find({u, v});
        return it == terms.end() ? Angle() : it->second;
    }

    bool operator==(const QuadraticForm&) const = default;
};

/// Normalization constant C = 2^(sqrt2_power/2) * e^(i*phase). Every
/// construction in this library produces a constant of this restricted
/// shape, which keeps composition exact.
struct Normalization {
    int sqrt2_power = 0;
    Angle phase;

    std::complex<double> value() const {
        return std::pow(2.0, 0.5 * sqrt2_power) * std::polar(1.0, phase.radians());
    }

    Normalization times(const Normalization& o) const {
        return Normalization{sqrt2_power + o.sqrt2_power, phase + o.phase};
    }

    bool operator==(const Normalization&) const = default;
};

/// Quadratic form expansion: the matrix (1/C) * sum over bit assignments x
/// of e^(i Q(x)) |x_O><x_I|, with rows indexed by x restricted to the
/// outputs (big-endian in declared output order) and columns likewise over
/// the inputs. Inputs and outputs may intersect.
struct QFE {
    std::vector<std::string> vertices;  // declared order
    std::vector<int> inputs;            // indices into vertices, declared order
    std::vector<int> outputs;
    QuadraticForm form;
    Normalization norm;

    std::size_t size() const { return vertices.size(); }

    int vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return static_cast<int>(i);
        return -1;
    }

    void validate() const;

    bool operator==(const QFE&) const = default;
};

/// Split of a QFE into the stages of its phase map: |+> preparations on
/// non-inputs, two-qubit diagonal phases for the cross terms, projections
/// onto |0> + e^(-i theta)|1> for each non-output, and Z rotations left on
/// the outputs. projections is keyed by exactly the non-output vertices.
struct PhaseMapParts {
    std::vector<int> prep;
    std::vector<std::tuple<int, int, Angle>> entangler;
    std::map<int, Angle> output_rotations;
    std::map<int, Angle> projections;
};

inline constexpr std::size_t kDenseVertexLimit = 22;

/// Dense 2^|O| x 2^|I| evaluation of the expansion by direct path
/// summation. Deterministic bit-for-bit: every output entry accumulates its
/// paths in ascending order of the free bits regardless of threading.
ComplexMatrix evaluate_dense(const QFE& q, std::size_t max_vertices = kDenseVertexLimit);

/// Single-threaded reference enumeration over the full path space; kept as
/// the oracle for the parallel kernel and must agree with it bitwise.
ComplexMatrix evaluate_dense_serial(const QFE& q, std::size_t max_vertices = kDenseVertexLimit);

/// Weighted graph on the QFE's vertices with an edge per nonzero cross term,
/// weight theta/pi; square terms become vertex annotations.
Geometry induced_geometry(const QFE& q);

/// Sequential composition (second after first). Requires the shared
/// vertices to be exactly first's outputs and second's inputs, in the same
/// declared order.
QFE compose_sequential(const QFE& first, const QFE& second);

/// Tensor composition of expansions on disjoint vertex sets.
QFE compose_tensor(const QFE& a, const QFE& b);

PhaseMapParts phase_map_parts(const QFE& q);

/// Expansion of a pattern's positive branch: pi per entangle edge, minus the
/// measurement angle as the square term of each measured vertex, and
/// C = sqrt(2)^(number of prepared qubits).
QFE pattern_to_qfe(const MeasurementPattern& p);

}  // namespace qf
