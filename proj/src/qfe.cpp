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

#include "qf/qfe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

namespace qf {
namespace {

// Per-path phase bookkeeping: every term contributes an integer number of
// pi/denom_lcm units, so path phases stay exact rationals. The lcm of the
// term denominators is capped; the worked constructions never get close.
struct PathPhaser {
    std::vector<std::pair<std::uint64_t, std::int64_t>> terms;  // (pair bitmask, units)
    std::int64_t lcm = 1;

    explicit PathPhaser(const QFE& q) {
        for (const auto& [key, angle] : q.form.terms) {
            std::int64_t d = angle.den();
            std::int64_t g = std::gcd(lcm, d);
            lcm = lcm / g * d;
            if (lcm > (std::int64_t(1) << 40))
                throw Error("evaluate_dense: term denominators too large");
        }
        for (const auto& [key, angle] : q.form.terms) {
            std::uint64_t mask = (std::uint64_t(1) << key.first) | (std::uint64_t(1) << key.second);
            terms.emplace_back(mask, angle.num() * (lcm / angle.den()));
        }
    }

    // e^(i Q(x)) for the assignment encoded as a vertex bitmask.
    cplx phase(std::uint64_t x) const {
        std::int64_t units = 0;
        for (const auto& [mask, u] : terms)
            if ((x & mask) == mask) units += u;
        std::int64_t m = 2 * lcm;
        units %= m;  // keep the sine argument small and exact
        return std::polar(1.0, std::numbers::pi * static_cast<double>(units) /
                                   static_cast<double>(lcm));
    }
};

std::uint64_t subset_mask(const std::vector<int>& idx) {
    std::uint64_t m = 0;
    for (int i : idx) m |= std::uint64_t(1) << i;
    return m;
}

// Index of x restricted to the given vertices, big-endian in their order.
std::size_t restrict_index(std::uint64_t x, const std::vector<int>& idx) {
    std::size_t out = 0;
    for (int i : idx) out = (out << 1) | ((x >> i) & 1u);
    return out;
}

void check_dense_size(const QFE& q, std::size_t max_vertices) {
    if (q.size() > max_vertices)
        throw SizeLimitError("evaluate_dense: vertex count exceeds the dense limit");
}

}  // namespace

void QFE::validate() const {
    std::set<std::string> names(vertices.begin(), vertices.end());
    if (names.size() != vertices.size()) throw Error("QFE: duplicate vertex names");
    auto in_range = [&](const std::vector<int>& idx) {
        std::set<int> seen;
        for (int v : idx) {
            if (v < 0 || static_cast<std::size_t>(v) >= vertices.size())
                throw Error("QFE: vertex index out of range");
            if (!seen.insert(v).second) throw Error("QFE: repeated vertex in subset");
        }
    };
    in_range(inputs);
    in_range(outputs);
    for (const auto& [key, angle] : form.terms) {
        if (key.first < 0 || key.second < key.first ||
            static_cast<std::size_t>(key.second) >= vertices.size())
            throw Error("QFE: malformed term key");
        if (angle.is_zero()) throw Error("QFE: stored zero term");
    }
}

ComplexMatrix evaluate_dense_serial(const QFE& q, std::size_t max_vertices) {
    check_dense_size(q, max_vertices);
    const std::size_t n = q.size();
    PathPhaser phaser(q);
    ComplexMatrix out(std::size_t(1) << q.outputs.size(), std::size_t(1) << q.inputs.size());
    const std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t x = 0; x < total; ++x)
        out.at(restrict_index(x, q.outputs), restrict_index(x, q.inputs)) += phaser.phase(x);
    cplx inv_c = 1.0 / q.norm.value();
    return out.scaled(inv_c);
}

ComplexMatrix evaluate_dense(const QFE& q, std::size_t max_vertices) {
    check_dense_size(q, max_vertices);
    const std::size_t n = q.size();
    PathPhaser phaser(q);
    const std::size_t n_rows = std::size_t(1) << q.outputs.size();
    ComplexMatrix out(n_rows, std::size_t(1) << q.inputs.size());

    // Free positions (everything outside O), ascending; enumerating them in
    // ascending packed order visits each entry's paths in the same order as
    // the serial full sweep, so results match it bitwise.
    const std::uint64_t omask = subset_mask(q.outputs);
    std::vector<int> free_pos;
    for (std::size_t i = 0; i < n; ++i)
        if (!((omask >> i) & 1u)) free_pos.push_back(static_cast<int>(i));
    const std::uint64_t free_total = std::uint64_t(1) << free_pos.size();

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t row = 0; row < static_cast<std::int64_t>(n_rows); ++row) {
        std::uint64_t base = 0;
        for (std::size_t k = 0; k < q.outputs.size(); ++k)
            if ((static_cast<std::uint64_t>(row) >> (q.outputs.size() - 1 - k)) & 1u)
                base |= std::uint64_t(1) << q.outputs[k];
        for (std::uint64_t m = 0; m < free_total; ++m) {
            std::uint64_t x = base;
            for (std::size_t k = 0; k < free_pos.size(); ++k)
                if ((m >> k) & 1u) x |= std::uint64_t(1) << free_pos[k];
            out.at(static_cast<std::size_t>(row), restrict_index(x, q.inputs)) +=
                phaser.phase(x);
        }
    }
    cplx inv_c = 1.0 / q.norm.value();
    return out.scaled(inv_c);
}

Geometry induced_geometry(const QFE& q) {
    Geometry g;
    g.vertices = q.vertices;
    g.inputs = q.inputs;
    g.outputs = q.outputs;
    for (const auto& [key, angle] : q.form.terms) {
        if (key.first == key.second)
            g.vertex_angles[key.first] = angle;
        else
            g.edges[key] = angle;  // weight theta/pi: same fraction
    }
    return g;
}

QFE compose_sequential(const QFE& first, const QFE& second) {
    first.validate();
    second.validate();
    // Shared vertices must be exactly first's outputs == second's inputs,
    // matching as ordered sequences so the dense product convention holds.
    if (first.outputs.size() != second.inputs.size())
        throw PreconditionError("compose_sequential: boundary sizes differ");
    std::set<std::string> shared;
    for (std::size_t k = 0; k < first.outputs.size(); ++k) {
        const std::string& a = first.vertices[first.outputs[k]];
        const std::string& b = second.vertices[second.inputs[k]];
        if (a != b)
            throw PreconditionError("compose_sequential: boundary vertex order differs");
        shared.insert(a);
    }
    for (const auto& v : first.vertices)
        if (second.vertex_index(v) >= 0 && !shared.count(v))
            throw PreconditionError("compose_sequential: vertex sets overlap beyond the boundary");

    QFE out;
    out.vertices = first.vertices;
    std::vector<int> second_map(second.size());  // second index -> out index
    for (std::size_t i = 0; i < second.size(); ++i) {
        int at = out.vertex_index(second.vertices[i]);
        if (at < 0) {
            at = static_cast<int>(out.vertices.size());
            out.vertices.push_back(second.vertices[i]);
        }
        second_map[i] = at;
    }
    out.inputs = first.inputs;
    for (int o : second.outputs) out.outputs.push_back(second_map[o]);
    out.form = first.form;
    for (const auto& [key, angle] : second.form.terms)
        out.form.add(second_map[key.first], second_map[key.second], angle);
    out.norm = first.norm.times(second.norm);
    return out;
}

QFE compose_tensor(const QFE& a, const QFE& b) {
    a.validate();
    b.validate();
    for (const auto& v : a.vertices)
        if (b.vertex_index(v) >= 0)
            throw PreconditionError("compose_tensor: vertex sets overlap");
    QFE out;
    out.vertices = a.vertices;
    out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
    int off = static_cast<int>(a.size());
    out.inputs = a.inputs;
    for (int v : b.inputs) out.inputs.push_back(v + off);
    out.outputs = a.outputs;
    for (int v : b.outputs) out.outputs.push_back(v + off);
    out.form = a.form;
    for (const auto& [key, angle] : b.form.terms)
        out.form.add(key.first + off, key.second + off, angle);
    out.norm = a.norm.times(b.norm);
    return out;
}

PhaseMapParts phase_map_parts(const QFE& q) {
    PhaseMapParts parts;
    std::vector<bool> is_input(q.size(), false);
    for (int v : q.inputs) is_input[v] = true;
    std::vector<bool> is_output(q.size(), false);
    for (int v : q.outputs) is_output[v] = true;

    for (std::size_t v = 0; v < q.size(); ++v) {
        if (!is_input[v]) parts.prep.push_back(static_cast<int>(v));
        if (!is_output[v]) parts.projections[static_cast<int>(v)] = Angle();
    }
    for (const auto& [key, angle] : q.form.terms) {
        if (key.first != key.second) {
            parts.entangler.emplace_back(key.first, key.second, angle);
        } else if (is_output[key.first]) {
            parts.output_rotations[key.first] = angle;
        } else {
            parts.projections[key.first] = angle;
        }
    }
    return parts;
}

QFE pattern_to_qfe(const MeasurementPattern& p) {
    p.validate();
    QFE q;
    q.vertices = p.qubits;
    q.inputs = p.inputs;
    q.outputs = p.outputs;
    for (const auto& [u, v] : p.entangle) q.form.add(u, v, Angle::pi());
    for (const Measurement& m : p.measurements) q.form.add(m.vertex, m.vertex, -m.angle);
    q.norm.sqrt2_power = static_cast<int>(p.qubits.size() - p.inputs.size());
    return q;
}

}  // namespace qf
