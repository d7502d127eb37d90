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

#include "qf/synthesis.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qf {
namespace {

// Measured vertices in execution order: descending layer, ascending id
// within a layer.
std::vector<int> measurement_order(const Geometry& geom, const std::vector<int>& layers) {
    auto is_output = geom.output_mask();
    std::vector<int> order;
    for (std::size_t v = 0; v < geom.size(); ++v)
        if (!is_output[v]) order.push_back(static_cast<int>(v));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return layers[static_cast<std::size_t>(a)] > layers[static_cast<std::size_t>(b)];
    });
    return order;
}

void require_valid_flow(const Geometry& geom, const Flow& fl, bool fractional_edge_rule) {
    auto violations = check_gflow(geom, gflow_of_flow(fl));
    if (!violations.empty()) throw InvalidFlowError("invalid flow: " + violations.front());
    if (!fractional_edge_rule) return;
    for (const auto& [key, w] : geom.edges) {
        if (is_unit_weight(w)) continue;
        auto itu = fl.f.find(key.first);
        auto itv = fl.f.find(key.second);
        if ((itu != fl.f.end() && itu->second == key.second) ||
            (itv != fl.f.end() && itv->second == key.first))
            throw FractionalEdgeError("flow edge with fractional weight");
    }
}

}  // namespace

MeasurementPattern pattern_from_gflow(const QFE& q, const GFlow& gf) {
    q.validate();
    Geometry geom = induced_geometry(q);
    if (!geom.unit_weights())
        throw FractionalEdgeError("pattern_from_gflow: geometry has fractional edges");
    auto violations = check_gflow(geom, gf);
    if (!violations.empty())
        throw InvalidFlowError("pattern_from_gflow: " + violations.front());
    for (int z : q.outputs)
        if (!q.form.at(z, z).is_zero())
            throw PreconditionError(
                "pattern_from_gflow: square term on an output vertex has no pattern command");

    MeasurementPattern p;
    p.qubits = q.vertices;
    p.inputs = q.inputs;
    p.outputs = q.outputs;
    for (const auto& [key, w] : geom.edges) p.entangle.push_back(key);

    std::vector<int> order = measurement_order(geom, gf.layers);
    std::map<int, std::size_t> slot;  // vertex -> position in p.measurements
    for (int u : order) {
        slot[u] = p.measurements.size();
        p.measurements.push_back(Measurement{u, -q.form.at(u, u), {}, {}});
    }
    auto is_output = geom.output_mask();
    auto steer = [&](int w, int source, bool x_side) {
        if (is_output[static_cast<std::size_t>(w)]) {
            auto& corr = p.final_corrections[w];
            (x_side ? corr.first : corr.second).xor_signal(source);
        } else {
            Measurement& m = p.measurements[slot.at(w)];
            (x_side ? m.x_correction : m.z_correction).xor_signal(source);
        }
    };
    for (int u : order) {
        const std::set<int>& s = gf.g.at(u);
        for (int w : s) steer(w, u, /*x_side=*/true);
        for (int w : odd_neighborhood(geom, std::vector<int>(s.begin(), s.end())))
            if (w != u) steer(w, u, /*x_side=*/false);
    }
    p.validate();
    return p;
}

MeasurementPattern standardize_pattern(const MeasurementPattern& p) {
    p.validate();
    MeasurementPattern out = p;
    for (Measurement& m : out.measurements)
        if (m.angle.is_zero() || m.angle.is_pi()) m.x_correction = SignalForm{};
    for (auto it = out.final_corrections.begin(); it != out.final_corrections.end();)
        if (it->second.first.empty() && it->second.second.empty())
            it = out.final_corrections.erase(it);
        else
            ++it;
    return out;
}

Circuit circuit_from_flow(const QFE& q, const Flow& fl) {
    q.validate();
    Geometry geom = induced_geometry(q);
    require_valid_flow(geom, fl, /*fractional_edge_rule=*/true);
    const std::size_t n = geom.size();
    auto is_output = geom.output_mask();
    auto is_input = geom.input_mask();

    // Chains of the flow function partition the vertices; one wire each.
    std::vector<bool> is_image(n, false);
    for (const auto& [u, v] : fl.f) is_image[static_cast<std::size_t>(v)] = true;
    std::vector<int> starts;
    for (int v : q.inputs) starts.push_back(v);
    for (std::size_t v = 0; v < n; ++v)
        if (!is_image[v] && !is_input[v]) starts.push_back(static_cast<int>(v));

    Circuit c;
    c.wires = static_cast<int>(starts.size());
    std::vector<int> wire_of(n, -1);
    for (std::size_t w = 0; w < starts.size(); ++w) {
        int v = starts[w];
        c.initial_labels[static_cast<int>(w)] = q.vertices[static_cast<std::size_t>(v)];
        if (!is_input[static_cast<std::size_t>(v)]) c.plus_wires.push_back(static_cast<int>(w));
        while (true) {
            wire_of[static_cast<std::size_t>(v)] = static_cast<int>(w);
            auto it = fl.f.find(v);
            if (it == fl.f.end()) break;
            v = it->second;
        }
        if (!is_output[static_cast<std::size_t>(v)])
            throw SchedulingError("circuit_from_flow: flow line does not end on an output");
        c.final_labels[static_cast<int>(w)] = q.vertices[static_cast<std::size_t>(v)];
    }
    for (std::size_t v = 0; v < n; ++v)
        if (wire_of[v] < 0) throw SchedulingError("circuit_from_flow: vertex on no flow line");

    std::vector<bool> live(n, false);
    for (int v : starts) live[static_cast<std::size_t>(v)] = true;
    std::set<std::pair<int, int>> pending;
    for (const auto& [key, w] : geom.edges) {
        auto it = fl.f.find(key.first);
        auto jt = fl.f.find(key.second);
        bool flow_edge = (it != fl.f.end() && it->second == key.second) ||
                         (jt != fl.f.end() && jt->second == key.first);
        if (!flow_edge) pending.insert(key);
    }
    auto emit_edge = [&](std::pair<int, int> key) {
        Angle w = geom.weight(key.first, key.second);
        c.gates.push_back(Gate{Gate::Kind::CZ, wire_of[static_cast<std::size_t>(key.first)],
                               wire_of[static_cast<std::size_t>(key.second)], w});
        pending.erase(key);
    };
    // Edges live at the very start (both endpoints are chain starts).
    for (auto it = pending.begin(); it != pending.end();) {
        auto key = *it;
        ++it;
        if (live[static_cast<std::size_t>(key.first)] && live[static_cast<std::size_t>(key.second)])
            emit_edge(key);
    }
    for (int u : measurement_order(geom, fl.layers)) {
        if (!live[static_cast<std::size_t>(u)])
            throw SchedulingError("circuit_from_flow: segment not live when due");
        std::vector<std::pair<int, int>> due;
        for (const auto& key : pending)
            if (key.first == u || key.second == u) due.push_back(key);
        for (const auto& key : due) {
            int other = key.first == u ? key.second : key.first;
            if (!live[static_cast<std::size_t>(other)])
                throw SchedulingError("circuit_from_flow: neighbor segment not live");
            emit_edge(key);
        }
        c.gates.push_back(
            Gate{Gate::Kind::J, wire_of[static_cast<std::size_t>(u)], -1, q.form.at(u, u)});
        live[static_cast<std::size_t>(u)] = false;
        live[static_cast<std::size_t>(fl.f.at(u))] = true;
    }
    // Whatever remains joins output segments.
    for (auto it = pending.begin(); it != pending.end();) {
        auto key = *it;
        ++it;
        if (!live[static_cast<std::size_t>(key.first)] ||
            !live[static_cast<std::size_t>(key.second)])
            throw SchedulingError("circuit_from_flow: unplaceable edge");
        emit_edge(key);
    }
    for (int z : q.outputs) {
        Angle t = q.form.at(z, z);
        if (!t.is_zero())
            c.gates.push_back(Gate{Gate::Kind::Z, wire_of[static_cast<std::size_t>(z)], -1, t});
    }
    return c;
}

EdgeDecomposition decompose_about_edge(const QFE& q, const Flow& fl, int a, int b) {
    q.validate();
    Geometry geom = induced_geometry(q);
    require_valid_flow(geom, fl, /*fractional_edge_rule=*/true);
    if (!geom.has_edge(a, b)) throw PreconditionError("decompose_about_edge: no such edge");
    if (is_unit_weight(geom.weight(a, b)))
        throw PreconditionError("decompose_about_edge: edge is not fractional");
    const std::size_t n = geom.size();

    // v at-or-before x in the measurement order.
    auto le = [&](int v, int x) {
        return v == x || fl.layers[static_cast<std::size_t>(v)] > fl.layers[static_cast<std::size_t>(x)];
    };
    std::map<int, int> prev;  // f(u) -> u
    for (const auto& [u, v] : fl.f) prev[v] = u;

    // Cut vertex per flow line: the latest vertex bounded above by a or b;
    // lines living entirely after the edge are cut at their start.
    std::set<int> cut;
    for (int z : q.outputs) {
        int pick = -1;
        int v = z;
        while (true) {
            if (le(v, a) || le(v, b)) {
                pick = v;
                break;
            }
            auto it = prev.find(v);
            if (it == prev.end()) {
                pick = v;  // start of the line
                break;
            }
            v = it->second;
        }
        cut.insert(pick);
    }
    std::vector<int> interface(cut.begin(), cut.end());

    std::vector<bool> in1(n, false), in2(n, false), in3(n, false);
    for (int v : interface) in2[static_cast<std::size_t>(v)] = true;
    for (std::size_t v = 0; v < n; ++v)
        for (int m : interface) {
            if (le(static_cast<int>(v), m)) in1[v] = true;
            if (le(m, static_cast<int>(v))) in3[v] = true;
        }
    for (std::size_t v = 0; v < n; ++v) {
        if (!in1[v] && !in3[v])
            throw DecompositionError("decompose_about_edge: vertex comparable to no cut vertex");
        if (in1[v] && in3[v] && !in2[v])
            throw DecompositionError("decompose_about_edge: cut does not separate the order");
    }
    if (!in2[static_cast<std::size_t>(a)] || !in2[static_cast<std::size_t>(b)])
        throw DecompositionError("decompose_about_edge: edge endpoints missed the cut");
    for (int v : q.inputs)
        if (!in1[static_cast<std::size_t>(v)])
            throw DecompositionError("decompose_about_edge: input outside the first piece");
    for (int v : q.outputs)
        if (!in3[static_cast<std::size_t>(v)])
            throw DecompositionError("decompose_about_edge: output outside the last piece");

    auto collect = [&](const std::vector<bool>& mask) {
        std::vector<int> vs;
        for (std::size_t v = 0; v < n; ++v)
            if (mask[v]) vs.push_back(static_cast<int>(v));
        return vs;
    };
    auto build = [&](const std::vector<int>& vs, const std::vector<int>& ins,
                     const std::vector<int>& outs) {
        QFE part;
        std::vector<int> remap(n, -1);
        for (int v : vs) {
            remap[static_cast<std::size_t>(v)] = static_cast<int>(part.vertices.size());
            part.vertices.push_back(q.vertices[static_cast<std::size_t>(v)]);
        }
        for (int v : ins) part.inputs.push_back(remap[static_cast<std::size_t>(v)]);
        for (int v : outs) part.outputs.push_back(remap[static_cast<std::size_t>(v)]);
        return std::make_pair(part, remap);
    };
    auto [q1, map1] = build(collect(in1), q.inputs, interface);
    auto [q2, map2] = build(interface, interface, interface);
    auto [q3, map3] = build(collect(in3), interface, q.outputs);
    q1.norm = q.norm;

    for (const auto& [key, angle] : q.form.terms) {
        auto [u, v] = key;
        bool both1 = in1[static_cast<std::size_t>(u)] && in1[static_cast<std::size_t>(v)];
        bool both2 = in2[static_cast<std::size_t>(u)] && in2[static_cast<std::size_t>(v)];
        bool both3 = in3[static_cast<std::size_t>(u)] && in3[static_cast<std::size_t>(v)];
        if (u != v && both2)
            q2.form.add(map2[static_cast<std::size_t>(u)], map2[static_cast<std::size_t>(v)], angle);
        else if (both1 && !both2)
            q1.form.add(map1[static_cast<std::size_t>(u)], map1[static_cast<std::size_t>(v)], angle);
        else if (both3)
            q3.form.add(map3[static_cast<std::size_t>(u)], map3[static_cast<std::size_t>(v)], angle);
        else
            throw DecompositionError("decompose_about_edge: term straddles the cut");
    }

    auto fractional_count = [](const QFE& part) {
        std::size_t k = 0;
        for (const auto& [key, angle] : part.form.terms)
            if (key.first != key.second && !is_unit_weight(angle)) ++k;
        return k;
    };
    std::size_t before = fractional_count(q);
    if (fractional_count(q1) >= before || fractional_count(q3) >= before)
        throw DecompositionError("decompose_about_edge: fractional edge count did not drop");

    return EdgeDecomposition{std::move(q1), std::move(q2), std::move(q3), std::move(interface)};
}

QFE circuit_to_qfe(const Circuit& c) {
    c.validate();
    for (const Gate& g : c.gates)
        if (g.kind == Gate::Kind::J)
            throw UnsupportedGateError("circuit_to_qfe: expand J gates first (expand_j_gates)");

    QFE q;
    std::vector<bool> is_plus(static_cast<std::size_t>(c.wires), false);
    for (int w : c.plus_wires) is_plus[static_cast<std::size_t>(w)] = true;
    std::vector<int> seg(static_cast<std::size_t>(c.wires));
    auto fresh = [&]() {
        int id = static_cast<int>(q.vertices.size());
        q.vertices.push_back("x" + std::to_string(id));
        return id;
    };
    for (int w = 0; w < c.wires; ++w) {
        seg[static_cast<std::size_t>(w)] = fresh();
        if (!is_plus[static_cast<std::size_t>(w)])
            q.inputs.push_back(seg[static_cast<std::size_t>(w)]);
    }
    int h_count = 0;
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case Gate::Kind::H: {
                int next = fresh();
                q.form.add(seg[static_cast<std::size_t>(g.w0)], next, Angle::pi());
                seg[static_cast<std::size_t>(g.w0)] = next;
                ++h_count;
                break;
            }
            case Gate::Kind::Z:
                q.form.add(seg[static_cast<std::size_t>(g.w0)], seg[static_cast<std::size_t>(g.w0)],
                           g.angle);
                break;
            case Gate::Kind::CZ:
                q.form.add(seg[static_cast<std::size_t>(g.w0)], seg[static_cast<std::size_t>(g.w1)],
                           g.angle);
                break;
            case Gate::Kind::J:
                break;  // rejected above
        }
    }
    for (int w = 0; w < c.wires; ++w) q.outputs.push_back(seg[static_cast<std::size_t>(w)]);
    q.norm.sqrt2_power = h_count + static_cast<int>(c.plus_wires.size());
    return q;
}

QFE qft_qfe(std::size_t n) {
    if (n < 1 || 2 * n > kDenseVertexLimit)
        throw SizeLimitError("qft_qfe: size out of range");
    QFE q;
    for (std::size_t h = 0; h < n; ++h) q.vertices.push_back("x" + std::to_string(h));
    for (std::size_t j = 0; j < n; ++j) q.vertices.push_back("y" + std::to_string(j));
    // Most-significant bit first, so dense rows/columns follow integer order.
    for (std::size_t h = n; h-- > 0;) q.inputs.push_back(static_cast<int>(h));
    for (std::size_t j = n; j-- > 0;) q.outputs.push_back(static_cast<int>(n + j));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t j = 0; j + h < n; ++j)
            q.form.add(static_cast<int>(h), static_cast<int>(n + j),
                       Angle(std::int64_t(1) << (h + j), std::int64_t(1) << (n - 1)));
    q.norm.sqrt2_power = static_cast<int>(n);
    return q;
}

}  // namespace qf
