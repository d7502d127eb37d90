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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qf/angle.hpp"
#include "qf/gf2.hpp"

namespace qf {

/// Edge weight W is the stored fraction num/den; a unit edge has W = 1.
inline bool is_unit_weight(const Angle& w) { return w.num() == 1 && w.den() == 1; }

/// Weighted open graph: a graph with designated input and output vertex
/// subsets. Edge weights are rationals in (-1, 1], nonzero; weight 1 is a
/// unit edge, anything else a fractional edge. The weight of edge uv and its
/// phase angle theta_uv = W * pi share the same normalized fraction, so both
/// are carried by the Angle type. Square-term angles of the originating
/// quadratic form ride along as vertex annotations.
struct Geometry {
    std::vector<std::string> vertices;            // declared order
    std::vector<int> inputs;                      // indices into vertices
    std::vector<int> outputs;
    std::map<std::pair<int, int>, Angle> edges;   // key (u, v) with u < v
    std::map<int, Angle> vertex_angles;           // nonzero annotations only

    std::size_t size() const { return vertices.size(); }

    int vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return edges.count({u, v}) > 0;
    }

    Angle weight(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = edges.find({u, v});
        if (it == edges.end()) throw Error("weight: no such edge");
        return it->second;
    }

    /// Row of the adjacency matrix; any nonzero-weight edge counts.
    BitVector neighbors(int v) const {
        BitVector row(vertices.size());
        for (const auto& [key, w] : edges) {
            if (key.first == v) row.set(static_cast<std::size_t>(key.second), true);
            if (key.second == v) row.set(static_cast<std::size_t>(key.first), true);
        }
        return row;
    }

    bool unit_weights() const {
        for (const auto& [key, w] : edges)
            if (!is_unit_weight(w)) return false;
        return true;
    }

    std::vector<bool> output_mask() const {
        std::vector<bool> m(vertices.size(), false);
        for (int v : outputs) m[static_cast<std::size_t>(v)] = true;
        return m;
    }

    std::vector<bool> input_mask() const {
        std::vector<bool> m(vertices.size(), false);
        for (int v : inputs) m[static_cast<std::size_t>(v)] = true;
        return m;
    }

    void validate() const;
};

}  // namespace qf
