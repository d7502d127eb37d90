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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qf/geometry.hpp"

namespace qf {

/// Correction structure certifying that a geometry supports
/// outcome-independent patterns: g maps each measured vertex to its
/// correction set, and the layer function encodes the measurement partial
/// order. Outputs sit at layer 0; u precedes v (u is measured first) exactly
/// when layer(u) > layer(v).
struct GFlow {
    std::map<int, std::set<int>> g;
    std::vector<int> layers;  // one entry per geometry vertex
};

/// Singleton-correction special case.
struct Flow {
    std::map<int, int> f;
    std::vector<int> layers;
};

inline GFlow gflow_of_flow(const Flow& fl) {
    GFlow gf;
    gf.layers = fl.layers;
    for (const auto& [u, v] : fl.f) gf.g[u] = {v};
    return gf;
}

/// Vertices adjacent to an odd number of members of s. Adjacency ignores
/// weights. Throws on out-of-range vertices.
std::vector<int> odd_neighborhood(const Geometry& geom, const std::vector<int>& s);

/// Empty exactly when cand is a valid gflow for geom; otherwise a list of
/// human-readable violations.
std::vector<std::string> check_gflow(const Geometry& geom, const GFlow& cand);

/// Layer-by-layer search working backward from the outputs; the returned
/// gflow is maximally delayed. Requires unit edge weights.
std::optional<GFlow> find_gflow(const Geometry& geom);

/// Flow search by repeatedly peeling correctors with a unique unmeasured
/// neighbor. Edge weights are ignored for existence.
std::optional<Flow> find_flow(const Geometry& geom);

/// A flow whose flow edges all have unit weight, or nullopt. Found by
/// testing the canonical flow against the fractional-edge condition; with
/// |I| = |O| the flow function is unique, so this is decisive.
std::optional<Flow> find_fractional_edge_flow(const Geometry& geom);

}  // namespace qf
