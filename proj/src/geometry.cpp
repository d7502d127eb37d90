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

#include "qf/geometry.hpp"

#include <set>

namespace qf {

void Geometry::validate() const {
    std::set<std::string> names(vertices.begin(), vertices.end());
    if (names.size() != vertices.size()) throw Error("geometry: duplicate vertex names");
    auto in_range = [&](int v) {
        if (v < 0 || static_cast<std::size_t>(v) >= vertices.size())
            throw Error("geometry: vertex index out of range");
    };
    for (int v : inputs) in_range(v);
    for (int v : outputs) in_range(v);
    for (const auto& [key, w] : edges) {
        in_range(key.first);
        in_range(key.second);
        if (key.first >= key.second) throw Error("geometry: edge key must have u < v");
        if (w.is_zero()) throw Error("geometry: zero-weight edge");
    }
    for (const auto& [v, a] : vertex_angles) in_range(v);
}

}  // namespace qf
