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
#include <vector>

#include "qf/angle.hpp"

namespace qf {

/// Gate over the circuit gate set. Angles carry the full phase: Z^t stores
/// theta = t*pi, CZ^t likewise, and J(alpha) stores alpha. H takes no angle.
struct Gate {
    enum class Kind { H, J, Z, CZ };
    Kind kind = Kind::H;
    int w0 = 0;
    int w1 = -1;  // second wire of a CZ, unused otherwise
    Angle angle;

    bool operator==(const Gate&) const = default;
};

/// Gate list over a fixed set of wires. Wires listed in plus_wires start in
/// |+> instead of accepting input. Wire 0 is the most significant qubit of
/// simulated matrices. The segment labels are synthesis metadata and do not
/// survive serialization.
struct Circuit {
    int wires = 0;
    std::vector<int> plus_wires;
    std::vector<Gate> gates;
    std::map<int, std::string> initial_labels;
    std::map<int, std::string> final_labels;

    void validate() const;

    std::size_t count(Gate::Kind k) const {
        std::size_t n = 0;
        for (const Gate& g : gates)
            if (g.kind == k) ++n;
        return n;
    }

    bool operator==(const Circuit&) const = default;
};

/// Rewrites every J(alpha) as Z^(alpha/pi) followed by H on the same wire;
/// the result uses only {H, Z, CZ}.
Circuit expand_j_gates(const Circuit& c);

}  // namespace qf
