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

#include "qf/circuit.hpp"

#include <set>

#include "qf/error.hpp"

namespace qf {

void Circuit::validate() const {
    if (wires < 0) throw Error("circuit: negative wire count");
    std::set<int> plus(plus_wires.begin(), plus_wires.end());
    if (plus.size() != plus_wires.size()) throw Error("circuit: repeated plus wire");
    for (int w : plus_wires)
        if (w < 0 || w >= wires) throw Error("circuit: plus wire out of range");
    for (const Gate& g : gates) {
        if (g.w0 < 0 || g.w0 >= wires) throw Error("circuit: gate wire out of range");
        if (g.kind == Gate::Kind::CZ) {
            if (g.w1 < 0 || g.w1 >= wires) throw Error("circuit: gate wire out of range");
            if (g.w1 == g.w0) throw Error("circuit: CZ needs two distinct wires");
        } else if (g.w1 != -1) {
            throw Error("circuit: single-wire gate with a second wire");
        }
    }
}

Circuit expand_j_gates(const Circuit& c) {
    Circuit out = c;
    out.gates.clear();
    for (const Gate& g : c.gates) {
        if (g.kind == Gate::Kind::J) {
            if (!g.angle.is_zero())
                out.gates.push_back(Gate{Gate::Kind::Z, g.w0, -1, g.angle});
            out.gates.push_back(Gate{Gate::Kind::H, g.w0, -1, Angle()});
        } else {
            out.gates.push_back(g);
        }
    }
    return out;
}

}  // namespace qf
