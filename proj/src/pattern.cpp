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

#include "qf/pattern.hpp"

#include <set>

#include "qf/error.hpp"

namespace qf {

void MeasurementPattern::validate() const {
    const int n = static_cast<int>(qubits.size());
    auto in_range = [&](int v) {
        if (v < 0 || v >= n) throw Error("pattern: vertex index out of range");
    };
    std::set<int> output_set;
    for (int v : outputs) {
        in_range(v);
        if (!output_set.insert(v).second) throw Error("pattern: repeated output");
    }
    std::set<int> input_set;
    for (int v : inputs) {
        in_range(v);
        if (!input_set.insert(v).second) throw Error("pattern: repeated input");
    }
    for (const auto& [u, v] : entangle) {
        in_range(u);
        in_range(v);
        if (u == v) throw Error("pattern: entangle pair must be distinct vertices");
    }

    std::set<int> measured;
    for (const Measurement& m : measurements) {
        in_range(m.vertex);
        if (output_set.count(m.vertex)) throw Error("pattern: output vertex measured");
        for (int s : m.x_correction.signals)
            if (!measured.count(s))
                throw Error("pattern: correction references a later measurement");
        for (int s : m.z_correction.signals)
            if (!measured.count(s))
                throw Error("pattern: correction references a later measurement");
        if (!measured.insert(m.vertex).second) throw Error("pattern: vertex measured twice");
    }
    if (measured.size() + output_set.size() != qubits.size())
        throw Error("pattern: measured set must be the complement of the outputs");

    for (const auto& [v, corr] : final_corrections) {
        if (!output_set.count(v)) throw Error("pattern: final correction off the outputs");
        for (const SignalForm& sf : {corr.first, corr.second})
            for (int s : sf.signals)
                if (!measured.count(s))
                    throw Error("pattern: final correction references unmeasured vertex");
    }
}

}  // namespace qf
