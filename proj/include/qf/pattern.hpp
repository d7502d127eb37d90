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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qf/angle.hpp"

namespace qf {

/// Affine GF(2) expression over measurement outcomes: constant XOR the sum
/// of the outcome bits s_v for v in signals.
struct SignalForm {
    bool constant = false;
    std::set<int> signals;

    bool empty() const { return !constant && signals.empty(); }

    void xor_signal(int v) {
        auto [it, inserted] = signals.insert(v);
        if (!inserted) signals.erase(it);
    }

    void xor_with(const SignalForm& o) {
        constant ^= o.constant;
        for (int v : o.signals) xor_signal(v);
    }

    /// Evaluates against concrete outcomes (vertex -> bit).
    bool eval(const std::map<int, int>& outcomes) const {
        bool r = constant;
        for (int v : signals) {
            auto it = outcomes.find(v);
            if (it == outcomes.end()) throw Error("signal references unmeasured vertex");
            r ^= (it->second != 0);
        }
        return r;
    }

    bool operator==(const SignalForm&) const = default;
};

/// One dependent measurement: the qubit is measured in the XY-plane basis of
/// angle alpha, adapted by earlier outcomes. An active x_correction flips
/// the sign of the angle; an active z_correction adds pi (equivalently,
/// swaps the meaning of the two outcomes).
struct Measurement {
    int vertex = 0;
    Angle angle;
    SignalForm x_correction;
    SignalForm z_correction;

    bool operator==(const Measurement&) const = default;
};

/// One-way measurement program over a unit-weight entanglement graph:
/// prepare non-inputs in |+>, apply CZ along the entangle edges, measure
/// O-complement in order, then apply the final Pauli corrections on the
/// outputs. Outcome bit 0 labels the +1 eigenvector of the (adapted)
/// measurement observable.
struct MeasurementPattern {
    std::vector<std::string> qubits;  // declared order
    std::vector<int> inputs;          // indices into qubits
    std::vector<int> outputs;
    std::vector<std::pair<int, int>> entangle;  // unordered CZ pairs, u < v
    std::vector<Measurement> measurements;      // execution order
    // output vertex -> (X correction, Z correction), applied as X^b Z^c
    std::map<int, std::pair<SignalForm, SignalForm>> final_corrections;

    /// Throws unless: measured set == complement of outputs, correction
    /// signals reference only earlier-measured vertices, entangle pairs are
    /// distinct in-range vertices, and final corrections sit on outputs.
    void validate() const;

    bool operator==(const MeasurementPattern&) const = default;
};

}  // namespace qf
