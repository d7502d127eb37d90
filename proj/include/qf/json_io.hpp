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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qf/circuit.hpp"
#include "qf/clifford.hpp"
#include "qf/flows.hpp"
#include "qf/geometry.hpp"
#include "qf/pattern.hpp"
#include "qf/qfe.hpp"

namespace qf {

// All loaders are strict: unknown fields are rejected with FormatError, and
// vertices are referenced by name. Angles and weights serialize as the
// num/den of their fraction of pi.

nlohmann::json qfe_to_json(const QFE& q);
QFE qfe_from_json(const nlohmann::json& j);

nlohmann::json geometry_to_json(const Geometry& g);
Geometry geometry_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json pattern_to_json(const MeasurementPattern& p);
MeasurementPattern pattern_from_json(const nlohmann::json& j);

nlohmann::json tableau_to_json(const LeuvenTableau& t);
LeuvenTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json flow_to_json(const Geometry& g, const Flow& f);
nlohmann::json gflow_to_json(const Geometry& g, const GFlow& f);

/// Verification outcome as reported by the CLI.
struct VerificationReport {
    bool ok = false;
    std::complex<double> scalar{0.0, 0.0};
    double max_abs_error = 0.0;
    std::vector<std::string> failing_branches;
};

nlohmann::json report_to_json(const VerificationReport& r);

/// Kind of artifact held by a JSON document, sniffed from its fields.
enum class ArtifactKind { Qfe, Geometry, Circuit, Pattern, Tableau };
ArtifactKind sniff_artifact(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace qf
