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

#include "qf/json_io.hpp"

#include <fstream>
#include <set>

namespace qf {
namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const char* what) {
    if (!j.is_object()) throw FormatError(std::string(what) + ": expected an object");
    std::set<std::string> ok;
    for (const char* k : allowed) ok.insert(k);
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!ok.count(it.key()))
            throw FormatError(std::string(what) + ": unknown field '" + it.key() + "'");
    for (const char* k : allowed)
        if (!j.contains(k))
            throw FormatError(std::string(what) + ": missing field '" + std::string(k) + "'");
}

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + ": expected an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw FormatError(std::string(what) + ": expected strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::int64_t int_field(const json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw FormatError(std::string(what) + ": field '" + key + "' must be an integer");
    return j[key].get<std::int64_t>();
}

Angle angle_field(const json& j, const char* what, const char* num_key = "num",
                  const char* den_key = "den") {
    std::int64_t num = int_field(j, num_key, what);
    std::int64_t den = int_field(j, den_key, what);
    if (den <= 0) throw FormatError(std::string(what) + ": denominator must be positive");
    return Angle(num, den);
}

int name_index(const std::vector<std::string>& names, const std::string& name,
               const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw FormatError(std::string(what) + ": unknown vertex '" + name + "'");
}

std::vector<int> name_indices(const std::vector<std::string>& names, const json& j,
                              const char* what) {
    std::vector<int> out;
    for (const std::string& s : string_list(j, what)) out.push_back(name_index(names, s, what));
    return out;
}

json names_of(const std::vector<std::string>& names, const std::vector<int>& idx) {
    json out = json::array();
    for (int v : idx) out.push_back(names[static_cast<std::size_t>(v)]);
    return out;
}

json signal_to_json(const std::vector<std::string>& names, const SignalForm& s) {
    json out = json::array();
    for (int v : s.signals) out.push_back(names[static_cast<std::size_t>(v)]);
    return out;
}

SignalForm signal_from_json(const std::vector<std::string>& names, const json& sig,
                            const json& constant, const char* what) {
    SignalForm out;
    if (!constant.is_number_integer() ||
        (constant.get<int>() != 0 && constant.get<int>() != 1))
        throw FormatError(std::string(what) + ": signal constant must be 0 or 1");
    out.constant = constant.get<int>() == 1;
    for (int v : name_indices(names, sig, what)) out.xor_signal(v);
    return out;
}

}  // namespace

json qfe_to_json(const QFE& q) {
    json j;
    j["vertices"] = q.vertices;
    j["inputs"] = names_of(q.vertices, q.inputs);
    j["outputs"] = names_of(q.vertices, q.outputs);
    json terms = json::array();
    for (const auto& [key, angle] : q.form.terms)
        terms.push_back({{"u", q.vertices[static_cast<std::size_t>(key.first)]},
                         {"v", q.vertices[static_cast<std::size_t>(key.second)]},
                         {"num", angle.num()},
                         {"den", angle.den()}});
    j["terms"] = std::move(terms);
    j["norm"] = {{"sqrt2_power", q.norm.sqrt2_power},
                 {"phase_num", q.norm.phase.num()},
                 {"phase_den", q.norm.phase.den()}};
    return j;
}

QFE qfe_from_json(const json& j) {
    check_keys(j, {"vertices", "inputs", "outputs", "terms", "norm"}, "qfe");
    QFE q;
    q.vertices = string_list(j["vertices"], "qfe vertices");
    q.inputs = name_indices(q.vertices, j["inputs"], "qfe inputs");
    q.outputs = name_indices(q.vertices, j["outputs"], "qfe outputs");
    if (!j["terms"].is_array()) throw FormatError("qfe terms: expected an array");
    for (const auto& t : j["terms"]) {
        check_keys(t, {"u", "v", "num", "den"}, "qfe term");
        if (!t["u"].is_string() || !t["v"].is_string())
            throw FormatError("qfe term: vertex names must be strings");
        int u = name_index(q.vertices, t["u"].get<std::string>(), "qfe term");
        int v = name_index(q.vertices, t["v"].get<std::string>(), "qfe term");
        q.form.add(u, v, angle_field(t, "qfe term"));
    }
    check_keys(j["norm"], {"sqrt2_power", "phase_num", "phase_den"}, "qfe norm");
    q.norm.sqrt2_power = static_cast<int>(int_field(j["norm"], "sqrt2_power", "qfe norm"));
    q.norm.phase = angle_field(j["norm"], "qfe norm", "phase_num", "phase_den");
    try {
        q.validate();
    } catch (const Error& e) {
        throw FormatError(std::string("qfe: ") + e.what());
    }
    return q;
}

json geometry_to_json(const Geometry& g) {
    json j;
    j["vertices"] = g.vertices;
    j["inputs"] = names_of(g.vertices, g.inputs);
    j["outputs"] = names_of(g.vertices, g.outputs);
    json edges = json::array();
    for (const auto& [key, w] : g.edges)
        edges.push_back({{"u", g.vertices[static_cast<std::size_t>(key.first)]},
                         {"v", g.vertices[static_cast<std::size_t>(key.second)]},
                         {"num", w.num()},
                         {"den", w.den()}});
    j["edges"] = std::move(edges);
    json angles = json::array();
    for (const auto& [v, a] : g.vertex_angles)
        angles.push_back({{"v", g.vertices[static_cast<std::size_t>(v)]},
                          {"num", a.num()},
                          {"den", a.den()}});
    j["vertex_angles"] = std::move(angles);
    return j;
}

Geometry geometry_from_json(const json& j) {
    check_keys(j, {"vertices", "inputs", "outputs", "edges", "vertex_angles"}, "geometry");
    Geometry g;
    g.vertices = string_list(j["vertices"], "geometry vertices");
    g.inputs = name_indices(g.vertices, j["inputs"], "geometry inputs");
    g.outputs = name_indices(g.vertices, j["outputs"], "geometry outputs");
    for (const auto& e : j["edges"]) {
        check_keys(e, {"u", "v", "num", "den"}, "geometry edge");
        int u = name_index(g.vertices, e["u"].get<std::string>(), "geometry edge");
        int v = name_index(g.vertices, e["v"].get<std::string>(), "geometry edge");
        if (u == v) throw FormatError("geometry edge: self loop");
        if (u > v) std::swap(u, v);
        Angle w = angle_field(e, "geometry edge");
        if (w.is_zero()) throw FormatError("geometry edge: zero weight");
        g.edges[{u, v}] = w;
    }
    for (const auto& e : j["vertex_angles"]) {
        check_keys(e, {"v", "num", "den"}, "geometry vertex angle");
        int v = name_index(g.vertices, e["v"].get<std::string>(), "geometry vertex angle");
        g.vertex_angles[v] = angle_field(e, "geometry vertex angle");
    }
    try {
        g.validate();
    } catch (const Error& e) {
        throw FormatError(std::string("geometry: ") + e.what());
    }
    return g;
}

json circuit_to_json(const Circuit& c) {
    json j;
    j["wires"] = c.wires;
    j["plus_wires"] = c.plus_wires;
    json gates = json::array();
    for (const Gate& g : c.gates) {
        json wires = json::array();
        wires.push_back(g.w0);
        if (g.kind == Gate::Kind::CZ) wires.push_back(g.w1);
        const char* kind = g.kind == Gate::Kind::H   ? "H"
                           : g.kind == Gate::Kind::J ? "J"
                           : g.kind == Gate::Kind::Z ? "Z"
                                                     : "CZ";
        gates.push_back({{"kind", kind},
                         {"wires", std::move(wires)},
                         {"num", g.angle.num()},
                         {"den", g.angle.den()}});
    }
    j["gates"] = std::move(gates);
    return j;
}

Circuit circuit_from_json(const json& j) {
    check_keys(j, {"wires", "plus_wires", "gates"}, "circuit");
    Circuit c;
    c.wires = static_cast<int>(int_field(j, "wires", "circuit"));
    if (!j["plus_wires"].is_array()) throw FormatError("circuit plus_wires: expected an array");
    for (const auto& w : j["plus_wires"]) {
        if (!w.is_number_integer()) throw FormatError("circuit plus_wires: expected integers");
        c.plus_wires.push_back(w.get<int>());
    }
    for (const auto& gj : j["gates"]) {
        check_keys(gj, {"kind", "wires", "num", "den"}, "circuit gate");
        std::string kind = gj["kind"].get<std::string>();
        Gate g;
        if (kind == "H")
            g.kind = Gate::Kind::H;
        else if (kind == "J")
            g.kind = Gate::Kind::J;
        else if (kind == "Z")
            g.kind = Gate::Kind::Z;
        else if (kind == "CZ")
            g.kind = Gate::Kind::CZ;
        else
            throw FormatError("circuit gate: unknown kind '" + kind + "'");
        const auto& wires = gj["wires"];
        std::size_t expect = g.kind == Gate::Kind::CZ ? 2 : 1;
        if (!wires.is_array() || wires.size() != expect)
            throw FormatError("circuit gate: wrong wire count");
        g.w0 = wires[0].get<int>();
        if (expect == 2) g.w1 = wires[1].get<int>();
        g.angle = angle_field(gj, "circuit gate");
        if (g.kind == Gate::Kind::H && !g.angle.is_zero())
            throw FormatError("circuit gate: H takes no angle");
        c.gates.push_back(g);
    }
    try {
        c.validate();
    } catch (const Error& e) {
        throw FormatError(std::string("circuit: ") + e.what());
    }
    return c;
}

json pattern_to_json(const MeasurementPattern& p) {
    json j;
    j["qubits"] = p.qubits;
    j["inputs"] = names_of(p.qubits, p.inputs);
    j["outputs"] = names_of(p.qubits, p.outputs);
    json edges = json::array();
    for (const auto& [u, v] : p.entangle)
        edges.push_back({{"u", p.qubits[static_cast<std::size_t>(u)]},
                         {"v", p.qubits[static_cast<std::size_t>(v)]}});
    j["entangle"] = std::move(edges);
    json measurements = json::array();
    for (const Measurement& m : p.measurements)
        measurements.push_back({{"v", p.qubits[static_cast<std::size_t>(m.vertex)]},
                                {"num", m.angle.num()},
                                {"den", m.angle.den()},
                                {"x_signals", signal_to_json(p.qubits, m.x_correction)},
                                {"x_const", m.x_correction.constant ? 1 : 0},
                                {"z_signals", signal_to_json(p.qubits, m.z_correction)},
                                {"z_const", m.z_correction.constant ? 1 : 0}});
    j["measurements"] = std::move(measurements);
    json finals = json::array();
    for (const auto& [v, corr] : p.final_corrections)
        finals.push_back({{"v", p.qubits[static_cast<std::size_t>(v)]},
                          {"x_signals", signal_to_json(p.qubits, corr.first)},
                          {"x_const", corr.first.constant ? 1 : 0},
                          {"z_signals", signal_to_json(p.qubits, corr.second)},
                          {"z_const", corr.second.constant ? 1 : 0}});
    j["final_corrections"] = std::move(finals);
    return j;
}

MeasurementPattern pattern_from_json(const json& j) {
    check_keys(j, {"qubits", "inputs", "outputs", "entangle", "measurements",
                   "final_corrections"},
               "pattern");
    MeasurementPattern p;
    p.qubits = string_list(j["qubits"], "pattern qubits");
    p.inputs = name_indices(p.qubits, j["inputs"], "pattern inputs");
    p.outputs = name_indices(p.qubits, j["outputs"], "pattern outputs");
    for (const auto& e : j["entangle"]) {
        check_keys(e, {"u", "v"}, "pattern entangle");
        int u = name_index(p.qubits, e["u"].get<std::string>(), "pattern entangle");
        int v = name_index(p.qubits, e["v"].get<std::string>(), "pattern entangle");
        if (u > v) std::swap(u, v);
        p.entangle.emplace_back(u, v);
    }
    for (const auto& mj : j["measurements"]) {
        check_keys(mj, {"v", "num", "den", "x_signals", "x_const", "z_signals", "z_const"},
                   "pattern measurement");
        Measurement m;
        m.vertex = name_index(p.qubits, mj["v"].get<std::string>(), "pattern measurement");
        m.angle = angle_field(mj, "pattern measurement");
        m.x_correction =
            signal_from_json(p.qubits, mj["x_signals"], mj["x_const"], "pattern measurement");
        m.z_correction =
            signal_from_json(p.qubits, mj["z_signals"], mj["z_const"], "pattern measurement");
        p.measurements.push_back(std::move(m));
    }
    for (const auto& fj : j["final_corrections"]) {
        check_keys(fj, {"v", "x_signals", "x_const", "z_signals", "z_const"},
                   "pattern final correction");
        int v = name_index(p.qubits, fj["v"].get<std::string>(), "pattern final correction");
        p.final_corrections[v] = {
            signal_from_json(p.qubits, fj["x_signals"], fj["x_const"],
                             "pattern final correction"),
            signal_from_json(p.qubits, fj["z_signals"], fj["z_const"],
                             "pattern final correction")};
    }
    try {
        p.validate();
    } catch (const Error& e) {
        throw FormatError(std::string("pattern: ") + e.what());
    }
    return p;
}

json tableau_to_json(const LeuvenTableau& t) {
    json j;
    j["n"] = t.num_qubits();
    json rows = json::array();
    for (std::size_t r = 0; r < t.c.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < t.c.cols(); ++c) row.push_back(t.c.get(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    j["c"] = std::move(rows);
    json h = json::array();
    for (std::size_t i = 0; i < t.h.size(); ++i) h.push_back(t.h.get(i) ? 1 : 0);
    j["h"] = std::move(h);
    return j;
}

LeuvenTableau tableau_from_json(const json& j) {
    check_keys(j, {"n", "c", "h"}, "tableau");
    std::int64_t n = int_field(j, "n", "tableau");
    if (n < 1) throw FormatError("tableau: n must be positive");
    std::size_t dim = static_cast<std::size_t>(2 * n);
    LeuvenTableau t;
    t.c = BitMatrix(dim, dim);
    if (!j["c"].is_array() || j["c"].size() != dim)
        throw FormatError("tableau: c must have 2n rows");
    for (std::size_t r = 0; r < dim; ++r) {
        const auto& row = j["c"][r];
        if (!row.is_array() || row.size() != dim)
            throw FormatError("tableau: c rows must have 2n entries");
        for (std::size_t c = 0; c < dim; ++c) {
            int bit = row[c].get<int>();
            if (bit != 0 && bit != 1) throw FormatError("tableau: entries must be bits");
            t.c.set(r, c, bit == 1);
        }
    }
    t.h = BitVector(dim);
    if (!j["h"].is_array() || j["h"].size() != dim)
        throw FormatError("tableau: h must have 2n entries");
    for (std::size_t i = 0; i < dim; ++i) {
        int bit = j["h"][i].get<int>();
        if (bit != 0 && bit != 1) throw FormatError("tableau: entries must be bits");
        t.h.set(i, bit == 1);
    }
    return t;
}

json flow_to_json(const Geometry& g, const Flow& f) {
    json fj = json::object();
    for (const auto& [u, v] : f.f)
        fj[g.vertices[static_cast<std::size_t>(u)]] = g.vertices[static_cast<std::size_t>(v)];
    json layers = json::object();
    for (std::size_t v = 0; v < g.size(); ++v) layers[g.vertices[v]] = f.layers[v];
    return json{{"kind", "flow"}, {"f", std::move(fj)}, {"layers", std::move(layers)}};
}

json gflow_to_json(const Geometry& g, const GFlow& f) {
    json gj = json::object();
    for (const auto& [u, s] : f.g) {
        json set = json::array();
        for (int v : s) set.push_back(g.vertices[static_cast<std::size_t>(v)]);
        gj[g.vertices[static_cast<std::size_t>(u)]] = std::move(set);
    }
    json layers = json::object();
    for (std::size_t v = 0; v < g.size(); ++v) layers[g.vertices[v]] = f.layers[v];
    return json{{"kind", "gflow"}, {"g", std::move(gj)}, {"layers", std::move(layers)}};
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["status"] = r.ok ? "ok" : "fail";
    j["scalar"] = {r.scalar.real(), r.scalar.imag()};
    j["max_abs_error"] = r.max_abs_error;
    j["failing_branches"] = r.failing_branches;
    return j;
}

ArtifactKind sniff_artifact(const json& j) {
    if (!j.is_object()) throw FormatError("artifact: expected a JSON object");
    if (j.contains("terms") && j.contains("norm")) return ArtifactKind::Qfe;
    if (j.contains("edges")) return ArtifactKind::Geometry;
    if (j.contains("gates")) return ArtifactKind::Circuit;
    if (j.contains("measurements")) return ArtifactKind::Pattern;
    if (j.contains("c") && j.contains("h")) return ArtifactKind::Tableau;
    throw FormatError("artifact: unrecognized document shape");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw FormatError("parse error in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace qf
