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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "helpers.hpp"
#include "qf/clifford.hpp"
#include "qf/json_io.hpp"
#include "qf/synthesis.hpp"

using namespace qf;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(QFORMC_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() /
               ("qformc_test_" + std::to_string(getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("qfe json round trip") {
    QFE q = qft_qfe(3);
    QFE back = qfe_from_json(qfe_to_json(q));
    CHECK(back == q);
}

TEST_CASE("qfe json rejects unknown and missing fields") {
    json j = qfe_to_json(qft_qfe(2));
    SUBCASE("unknown top-level field") {
        j["extra"] = 1;
        CHECK_THROWS_AS(qfe_from_json(j), FormatError);
    }
    SUBCASE("unknown term field") {
        j["terms"][0]["weight"] = 2;
        CHECK_THROWS_AS(qfe_from_json(j), FormatError);
    }
    SUBCASE("missing norm field") {
        j["norm"].erase("sqrt2_power");
        CHECK_THROWS_AS(qfe_from_json(j), FormatError);
    }
    SUBCASE("unknown vertex name in a term") {
        j["terms"][0]["u"] = "nope";
        CHECK_THROWS_AS(qfe_from_json(j), FormatError);
    }
}

TEST_CASE("geometry json round trip") {
    Geometry g = induced_geometry(qft_qfe(3));
    Geometry back = geometry_from_json(geometry_to_json(g));
    CHECK(back.vertices == g.vertices);
    CHECK(back.inputs == g.inputs);
    CHECK(back.outputs == g.outputs);
    CHECK(back.edges == g.edges);
    CHECK(back.vertex_angles == g.vertex_angles);
}

TEST_CASE("circuit json round trip") {
    QFE q = qft_qfe(3);
    auto fl = find_fractional_edge_flow(induced_geometry(q));
    REQUIRE(fl.has_value());
    Circuit c = circuit_from_flow(q, *fl);
    Circuit back = circuit_from_json(circuit_to_json(c));
    CHECK(back.wires == c.wires);
    CHECK(back.plus_wires == c.plus_wires);
    CHECK(back.gates == c.gates);
}

TEST_CASE("pattern json round trip keeps the signal forms") {
    std::mt19937_64 rng(71);
    auto [q, gf] = qt::random_gflow_qfe(rng, 6);
    MeasurementPattern p = pattern_from_gflow(q, gf);
    MeasurementPattern back = pattern_from_json(pattern_to_json(p));
    CHECK(back == p);
}

TEST_CASE("tableau json round trip") {
    LeuvenTableau tab = random_tableau(3, 7);
    LeuvenTableau back = tableau_from_json(tableau_to_json(tab));
    CHECK(back.c == tab.c);
    CHECK(back.h == tab.h);
    SUBCASE("bad bits rejected") {
        json j = tableau_to_json(tab);
        j["c"][0][0] = 2;
        CHECK_THROWS_AS(tableau_from_json(j), FormatError);
    }
}

TEST_CASE("artifact sniffing") {
    CHECK(sniff_artifact(qfe_to_json(qft_qfe(1))) == ArtifactKind::Qfe);
    CHECK(sniff_artifact(geometry_to_json(induced_geometry(qft_qfe(1)))) ==
          ArtifactKind::Geometry);
    CHECK(sniff_artifact(tableau_to_json(random_tableau(1, 0))) == ArtifactKind::Tableau);
    CHECK_THROWS_AS(sniff_artifact(json::object()), FormatError);
}

TEST_CASE("cli end to end") {
    auto dir = temp_dir();
    auto path = [&](const char* name) { return (dir / name).string(); };

    SUBCASE("qft then flow then synth-circuit with verification") {
        CliResult qft = run_cli("qft 2 --out " + path("qft2.qfe.json"));
        CHECK(qft.exit_code == 0);
        QFE q = qfe_from_json(load_json_file(path("qft2.qfe.json")));
        CHECK(q.size() == 4);

        CliResult flow = run_cli("flow --in " + path("qft2.qfe.json"));
        CHECK(flow.exit_code == 0);
        json fj = json::parse(flow.out);
        CHECK(fj["kind"] == "flow");
        CHECK(fj["f"]["x0"] == "y1");
        CHECK(fj["f"]["x1"] == "y0");

        CliResult qft5 = run_cli("qft 5 --out " + path("qft5.qfe.json"));
        CHECK(qft5.exit_code == 0);
        CliResult synth = run_cli("synth-circuit --in " + path("qft5.qfe.json") +
                                  " --verify --out " + path("qft5.circ.json"));
        CHECK(synth.exit_code == 0);
        Circuit c = circuit_from_json(load_json_file(path("qft5.circ.json")));
        CHECK(c.count(Gate::Kind::J) == 5);
        CHECK(c.count(Gate::Kind::CZ) == 10);
    }

    SUBCASE("clifford pipeline and verify verb") {
        CliResult tab = run_cli("random-tableau 2 --seed 5 --out " + path("t.tab.json"));
        CHECK(tab.exit_code == 0);
        CliResult again = run_cli("random-tableau 2 --seed 5");
        CHECK(json::parse(again.out) == load_json_file(path("t.tab.json")));

        CliResult qfe = run_cli("clifford-qfe --in " + path("t.tab.json") + " --verify --out " +
                                path("t.qfe.json"));
        CHECK(qfe.exit_code == 0);
        CliResult pat = run_cli("clifford-pattern --in " + path("t.tab.json") +
                                " --verify --out " + path("t.pat.json"));
        CHECK(pat.exit_code == 0);
        CliResult rep = run_cli("verify " + path("t.qfe.json") + " " + path("t.pat.json"));
        CHECK(rep.exit_code == 0);
        json rj = json::parse(rep.out);
        CHECK(rj["status"] == "ok");
    }

    SUBCASE("invalid tableau exits with a domain failure") {
        json bad;
        bad["n"] = 1;
        bad["c"] = {{1, 1}, {1, 1}};
        bad["h"] = {0, 0};
        save_json_file(path("bad.tab.json"), bad);
        CliResult r = run_cli("clifford-pattern --in " + path("bad.tab.json"));
        CHECK(r.exit_code == 1);
    }

    SUBCASE("geometry without a flow exits 1") {
        QFE q = qft_qfe(2);
        json gj = geometry_to_json(induced_geometry(q));
        // delete the unit edge x0-y1, killing every flow
        json edges = json::array();
        for (const auto& e : gj["edges"])
            if (!(e["u"] == "x0" && e["v"] == "y1")) edges.push_back(e);
        gj["edges"] = edges;
        save_json_file(path("noflow.geom.json"), gj);
        CliResult r = run_cli("fflow --in " + path("noflow.geom.json"));
        CHECK(r.exit_code == 1);
    }

    SUBCASE("usage and format errors exit 2") {
        CHECK(run_cli("nonsense-verb").exit_code == 2);
        CHECK(run_cli("flow").exit_code == 2);  // missing --in
        save_json_file(path("junk.json"), json{{"what", 1}});
        CHECK(run_cli("flow --in " + path("junk.json")).exit_code == 2);
    }

    SUBCASE("verify reports mismatch with exit 1") {
        run_cli("qft 1 --out " + path("h.qfe.json"));
        Circuit c;
        c.wires = 1;
        c.gates = {Gate{Gate::Kind::Z, 0, -1, Angle::half_pi()}};
        save_json_file(path("s.circ.json"), circuit_to_json(c));
        CliResult r = run_cli("verify " + path("h.qfe.json") + " " + path("s.circ.json"));
        CHECK(r.exit_code == 1);
        CHECK(json::parse(r.out)["status"] == "fail");
    }

    std::filesystem::remove_all(dir);
}
