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

#include <random>

#include "helpers.hpp"
#include "qf/synthesis.hpp"
#include "qf/verify.hpp"

using namespace qf;

namespace {

// Branch maps all equal the positive branch up to a unit-modulus scalar.
void check_branches_uniform(const MeasurementPattern& p, double tol = 1e-9) {
    auto reports = simulate_pattern_branches(p);
    const ComplexMatrix& positive = reports.front().map;
    for (const auto& rep : reports) {
        auto scalar = proportional_up_to_scalar(rep.map, positive, tol);
        REQUIRE(scalar.has_value());
        CHECK(std::abs(std::abs(*scalar) - 1.0) < tol);
    }
}

}  // namespace

TEST_CASE("pattern_from_gflow reproduces the teleportation pattern") {
    Angle alpha(1, 4);
    QFE q = qt::j_qfe(alpha);
    auto gf = find_gflow(induced_geometry(q));
    REQUIRE(gf.has_value());
    MeasurementPattern p = pattern_from_gflow(q, *gf);
    REQUIRE(p.measurements.size() == 1);
    CHECK(p.measurements[0].vertex == 0);
    CHECK(p.measurements[0].angle == -alpha);
    REQUIRE(p.final_corrections.count(1));
    CHECK(p.final_corrections.at(1).first.signals == std::set<int>{0});
    CHECK(p.final_corrections.at(1).second.empty());
    check_branches_uniform(p);
    auto positive = simulate_pattern_branch(p, {0});
    auto scalar = proportional_up_to_scalar(positive, evaluate_dense(q), 1e-9);
    CHECK(scalar.has_value());
}

TEST_CASE("pattern_from_gflow of the identity expansion is empty") {
    QFE q = qt::identity_qfe();
    auto gf = find_gflow(induced_geometry(q));
    REQUIRE(gf.has_value());
    MeasurementPattern p = pattern_from_gflow(q, *gf);
    CHECK(p.measurements.empty());
    CHECK(p.entangle.empty());
    CHECK(p.final_corrections.empty());
}

TEST_CASE("pattern_from_gflow on the path") {
    QFE q = qt::path_qfe(3);
    auto gf = find_gflow(induced_geometry(q));
    REQUIRE(gf.has_value());
    MeasurementPattern p = pattern_from_gflow(q, *gf);
    CHECK(p.measurements.size() == 2);
    check_branches_uniform(p);
    auto positive = simulate_pattern_branch(p, {0, 0});
    auto scalar = proportional_up_to_scalar(positive, ComplexMatrix::identity(2), 1e-9);
    CHECK(scalar.has_value());
}

TEST_CASE("pattern_from_gflow rejects bad inputs") {
    QFE q = qt::j_qfe(Angle(1, 4));
    auto gf = find_gflow(induced_geometry(q));
    REQUIRE(gf.has_value());
    SUBCASE("fractional edges") {
        QFE frac = q;
        frac.form.add(0, 1, Angle(1, 2));  // edge weight now 3/2 -> -1/2
        CHECK_THROWS_AS(pattern_from_gflow(frac, *gf), FractionalEdgeError);
    }
    SUBCASE("invalid gflow") {
        GFlow bad = *gf;
        bad.g.at(0) = {0};
        CHECK_THROWS_AS(pattern_from_gflow(q, bad), InvalidFlowError);
    }
    SUBCASE("square term on an output") {
        QFE rotated = q;
        rotated.form.add(1, 1, Angle(1, 2));
        CHECK_THROWS_AS(pattern_from_gflow(rotated, *gf), PreconditionError);
    }
}

TEST_CASE("standardize_pattern") {
    SUBCASE("standard patterns are unchanged") {
        QFE q = qt::j_qfe(Angle(1, 4));
        auto gf = find_gflow(induced_geometry(q));
        MeasurementPattern p = pattern_from_gflow(q, *gf);
        MeasurementPattern s = standardize_pattern(p);
        CHECK(standardize_pattern(s) == s);
    }
    SUBCASE("vacuous angle-0 sign flips are dropped, branches preserved") {
        QFE q = qt::path_qfe(3);
        auto gf = find_gflow(induced_geometry(q));
        MeasurementPattern p = pattern_from_gflow(q, *gf);
        // Raw pattern: measuring vertex 0 steers X onto vertex 1.
        CHECK(p.measurements[1].x_correction.signals == std::set<int>{0});
        MeasurementPattern s = standardize_pattern(p);
        CHECK(s.measurements[1].x_correction.empty());
        REQUIRE(s.final_corrections.count(2));
        CHECK(s.final_corrections.at(2).first.signals == std::set<int>{1});
        CHECK(s.final_corrections.at(2).second.signals == std::set<int>{0});
        auto before = simulate_pattern_branches(p);
        auto after = simulate_pattern_branches(s);
        REQUIRE(before.size() == after.size());
        for (std::size_t b = 0; b < before.size(); ++b)
            CHECK(before[b].map.max_abs_diff(after[b].map) < 1e-12);
    }
    SUBCASE("branch maps preserved exactly on random gflow patterns") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 25; ++trial) {
            auto [q, gf] = qt::random_gflow_qfe(rng, 6);
            MeasurementPattern p = pattern_from_gflow(q, gf);
            MeasurementPattern s = standardize_pattern(p);
            auto before = simulate_pattern_branches(p);
            auto after = simulate_pattern_branches(s);
            REQUIRE(before.size() == after.size());
            for (std::size_t b = 0; b < before.size(); ++b)
                CHECK(before[b].map.max_abs_diff(after[b].map) < 1e-12);
        }
    }
}

TEST_CASE("gflow patterns are unitary branch by branch") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        auto [q, gf] = qt::random_gflow_qfe(rng, 7);
        MeasurementPattern p = pattern_from_gflow(q, gf);
        check_branches_uniform(p);
        auto positive =
            simulate_pattern_branch(p, std::vector<int>(p.measurements.size(), 0));
        auto scalar = proportional_up_to_scalar(positive, evaluate_dense(q), 1e-9);
        CHECK(scalar.has_value());
    }
}

TEST_CASE("circuit_from_flow on the J expansion") {
    QFE q = qt::j_qfe(Angle(1, 4));
    auto fl = find_fractional_edge_flow(induced_geometry(q));
    REQUIRE(fl.has_value());
    Circuit c = circuit_from_flow(q, *fl);
    CHECK(c.wires == 1);
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].kind == Gate::Kind::J);
    CHECK(c.gates[0].angle == Angle(1, 4));
    CHECK(c.plus_wires.empty());
    auto scalar =
        proportional_up_to_scalar(simulate_circuit_dense(c), evaluate_dense(q), 1e-9);
    CHECK(scalar.has_value());
}

TEST_CASE("circuit_from_flow matches the transform circuit shape") {
    QFE q = qft_qfe(5);
    auto fl = find_fractional_edge_flow(induced_geometry(q));
    REQUIRE(fl.has_value());
    Circuit c = circuit_from_flow(q, *fl);
    CHECK(c.wires == 5);
    CHECK(c.count(Gate::Kind::J) == 5);
    CHECK(c.count(Gate::Kind::CZ) == 10);
    CHECK(c.count(Gate::Kind::H) == 0);
    for (const Gate& g : c.gates)
        if (g.kind == Gate::Kind::J) CHECK(g.angle.is_zero());
}

TEST_CASE("circuit_from_flow dense-matches the transform") {
    QFE q = qft_qfe(2);
    auto fl = find_fractional_edge_flow(induced_geometry(q));
    REQUIRE(fl.has_value());
    Circuit c = circuit_from_flow(q, *fl);
    auto scalar = proportional_up_to_scalar(simulate_circuit_dense(c), qt::dft_matrix(2), 1e-9);
    CHECK(scalar.has_value());
}

TEST_CASE("circuit_from_flow on random fractional-flow expansions") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        auto [q, fl] = qt::random_fractional_flow_qfe(rng, 9);
        Circuit c = circuit_from_flow(q, fl);
        Geometry geom = induced_geometry(q);
        CHECK(c.count(Gate::Kind::J) == q.vertices.size() - q.outputs.size());
        CHECK(c.gates.size() <= geom.edges.size() + (q.vertices.size() - q.outputs.size()) +
                                    q.outputs.size());
        auto scalar =
            proportional_up_to_scalar(simulate_circuit_dense(c), evaluate_dense(q), 1e-9);
        CHECK(scalar.has_value());
    }
}

TEST_CASE("round trip through the sum-over-paths translation") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        auto [q, fl] = qt::random_fractional_flow_qfe(rng, 10);
        Circuit c = expand_j_gates(circuit_from_flow(q, fl));
        QFE back = circuit_to_qfe(c);
        auto scalar =
            proportional_up_to_scalar(evaluate_dense(back), evaluate_dense(q), 1e-9);
        CHECK(scalar.has_value());
    }
}

TEST_CASE("decompose_about_edge on the transform") {
    QFE q = qft_qfe(2);
    auto fl = find_fractional_edge_flow(induced_geometry(q));
    REQUIRE(fl.has_value());
    // fractional edge x0-y0 has vertex indices 0 and 2
    EdgeDecomposition dec = decompose_about_edge(q, *fl, 0, 2);
    CHECK(dec.interface == std::vector<int>{0, 2});
    QFE recomposed = compose_sequential(compose_sequential(dec.q1, dec.q2), dec.q3);
    auto scalar =
        proportional_up_to_scalar(evaluate_dense(recomposed), evaluate_dense(q), 1e-9);
    CHECK(scalar.has_value());
    // the middle piece is the pure diagonal layer
    CHECK(dec.q2.inputs == dec.q2.outputs);
    for (const auto& [key, angle] : dec.q2.form.terms) CHECK(key.first != key.second);
}

TEST_CASE("decompose_about_edge splits the form exactly") {
    std::mt19937_64 rng(45);
    int done = 0;
    while (done < 20) {
        auto [q, fl] = qt::random_fractional_flow_qfe(rng, 9, /*want_fractional=*/true);
        Geometry geom = induced_geometry(q);
        std::pair<int, int> frac{-1, -1};
        for (const auto& [key, w] : geom.edges)
            if (!is_unit_weight(w)) {
                frac = key;
                break;
            }
        REQUIRE(frac.first >= 0);
        EdgeDecomposition dec;
        dec = decompose_about_edge(q, fl, frac.first, frac.second);
        ++done;

        // Q1 + Q2 + Q3 = Q term by term, in exact rational arithmetic.
        QuadraticForm total;
        auto add_part = [&](const QFE& part) {
            for (const auto& [key, angle] : part.form.terms) {
                int u = q.vertex_index(part.vertices[static_cast<std::size_t>(key.first)]);
                int v = q.vertex_index(part.vertices[static_cast<std::size_t>(key.second)]);
                REQUIRE(u >= 0);
                REQUIRE(v >= 0);
                total.add(u, v, angle);
            }
        };
        add_part(dec.q1);
        add_part(dec.q2);
        add_part(dec.q3);
        CHECK(total == q.form);

        // dense recomposition is proportional to the original
        QFE recomposed = compose_sequential(compose_sequential(dec.q1, dec.q2), dec.q3);
        auto scalar =
            proportional_up_to_scalar(evaluate_dense(recomposed), evaluate_dense(q), 1e-9);
        CHECK(scalar.has_value());

        auto count_fractional = [](const QFE& part) {
            std::size_t k = 0;
            for (const auto& [key, angle] : part.form.terms)
                if (key.first != key.second && !is_unit_weight(angle)) ++k;
            return k;
        };
        CHECK(count_fractional(dec.q1) < count_fractional(q));
        CHECK(count_fractional(dec.q3) < count_fractional(q));
    }
}

TEST_CASE("decompose_about_edge rejects unit edges") {
    QFE q = qft_qfe(2);
    auto fl = find_fractional_edge_flow(induced_geometry(q));
    CHECK_THROWS_AS(decompose_about_edge(q, *fl, 0, 3), PreconditionError);
    CHECK_THROWS_AS(decompose_about_edge(q, *fl, 1, 3), PreconditionError);
}

TEST_CASE("circuit_to_qfe on single gates") {
    SUBCASE("one Hadamard") {
        Circuit c;
        c.wires = 1;
        c.gates = {Gate{Gate::Kind::H, 0, -1, Angle()}};
        QFE q = circuit_to_qfe(c);
        CHECK(q.vertices.size() == 2);
        CHECK(q.form.at(0, 1) == Angle::pi());
        CHECK(q.norm.sqrt2_power == 1);
        ComplexMatrix h = qt::j_matrix(0.0);
        CHECK(evaluate_dense(q).max_abs_diff(h) < 1e-12);
    }
    SUBCASE("one phase gate") {
        Circuit c;
        c.wires = 1;
        c.gates = {Gate{Gate::Kind::Z, 0, -1, Angle::half_pi()}};
        QFE q = circuit_to_qfe(c);
        CHECK(q.vertices.size() == 1);
        CHECK(q.form.at(0, 0) == Angle::half_pi());
        CHECK(q.norm.sqrt2_power == 0);
        ComplexMatrix want(2, 2);
        want.at(0, 0) = 1.0;
        want.at(1, 1) = cplx(0.0, 1.0);
        CHECK(evaluate_dense(q).max_abs_diff(want) < 1e-12);
    }
    SUBCASE("H Z^t H equals the 2x2 product") {
        Angle t(1, 3);
        Circuit c;
        c.wires = 1;
        c.gates = {Gate{Gate::Kind::H, 0, -1, Angle()}, Gate{Gate::Kind::Z, 0, -1, t},
                   Gate{Gate::Kind::H, 0, -1, Angle()}};
        QFE q = circuit_to_qfe(c);
        CHECK(q.vertices.size() == 3);
        ComplexMatrix h = qt::j_matrix(0.0);
        ComplexMatrix z(2, 2);
        z.at(0, 0) = 1.0;
        z.at(1, 1) = std::polar(1.0, t.radians());
        ComplexMatrix want = h.mul(z).mul(h);
        CHECK(evaluate_dense(q).max_abs_diff(want) < 1e-12);
    }
    SUBCASE("J gates must be expanded first") {
        Circuit c;
        c.wires = 1;
        c.gates = {Gate{Gate::Kind::J, 0, -1, Angle(1, 4)}};
        CHECK_THROWS_AS(circuit_to_qfe(c), UnsupportedGateError);
        QFE q = circuit_to_qfe(expand_j_gates(c));
        CHECK(evaluate_dense(q).max_abs_diff(qt::j_matrix(Angle(1, 4).radians())) < 1e-12);
    }
}

TEST_CASE("qft_qfe") {
    SUBCASE("n=1 is the Hadamard") {
        QFE q = qft_qfe(1);
        REQUIRE(q.form.terms.size() == 1);
        CHECK(q.form.at(0, 1) == Angle::pi());
        CHECK(evaluate_dense(q).max_abs_diff(qt::j_matrix(0.0)) < 1e-12);
    }
    SUBCASE("n=2 terms") {
        QFE q = qft_qfe(2);
        CHECK(q.form.at(0, 2) == Angle(1, 2));
        CHECK(q.form.at(0, 3) == Angle::pi());
        CHECK(q.form.at(1, 2) == Angle::pi());
        CHECK(q.form.terms.size() == 3);
        auto scalar = proportional_up_to_scalar(evaluate_dense(q), qt::dft_matrix(2), 1e-9);
        CHECK(scalar.has_value());
    }
    SUBCASE("n=3 matches the direct transform matrix") {
        auto scalar =
            proportional_up_to_scalar(evaluate_dense(qft_qfe(3)), qt::dft_matrix(3), 1e-9);
        REQUIRE(scalar.has_value());
        CHECK(std::abs(*scalar - cplx(1.0, 0.0)) < 1e-9);
    }
}
