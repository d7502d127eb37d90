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

// qformc: batch compiler for quadratic form expansions. Verbs cover
// geometry extraction, flow searches, pattern/circuit synthesis, the
// Clifford tableau pipeline, the sum-over-paths translation, and
// cross-artifact verification. Exit codes: 0 success, 1 domain failure,
// 2 usage or format error.

#include <complex>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qf/flows.hpp"
#include "qf/json_io.hpp"
#include "qf/synthesis.hpp"
#include "qf/verify.hpp"

namespace {

struct Options {
    std::string in;
    std::string out;
    std::string in_b;  // second positional of `verify`
    bool verify = false;
    double tol = qf::kDefaultTol;
    std::size_t max_dense = qf::kDenseVertexLimit;
    std::uint64_t seed = 0;
    std::size_t n = 0;
};

void emit(const Options& opt, const nlohmann::json& j) {
    if (opt.out.empty())
        std::cout << j.dump(2) << '\n';
    else
        qf::save_json_file(opt.out, j);
}

qf::Geometry load_geometry_like(const std::string& path) {
    auto j = qf::load_json_file(path);
    switch (qf::sniff_artifact(j)) {
        case qf::ArtifactKind::Qfe:
            return qf::induced_geometry(qf::qfe_from_json(j));
        case qf::ArtifactKind::Geometry:
            return qf::geometry_from_json(j);
        default:
            throw qf::FormatError("expected a QFE or geometry file: " + path);
    }
}

qf::QFE load_qfe(const std::string& path) {
    auto j = qf::load_json_file(path);
    if (qf::sniff_artifact(j) != qf::ArtifactKind::Qfe)
        throw qf::FormatError("expected a QFE file: " + path);
    return qf::qfe_from_json(j);
}

qf::ComplexMatrix dense_of_artifact(const std::string& path, const Options& opt) {
    auto j = qf::load_json_file(path);
    switch (qf::sniff_artifact(j)) {
        case qf::ArtifactKind::Qfe:
            return qf::evaluate_dense(qf::qfe_from_json(j), opt.max_dense);
        case qf::ArtifactKind::Circuit:
            return qf::simulate_circuit_dense(qf::circuit_from_json(j));
        case qf::ArtifactKind::Pattern: {
            auto p = qf::pattern_from_json(j);
            return qf::simulate_pattern_branch(p,
                                               std::vector<int>(p.measurements.size(), 0));
        }
        case qf::ArtifactKind::Tableau:
            return qf::evaluate_dense(
                qf::clifford_to_qfe(qf::tableau_from_json(j)).qfe, opt.max_dense);
        default:
            throw qf::FormatError("artifact has no dense interpretation: " + path);
    }
}

void require_proportional(const qf::ComplexMatrix& got, const qf::ComplexMatrix& want,
                          double tol, const char* what) {
    auto scalar = qf::proportional_up_to_scalar(got, want, tol);
    if (!scalar) throw qf::Error(std::string(what) + ": verification mismatch");
}

// Branch maps must agree with the positive branch up to per-branch phase.
void require_branches_uniform(const qf::MeasurementPattern& p, double tol) {
    auto reports = qf::simulate_pattern_branches(p);
    const qf::ComplexMatrix& positive = reports.front().map;
    for (const auto& rep : reports) {
        auto scalar = qf::proportional_up_to_scalar(rep.map, positive, tol);
        if (!scalar || std::abs(std::abs(*scalar) - 1.0) > tol)
            throw qf::Error("pattern branches are not uniform");
    }
}

qf::ComplexMatrix dft_matrix(std::size_t n) {
    std::size_t dim = std::size_t(1) << n;
    qf::ComplexMatrix f(dim, dim);
    double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            f.at(r, c) = std::polar(norm, 2.0 * std::numbers::pi *
                                              static_cast<double>(r * c % dim) /
                                              static_cast<double>(dim));
    return f;
}

int run(const std::string& verb, const Options& opt) {
    using nlohmann::json;
    if (verb == "geometry") {
        qf::QFE q = load_qfe(opt.in);
        emit(opt, qf::geometry_to_json(qf::induced_geometry(q)));
        return 0;
    }
    if (verb == "flow" || verb == "gflow" || verb == "fflow") {
        qf::Geometry g = load_geometry_like(opt.in);
        if (verb == "gflow") {
            auto gf = qf::find_gflow(g);
            if (!gf) {
                std::cerr << "no gflow exists for this geometry\n";
                return 1;
            }
            emit(opt, qf::gflow_to_json(g, *gf));
            return 0;
        }
        auto fl = verb == "flow" ? qf::find_flow(g) : qf::find_fractional_edge_flow(g);
        if (!fl) {
            std::cerr << "no " << (verb == "flow" ? "flow" : "fractional-edge flow")
                      << " exists for this geometry\n";
            return 1;
        }
        emit(opt, qf::flow_to_json(g, *fl));
        return 0;
    }
    if (verb == "synth-pattern") {
        qf::QFE q = load_qfe(opt.in);
        auto gf = qf::find_gflow(qf::induced_geometry(q));
        if (!gf) {
            std::cerr << "no gflow exists; cannot synthesize a pattern\n";
            return 1;
        }
        qf::MeasurementPattern p = qf::standardize_pattern(qf::pattern_from_gflow(q, *gf));
        if (opt.verify) {
            require_branches_uniform(p, opt.tol);
            auto positive =
                qf::simulate_pattern_branch(p, std::vector<int>(p.measurements.size(), 0));
            require_proportional(positive, qf::evaluate_dense(q, opt.max_dense), opt.tol,
                                 "synth-pattern");
        }
        emit(opt, qf::pattern_to_json(p));
        return 0;
    }
    if (verb == "synth-circuit") {
        qf::QFE q = load_qfe(opt.in);
        auto fl = qf::find_fractional_edge_flow(qf::induced_geometry(q));
        if (!fl) {
            std::cerr << "no fractional-edge flow exists; cannot synthesize a circuit\n";
            return 1;
        }
        qf::Circuit c = qf::circuit_from_flow(q, *fl);
        if (opt.verify)
            require_proportional(qf::simulate_circuit_dense(c),
                                 qf::evaluate_dense(q, opt.max_dense), opt.tol,
                                 "synth-circuit");
        emit(opt, qf::circuit_to_json(c));
        return 0;
    }
    if (verb == "clifford-qfe") {
        auto tab = qf::tableau_from_json(qf::load_json_file(opt.in));
        qf::CliffordExpansion exp = qf::clifford_to_qfe(tab);
        if (opt.verify) {
            auto failures = qf::check_pauli_conjugation(
                qf::evaluate_dense(exp.qfe, opt.max_dense), tab, opt.tol);
            if (!failures.empty())
                throw qf::Error("clifford-qfe: conjugation check failed for generator " +
                                std::to_string(failures.front()));
        }
        emit(opt, qf::qfe_to_json(exp.qfe));
        return 0;
    }
    if (verb == "clifford-pattern") {
        auto tab = qf::tableau_from_json(qf::load_json_file(opt.in));
        qf::MeasurementPattern p = qf::clifford_pattern(tab);
        if (opt.verify) {
            require_branches_uniform(p, opt.tol);
            auto positive =
                qf::simulate_pattern_branch(p, std::vector<int>(p.measurements.size(), 0));
            require_proportional(
                positive,
                qf::evaluate_dense(qf::clifford_to_qfe(tab).qfe, opt.max_dense), opt.tol,
                "clifford-pattern");
        }
        emit(opt, qf::pattern_to_json(p));
        return 0;
    }
    if (verb == "circuit-to-qfe") {
        auto j = qf::load_json_file(opt.in);
        if (qf::sniff_artifact(j) != qf::ArtifactKind::Circuit)
            throw qf::FormatError("expected a circuit file: " + opt.in);
        qf::Circuit c = qf::expand_j_gates(qf::circuit_from_json(j));
        qf::QFE q = qf::circuit_to_qfe(c);
        if (opt.verify) {
            double err = qf::evaluate_dense(q, opt.max_dense)
                             .max_abs_diff(qf::simulate_circuit_dense(c));
            if (err > opt.tol) throw qf::Error("circuit-to-qfe: verification mismatch");
        }
        emit(opt, qf::qfe_to_json(q));
        return 0;
    }
    if (verb == "qft") {
        qf::QFE q = qf::qft_qfe(opt.n);
        if (opt.verify)
            require_proportional(qf::evaluate_dense(q, opt.max_dense), dft_matrix(opt.n),
                                 opt.tol, "qft");
        emit(opt, qf::qfe_to_json(q));
        return 0;
    }
    if (verb == "random-tableau") {
        emit(opt, qf::tableau_to_json(qf::random_tableau(opt.n, opt.seed)));
        return 0;
    }
    if (verb == "verify") {
        qf::ComplexMatrix a = dense_of_artifact(opt.in, opt);
        qf::ComplexMatrix b = dense_of_artifact(opt.in_b, opt);
        qf::VerificationReport report;
        auto scalar = qf::proportional_up_to_scalar(a, b, opt.tol);
        if (scalar) {
            report.ok = true;
            report.scalar = *scalar;
            report.max_abs_error = a.max_abs_diff(b.scaled(*scalar));
        } else {
            report.ok = false;
            report.max_abs_error = a.max_abs_diff(b);
        }
        emit(opt, qf::report_to_json(report));
        return report.ok ? 0 : 1;
    }
    throw qf::FormatError("unknown verb: " + verb);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compiler for quadratic form expansions"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_in, bool has_verify) {
        if (needs_in) sub->add_option("--in", opt.in, "input file")->required();
        sub->add_option("--out", opt.out, "output file (stdout when omitted)");
        if (has_verify) sub->add_flag("--verify", opt.verify, "run the dense oracle");
        sub->add_option("--tol", opt.tol, "verification tolerance");
        sub->add_option("--max-dense-vertices", opt.max_dense, "dense evaluation cap");
    };

    add_common(app.add_subcommand("geometry", "induced geometry of a QFE"), true, false);
    add_common(app.add_subcommand("flow", "find a flow"), true, false);
    add_common(app.add_subcommand("gflow", "find a gflow"), true, false);
    add_common(app.add_subcommand("fflow", "find a fractional-edge flow"), true, false);
    add_common(app.add_subcommand("synth-pattern", "measurement pattern via gflow"), true,
               true);
    add_common(app.add_subcommand("synth-circuit", "circuit via fractional-edge flow"), true,
               true);
    add_common(app.add_subcommand("clifford-qfe", "QFE of a Leuven tableau"), true, true);
    add_common(app.add_subcommand("clifford-pattern", "pattern of a Leuven tableau"), true,
               true);
    add_common(app.add_subcommand("circuit-to-qfe", "sum-over-paths translation"), true, true);

    auto* qft = app.add_subcommand("qft", "Fourier transform QFE");
    qft->add_option("n", opt.n, "qubit count")->required();
    add_common(qft, false, true);

    auto* rnd = app.add_subcommand("random-tableau", "random Clifford tableau");
    rnd->add_option("n", opt.n, "qubit count")->required();
    rnd->add_option("--seed", opt.seed, "rng seed");
    rnd->add_option("--out", opt.out, "output file (stdout when omitted)");

    auto* ver = app.add_subcommand("verify", "cross-artifact proportionality");
    ver->add_option("a", opt.in, "first artifact")->required();
    ver->add_option("b", opt.in_b, "second artifact")->required();
    ver->add_option("--out", opt.out, "output file (stdout when omitted)");
    ver->add_option("--tol", opt.tol, "verification tolerance");
    ver->add_option("--max-dense-vertices", opt.max_dense, "dense evaluation cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const qf::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
