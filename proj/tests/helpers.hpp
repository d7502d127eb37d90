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

// Shared fixtures and independent oracles for the test suites. Oracles here
// deliberately avoid the library's fast paths: matrix products are naive
// triple loops, the DFT is built from its closed form, and so on.

#pragma once

#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qf/flows.hpp"
#include "qf/gf2.hpp"
#include "qf/qfe.hpp"
#include "qf/synthesis.hpp"

namespace qt {

inline qf::BitMatrix random_bit_matrix(std::size_t rows, std::size_t cols,
                                       std::mt19937_64& rng) {
    qf::BitMatrix m(rows, cols);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
    return m;
}

inline qf::BitVector random_bit_vector(std::size_t n, std::mt19937_64& rng) {
    qf::BitVector v(n);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t i = 0; i < n; ++i) v.set(i, bit(rng));
    return v;
}

// Naive triple-loop product over GF(2).
inline qf::BitMatrix naive_mat_mul(const qf::BitMatrix& a, const qf::BitMatrix& b) {
    qf::BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            bool acc = false;
            for (std::size_t k = 0; k < a.cols(); ++k) acc ^= a.get(i, k) && b.get(k, j);
            out.set(i, j, acc);
        }
    return out;
}

// Integer-indexed DFT matrix F[r][c] = e^(2 pi i r c / 2^n) / sqrt(2^n).
inline qf::ComplexMatrix dft_matrix(std::size_t n) {
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

// The J(alpha) expansion: input u, output v, Q = pi uv + alpha u^2, C = sqrt(2).
inline qf::QFE j_qfe(const qf::Angle& alpha) {
    qf::QFE q;
    q.vertices = {"u", "v"};
    q.inputs = {0};
    q.outputs = {1};
    q.form.add(0, 1, qf::Angle::pi());
    q.form.add(0, 0, alpha);
    q.norm.sqrt2_power = 1;
    return q;
}

inline qf::ComplexMatrix j_matrix(double alpha) {
    qf::ComplexMatrix m(2, 2);
    double s = 1.0 / std::sqrt(2.0);
    m.at(0, 0) = s;
    m.at(0, 1) = s * std::polar(1.0, alpha);
    m.at(1, 0) = s;
    m.at(1, 1) = -s * std::polar(1.0, alpha);
    return m;
}

// Path expansion 1-2-...-n with I = {first}, O = {last}, all angles zero.
inline qf::QFE path_qfe(std::size_t n) {
    qf::QFE q;
    for (std::size_t i = 0; i < n; ++i) q.vertices.push_back("p" + std::to_string(i));
    q.inputs = {0};
    q.outputs = {static_cast<int>(n - 1)};
    for (std::size_t i = 0; i + 1 < n; ++i)
        q.form.add(static_cast<int>(i), static_cast<int>(i + 1), qf::Angle::pi());
    q.norm.sqrt2_power = static_cast<int>(n - 1);
    return q;
}

// Identity expansion on one vertex shared by I and O.
inline qf::QFE identity_qfe() {
    qf::QFE q;
    q.vertices = {"w"};
    q.inputs = {0};
    q.outputs = {0};
    return q;
}

// Random unit-weight QFE whose geometry admits a gflow, found by rejection.
// Square terms on measured vertices are multiples of pi/4; outputs carry
// none. Returns the QFE and its gflow.
inline std::pair<qf::QFE, qf::GFlow> random_gflow_qfe(std::mt19937_64& rng,
                                                      std::size_t max_vertices = 7) {
    std::uniform_int_distribution<std::size_t> size_dist(2, max_vertices);
    std::bernoulli_distribution edge(0.45);
    std::uniform_int_distribution<int> angle_num(-3, 4);
    while (true) {
        std::size_t n = size_dist(rng);
        qf::QFE q;
        for (std::size_t i = 0; i < n; ++i) q.vertices.push_back("v" + std::to_string(i));
        std::uniform_int_distribution<std::size_t> count(1, n - 1);
        std::size_t n_out = count(rng);
        std::uniform_int_distribution<std::size_t> in_count(1, n - n_out);
        std::size_t n_in = in_count(rng);
        for (std::size_t i = 0; i < n_in; ++i) q.inputs.push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < n_out; ++i)
            q.outputs.push_back(static_cast<int>(n - n_out + i));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (edge(rng))
                    q.form.add(static_cast<int>(u), static_cast<int>(v), qf::Angle::pi());
        auto gf = qf::find_gflow(qf::induced_geometry(q));
        if (!gf) continue;
        for (std::size_t v = 0; v < n - n_out; ++v) {
            qf::Angle a(angle_num(rng), 4);
            q.form.add(static_cast<int>(v), static_cast<int>(v), a);
        }
        q.norm.sqrt2_power = static_cast<int>(n - n_in);
        return {std::move(q), std::move(*gf)};
    }
}

// Random QFE with a fractional-edge flow: layered chain skeleton with unit
// flow edges plus random cross edges of random weight, accepted when the
// canonical flow satisfies the fractional-edge condition.
inline std::pair<qf::QFE, qf::Flow> random_fractional_flow_qfe(std::mt19937_64& rng,
                                                               std::size_t max_vertices = 10,
                                                               bool want_fractional = false) {
    std::uniform_int_distribution<std::size_t> wires_dist(1, 3);
    std::bernoulli_distribution cross(0.35);
    std::uniform_int_distribution<int> weight_num(-3, 4);
    std::uniform_int_distribution<int> weight_den(1, 4);
    std::uniform_int_distribution<int> angle_num(-3, 4);
    while (true) {
        std::size_t wires = wires_dist(rng);
        std::uniform_int_distribution<std::size_t> len_dist(
            1, std::max<std::size_t>(1, max_vertices / wires));
        qf::QFE q;
        std::vector<std::vector<int>> chain(wires);
        for (std::size_t w = 0; w < wires; ++w) {
            std::size_t len = len_dist(rng);
            for (std::size_t k = 0; k < len; ++k) {
                chain[w].push_back(static_cast<int>(q.vertices.size()));
                q.vertices.push_back("w" + std::to_string(w) + "s" + std::to_string(k));
            }
            q.inputs.push_back(chain[w].front());
            q.outputs.push_back(chain[w].back());
            for (std::size_t k = 0; k + 1 < chain[w].size(); ++k)
                q.form.add(chain[w][k], chain[w][k + 1], qf::Angle::pi());
        }
        // cross edges between distinct chains
        for (std::size_t w1 = 0; w1 < wires; ++w1)
            for (std::size_t w2 = w1 + 1; w2 < wires; ++w2)
                for (int a : chain[w1])
                    for (int b : chain[w2])
                        if (cross(rng)) {
                            qf::Angle wt(weight_num(rng), weight_den(rng));
                            if (!wt.is_zero()) q.form.add(a, b, wt);
                        }
        for (std::size_t v = 0; v < q.vertices.size(); ++v) {
            qf::Angle a(angle_num(rng), 4);
            q.form.add(static_cast<int>(v), static_cast<int>(v), a);
        }
        qf::Geometry geom = qf::induced_geometry(q);
        auto fl = qf::find_fractional_edge_flow(geom);
        if (!fl) continue;
        if (want_fractional && geom.unit_weights()) continue;
        q.norm.sqrt2_power = static_cast<int>(q.vertices.size() - q.inputs.size());
        return {std::move(q), std::move(*fl)};
    }
}

// Unit-weight flow fixture: chains plus unit cross edges, square angles
// only on measured vertices, so the pattern, circuit, and dense routes all
// apply to the same object.
inline std::pair<qf::QFE, qf::Flow> random_unit_flow_qfe(std::mt19937_64& rng,
                                                         std::size_t max_vertices = 8) {
    std::uniform_int_distribution<std::size_t> wires_dist(1, 3);
    std::bernoulli_distribution cross(0.3);
    std::uniform_int_distribution<int> angle_num(-3, 4);
    while (true) {
        std::size_t wires = wires_dist(rng);
        std::uniform_int_distribution<std::size_t> len_dist(
            1, std::max<std::size_t>(1, max_vertices / wires));
        qf::QFE q;
        std::vector<std::vector<int>> chain(wires);
        for (std::size_t w = 0; w < wires; ++w) {
            std::size_t len = len_dist(rng);
            for (std::size_t k = 0; k < len; ++k) {
                chain[w].push_back(static_cast<int>(q.vertices.size()));
                q.vertices.push_back("w" + std::to_string(w) + "s" + std::to_string(k));
            }
            q.inputs.push_back(chain[w].front());
            q.outputs.push_back(chain[w].back());
            for (std::size_t k = 0; k + 1 < chain[w].size(); ++k)
                q.form.add(chain[w][k], chain[w][k + 1], qf::Angle::pi());
        }
        for (std::size_t w1 = 0; w1 < wires; ++w1)
            for (std::size_t w2 = w1 + 1; w2 < wires; ++w2)
                for (int a : chain[w1])
                    for (int b : chain[w2])
                        if (cross(rng)) q.form.add(a, b, qf::Angle::pi());
        std::vector<bool> is_output(q.vertices.size(), false);
        for (int z : q.outputs) is_output[static_cast<std::size_t>(z)] = true;
        for (std::size_t v = 0; v < q.vertices.size(); ++v)
            if (!is_output[v])
                q.form.add(static_cast<int>(v), static_cast<int>(v), qf::Angle(angle_num(rng), 4));
        auto fl = qf::find_flow(qf::induced_geometry(q));
        if (!fl) continue;
        q.norm.sqrt2_power = static_cast<int>(q.vertices.size() - q.inputs.size());
        return {std::move(q), std::move(*fl)};
    }
}

}  // namespace qt
