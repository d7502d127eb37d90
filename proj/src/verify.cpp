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

#include "qf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qf {
namespace {

// Applies a 2x2 gate to one qubit of a tall matrix (rows indexed by the
// full register, qubit `pos` counted from the most significant end of
// `total` qubits).
void apply_single(ComplexMatrix& m, std::size_t pos, std::size_t total, const cplx u[2][2]) {
    const std::size_t stride = std::size_t(1) << (total - 1 - pos);
    for (std::size_t base = 0; base < m.rows(); ++base) {
        if (base & stride) continue;
        std::size_t hi = base | stride;
        for (std::size_t col = 0; col < m.cols(); ++col) {
            cplx a = m.at(base, col);
            cplx b = m.at(hi, col);
            m.at(base, col) = u[0][0] * a + u[0][1] * b;
            m.at(hi, col) = u[1][0] * a + u[1][1] * b;
        }
    }
}

void apply_phase_if(ComplexMatrix& m, cplx phase, auto&& row_predicate) {
    for (std::size_t row = 0; row < m.rows(); ++row) {
        if (!row_predicate(row)) continue;
        for (std::size_t col = 0; col < m.cols(); ++col) m.at(row, col) *= phase;
    }
}

}  // namespace

ComplexMatrix simulate_circuit_dense(const Circuit& c, std::size_t max_wires) {
    c.validate();
    const std::size_t w = static_cast<std::size_t>(c.wires);
    if (w > max_wires) throw SizeLimitError("simulate_circuit_dense: too many wires");
    std::vector<bool> is_plus(w, false);
    for (int p : c.plus_wires) is_plus[static_cast<std::size_t>(p)] = true;

    // Columns enumerate the input wires only; |+> wires enter as fixed
    // normalized columns.
    ComplexMatrix m(1, 1);
    m.at(0, 0) = 1.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t q = 0; q < w; ++q) {
        if (is_plus[q]) {
            ComplexMatrix plus(2, 1);
            plus.at(0, 0) = inv_sqrt2;
            plus.at(1, 0) = inv_sqrt2;
            m = m.kron(plus);
        } else {
            m = m.kron(ComplexMatrix::identity(2));
        }
    }

    auto wire_bit = [&](std::size_t row, int wire) {
        return (row >> (w - 1 - static_cast<std::size_t>(wire))) & 1u;
    };
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case Gate::Kind::H: {
                const cplx u[2][2] = {{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}};
                apply_single(m, static_cast<std::size_t>(g.w0), w, u);
                break;
            }
            case Gate::Kind::J: {
                cplx e = std::polar(1.0, g.angle.radians());
                const cplx u[2][2] = {{inv_sqrt2, inv_sqrt2 * e}, {inv_sqrt2, -inv_sqrt2 * e}};
                apply_single(m, static_cast<std::size_t>(g.w0), w, u);
                break;
            }
            case Gate::Kind::Z: {
                cplx e = std::polar(1.0, g.angle.radians());
                apply_phase_if(m, e, [&](std::size_t row) { return wire_bit(row, g.w0); });
                break;
            }
            case Gate::Kind::CZ: {
                cplx e = std::polar(1.0, g.angle.radians());
                apply_phase_if(m, e, [&](std::size_t row) {
                    return wire_bit(row, g.w0) && wire_bit(row, g.w1);
                });
                break;
            }
        }
    }
    return m;
}

ComplexMatrix simulate_pattern_branch(const MeasurementPattern& p,
                                      const std::vector<int>& outcomes,
                                      std::size_t max_qubits) {
    p.validate();
    const std::size_t nq = p.qubits.size();
    if (nq > max_qubits) throw SizeLimitError("simulate_pattern_branch: too many qubits");
    if (outcomes.size() != p.measurements.size())
        throw PreconditionError("simulate_pattern_branch: one outcome per measurement");

    std::vector<bool> is_input(nq, false);
    for (int v : p.inputs) is_input[static_cast<std::size_t>(v)] = true;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    ComplexMatrix m(1, 1);
    m.at(0, 0) = 1.0;
    for (std::size_t q = 0; q < nq; ++q) {
        if (is_input[q]) {
            m = m.kron(ComplexMatrix::identity(2));
        } else {
            ComplexMatrix plus(2, 1);
            plus.at(0, 0) = inv_sqrt2;
            plus.at(1, 0) = inv_sqrt2;
            m = m.kron(plus);
        }
    }
    // Columns currently follow the inputs in declared-qubit order; reorder
    // at the end to the declared input order.

    // Live qubits and their significance, most significant first.
    std::vector<int> live(nq);
    for (std::size_t q = 0; q < nq; ++q) live[q] = static_cast<int>(q);
    auto bit_of = [&](std::size_t row, int vertex) {
        auto it = std::find(live.begin(), live.end(), vertex);
        std::size_t pos = static_cast<std::size_t>(it - live.begin());
        return (row >> (live.size() - 1 - pos)) & 1u;
    };

    for (const auto& [u, v] : p.entangle)
        for (std::size_t row = 0; row < m.rows(); ++row)
            if (bit_of(row, u) && bit_of(row, v))
                for (std::size_t col = 0; col < m.cols(); ++col) m.at(row, col) = -m.at(row, col);

    std::map<int, int> seen;  // vertex -> outcome so far
    for (std::size_t k = 0; k < p.measurements.size(); ++k) {
        const Measurement& meas = p.measurements[k];
        int s = outcomes[k] ? 1 : 0;
        Angle alpha = meas.angle;
        if (meas.x_correction.eval(seen)) alpha = -alpha;
        if (meas.z_correction.eval(seen)) alpha += Angle::pi();
        seen[meas.vertex] = s;

        // Project onto the outcome's eigenvector: bra (<0| + (-1)^s
        // e^{-i alpha} <1|) / sqrt(2).
        cplx c1 = std::polar(1.0, -alpha.radians()) * (s ? -1.0 : 1.0) * inv_sqrt2;
        auto it = std::find(live.begin(), live.end(), meas.vertex);
        std::size_t pos = static_cast<std::size_t>(it - live.begin());
        std::size_t stride = std::size_t(1) << (live.size() - 1 - pos);
        ComplexMatrix next(m.rows() / 2, m.cols());
        std::size_t out_row = 0;
        for (std::size_t row = 0; row < m.rows(); ++row) {
            if (row & stride) continue;
            for (std::size_t col = 0; col < m.cols(); ++col)
                next.at(out_row, col) =
                    inv_sqrt2 * m.at(row, col) + c1 * m.at(row | stride, col);
            ++out_row;
        }
        m = std::move(next);
        live.erase(it);
    }

    // Final corrections X^b Z^c: apply Z, then X.
    for (const auto& [vtx, corr] : p.final_corrections) {
        bool bx = corr.first.eval(seen);
        bool bz = corr.second.eval(seen);
        auto it = std::find(live.begin(), live.end(), vtx);
        std::size_t pos = static_cast<std::size_t>(it - live.begin());
        std::size_t stride = std::size_t(1) << (live.size() - 1 - pos);
        if (bz)
            for (std::size_t row = 0; row < m.rows(); ++row)
                if (row & stride)
                    for (std::size_t col = 0; col < m.cols(); ++col)
                        m.at(row, col) = -m.at(row, col);
        if (bx)
            for (std::size_t row = 0; row < m.rows(); ++row)
                if (!(row & stride)) {
                    for (std::size_t col = 0; col < m.cols(); ++col)
                        std::swap(m.at(row, col), m.at(row | stride, col));
                }
    }

    // Reorder rows to the declared output order and columns to the declared
    // input order.
    ComplexMatrix out(std::size_t(1) << p.outputs.size(), std::size_t(1) << p.inputs.size());
    std::vector<std::size_t> live_pos_of(nq, 0);
    for (std::size_t i = 0; i < live.size(); ++i)
        live_pos_of[static_cast<std::size_t>(live[i])] = i;
    std::vector<std::size_t> input_pos_of(nq, 0);
    {
        std::size_t next_col_pos = 0;
        for (std::size_t q = 0; q < nq; ++q)
            if (is_input[q]) input_pos_of[q] = next_col_pos++;
    }
    for (std::size_t row = 0; row < out.rows(); ++row) {
        std::size_t src_row = 0;
        for (std::size_t k = 0; k < p.outputs.size(); ++k)
            if ((row >> (p.outputs.size() - 1 - k)) & 1u)
                src_row |= std::size_t(1)
                           << (live.size() - 1 -
                               live_pos_of[static_cast<std::size_t>(p.outputs[k])]);
        for (std::size_t col = 0; col < out.cols(); ++col) {
            std::size_t src_col = 0;
            for (std::size_t k = 0; k < p.inputs.size(); ++k)
                if ((col >> (p.inputs.size() - 1 - k)) & 1u)
                    src_col |= std::size_t(1)
                               << (p.inputs.size() - 1 -
                                   input_pos_of[static_cast<std::size_t>(p.inputs[k])]);
            out.at(row, col) = m.at(src_row, src_col);
        }
    }
    return out;
}

std::vector<BranchReport> simulate_pattern_branches(const MeasurementPattern& p,
                                                    std::size_t max_qubits,
                                                    std::size_t max_measured) {
    p.validate();
    if (p.measurements.size() > max_measured)
        throw SizeLimitError("simulate_pattern_branches: too many measurements");
    if (p.qubits.size() > max_qubits)
        throw SizeLimitError("simulate_pattern_branches: too many qubits");
    const std::size_t count = std::size_t(1) << p.measurements.size();
    std::vector<BranchReport> reports(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(count); ++b) {
        std::vector<int> outcomes(p.measurements.size());
        for (std::size_t k = 0; k < outcomes.size(); ++k)
            outcomes[k] =
                (static_cast<std::size_t>(b) >> (outcomes.size() - 1 - k)) & 1u ? 1 : 0;
        ComplexMatrix map = simulate_pattern_branch(p, outcomes, max_qubits);
        double weight = 0.0;
        for (std::size_t r = 0; r < map.rows(); ++r)
            for (std::size_t c = 0; c < map.cols(); ++c) weight += std::norm(map.at(r, c));
        weight /= static_cast<double>(map.cols());
        reports[static_cast<std::size_t>(b)] =
            BranchReport{std::move(outcomes), std::move(map), weight};
    }
    return reports;
}

std::optional<std::complex<double>> proportional_up_to_scalar(const ComplexMatrix& a,
                                                              const ComplexMatrix& b,
                                                              double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("proportional_up_to_scalar: shape mismatch");
    std::size_t pr = 0, pc = 0;
    double best = 0.0;
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (std::abs(b.at(r, c)) > best) {
                best = std::abs(b.at(r, c));
                pr = r;
                pc = c;
            }
    if (best == 0.0)
        throw PreconditionError("proportional_up_to_scalar: reference matrix is zero");
    cplx scalar = a.at(pr, pc) / b.at(pr, pc);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (std::abs(a.at(r, c) - scalar * b.at(r, c)) > tol) return std::nullopt;
    return scalar;
}

ComplexMatrix pauli_matrix(const PauliOperator& p) {
    const std::size_t n = p.x_bits.size();
    ComplexMatrix x(2, 2), z(2, 2);
    x.at(0, 1) = 1.0;
    x.at(1, 0) = 1.0;
    z.at(0, 0) = 1.0;
    z.at(1, 1) = -1.0;
    ComplexMatrix out(1, 1);
    out.at(0, 0) = 1.0;
    for (std::size_t q = 0; q < n; ++q) {
        ComplexMatrix f = ComplexMatrix::identity(2);
        if (p.x_bits.get(q)) f = f.mul(x);
        if (p.z_bits.get(q)) f = f.mul(z);
        out = out.kron(f);
    }
    cplx phase(1.0, 0.0);
    for (int k = 0; k < p.phase_quarter; ++k) phase *= cplx(0.0, 1.0);
    return out.scaled(phase);
}

std::vector<std::size_t> check_pauli_conjugation(const ComplexMatrix& u,
                                                 const LeuvenTableau& tab, double tol) {
    const std::size_t n = tab.num_qubits();
    const std::size_t dim = std::size_t(1) << n;
    if (u.rows() != dim || u.cols() != dim)
        throw DimensionError("check_pauli_conjugation: matrix size does not fit the tableau");
    if (!u.is_unitary(std::max(tol, 1e-12)))
        throw PreconditionError("check_pauli_conjugation: matrix not unitary");
    BitVector dv = d_vec(tab.c);
    ComplexMatrix udag = u.adjoint();
    std::vector<std::size_t> failures;
    for (std::size_t t = 0; t < 2 * n; ++t) {
        PauliOperator gen = PauliOperator::identity(n);
        if (t < n)
            gen.x_bits.set(t, true);
        else
            gen.z_bits.set(t - n, true);
        ComplexMatrix lhs = u.mul(pauli_matrix(gen)).mul(udag);

        // Image per column t: sign i^{d_t} (-1)^{h_t}, Z part then X part
        // per qubit.
        ComplexMatrix rhs(1, 1);
        rhs.at(0, 0) = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            ComplexMatrix f = ComplexMatrix::identity(2);
            ComplexMatrix x(2, 2), z(2, 2);
            x.at(0, 1) = 1.0;
            x.at(1, 0) = 1.0;
            z.at(0, 0) = 1.0;
            z.at(1, 1) = -1.0;
            if (tab.c.get(n + j, t)) f = f.mul(z);
            if (tab.c.get(j, t)) f = f.mul(x);
            rhs = rhs.kron(f);
        }
        cplx sign(1.0, 0.0);
        if (dv.get(t)) sign *= cplx(0.0, 1.0);
        if (tab.h.get(t)) sign *= -1.0;
        rhs = rhs.scaled(sign);
        if (lhs.max_abs_diff(rhs) > tol) failures.push_back(t);
    }
    return failures;
}

}  // namespace qf
