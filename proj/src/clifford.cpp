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

#include "qf/clifford.hpp"

#include <algorithm>
#include <random>

namespace qf {
namespace {

BitMatrix block(const BitMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows,
                std::size_t cols) {
    BitMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (m.get(r0 + r, c0 + c)) out.set(r, c, true);
    return out;
}

BitMatrix block_diag(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) out.set(r, c, true);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (b.get(r, c)) out.set(a.rows() + r, a.cols() + c, true);
    return out;
}

bool is_symmetric(const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = r + 1; c < m.cols(); ++c)
            if (m.get(r, c) != m.get(c, r)) return false;
    return true;
}

BitMatrix outer(const BitVector& a, const BitVector& b) {
    BitMatrix out(a.size(), b.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (!a.get(r)) continue;
        for (std::size_t c = 0; c < b.size(); ++c)
            if (b.get(c)) out.set(r, c, true);
    }
    return out;
}

BitMatrix mat_add(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("mat_add: shape mismatch");
    BitMatrix out = a;
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (b.get(r, c)) out.set(r, c, !out.get(r, c));
    return out;
}

void internal_check(bool cond, const char* what) {
    if (!cond) throw Error(std::string("clifford pipeline: ") + what);
}

// Affine GF(2) function of the expansion's path variables.
struct AffineBits {
    std::vector<int> support;  // vertex indices
    bool constant = false;
};

// Accumulates angle contributions of GF(2)-valued expressions into a real
// quadratic form over bits, where only the value mod 2pi matters.
struct FormBuilder {
    QuadraticForm form;
    Angle constant;

    // pi * f * g
    void add_pi_product(const AffineBits& f, const AffineBits& g) {
        for (int k : f.support)
            for (int l : g.support) form.add(k, l, Angle::pi());
        if (g.constant)
            for (int k : f.support) form.add(k, k, Angle::pi());
        if (f.constant)
            for (int l : g.support) form.add(l, l, Angle::pi());
        if (f.constant && g.constant) constant += Angle::pi();
    }

    // pi * f
    void add_pi_linear(const AffineBits& f) {
        for (int k : f.support) form.add(k, k, Angle::pi());
        if (f.constant) constant += Angle::pi();
    }

    // sign * (pi/2) * f. The parity expands mod 4 as
    //   c + sum x_k - 2 (c * sum x_k + sum_{k<l} x_k x_l),
    // so the half angle lands on squares and whole pi on the interactions.
    void add_half_pi_parity(const AffineBits& f, int sign) {
        Angle half(sign, 2);
        for (int k : f.support) {
            form.add(k, k, half);
            if (f.constant) form.add(k, k, Angle::pi());
        }
        for (std::size_t i = 0; i < f.support.size(); ++i)
            for (std::size_t j = i + 1; j < f.support.size(); ++j)
                form.add(f.support[i], f.support[j], Angle::pi());
        if (f.constant) constant += half;
    }
};

}  // namespace

std::vector<std::string> validate_tableau(const LeuvenTableau& tab) {
    std::vector<std::string> violations;
    if (tab.c.rows() != tab.c.cols() || tab.c.rows() % 2 != 0 || tab.c.rows() == 0) {
        violations.push_back("tableau matrix must be 2n x 2n");
        return violations;
    }
    std::size_t n = tab.num_qubits();
    if (tab.h.size() != 2 * n) {
        violations.push_back("sign vector length must be 2n");
        return violations;
    }
    if (gf2_rank(tab.c) != 2 * n) violations.push_back("tableau matrix is singular");
    // Commutation preservation: columns s and t must anticommute exactly
    // when the generators they replace do.
    BitMatrix lambda(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        lambda.set(i, n + i, true);
        lambda.set(n + i, i, true);
    }
    BitMatrix probe = mat_mul(mat_mul(tab.c.transposed(), lambda), tab.c);
    if (!(probe == lambda)) violations.push_back("tableau not symplectic");
    return violations;
}

CliffordExpansion clifford_to_qfe(const LeuvenTableau& tab) {
    {
        auto violations = validate_tableau(tab);
        if (!violations.empty()) throw TableauError("clifford_to_qfe: " + violations.front());
    }
    const std::size_t n = tab.num_qubits();
    BitMatrix e = block(tab.c, 0, 0, n, n);
    BitMatrix g = block(tab.c, n, 0, n, n);

    RankNormalForm rnf = rank_normal_decompose(g);
    const std::size_t r = rnf.rank;
    const std::size_t nr = n - r;

    BitMatrix e_tilde = mat_mul(mat_mul(rnf.r1t.transposed(), e), rnf.r2t);
    BitMatrix e11 = block(e_tilde, 0, 0, nr, nr);
    BitMatrix e11_inv;
    try {
        e11_inv = invert(e11);
    } catch (const SingularError&) {
        throw Error("clifford_to_qfe: leading block not invertible");
    }
    const BitMatrix& r1 = rnf.r1t;
    BitMatrix r2 =
        mat_mul(block_diag(e11_inv, BitMatrix::identity(r)).transposed(), rnf.r2t.transposed());

    BitMatrix r1_inv = invert(r1);
    BitMatrix r2_inv = invert(r2);

    // Change of basis on the whole tableau; the result must carry the
    // identity in the top-left corner and the rank block in the lower left.
    BitMatrix left = block_diag(r1.transposed(), r1_inv);
    BitMatrix right = block_diag(r2.transposed(), r2_inv);
    BitMatrix ct = mat_mul(mat_mul(left, tab.c), right);

    internal_check(block(ct, 0, 0, nr, nr) == BitMatrix::identity(nr),
                   "leading identity block missing");
    BitMatrix g_check(n, n);
    for (std::size_t i = 0; i < r; ++i) g_check.set(nr + i, nr + i, true);
    internal_check(block(ct, n, 0, n, n) == g_check, "rank block mismatch");

    BitMatrix e12 = block(ct, 0, nr, nr, r);
    BitMatrix e22 = block(ct, nr, nr, r, r);
    BitMatrix f11 = block(ct, 0, n, nr, nr);
    BitMatrix h21 = block(ct, n + nr, n, r, nr);
    BitMatrix h22 = block(ct, n + nr, n + nr, r, r);

    // Coupling matrices of the output and input sides.
    BitMatrix m_br(n, n);
    {
        BitMatrix tl = mat_add(f11, mat_mul(e12, h21));
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nr; ++j)
                if (tl.get(i, j)) m_br.set(i, j, true);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (e12.get(i, j)) {
                    m_br.set(i, nr + j, true);
                    m_br.set(nr + j, i, true);
                }
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (e22.get(i, j)) m_br.set(nr + i, nr + j, true);
    }
    BitMatrix m_bc(n, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < nr; ++j)
            if (h21.get(i, j)) {
                m_bc.set(nr + i, j, true);
                m_bc.set(j, nr + i, true);
            }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (h22.get(i, j)) m_bc.set(nr + i, nr + j, true);

    internal_check(is_symmetric(m_br), "output coupling matrix not symmetric");
    internal_check(is_symmetric(m_bc), "input coupling matrix not symmetric");

    BitVector d_br = diag_vec(m_br);
    BitVector d_bc = diag_vec(m_bc);
    BitMatrix l_br = lower_strict(mat_add(m_br, outer(d_br, d_br)));
    BitMatrix l_bc = lower_strict(mat_add(m_bc, outer(d_bc, d_bc)));
    internal_check(
        mat_add(mat_add(l_br, l_br.transposed()), outer(d_br, d_br)) == m_br,
        "lower split does not rebuild the output coupling");
    internal_check(
        mat_add(mat_add(l_bc, l_bc.transposed()), outer(d_bc, d_bc)) == m_bc,
        "lower split does not rebuild the input coupling");

    BitMatrix pi_r(n, n);
    for (std::size_t i = 0; i < r; ++i) pi_r.set(nr + i, nr + i, true);
    BitMatrix pi_perp = mat_add(BitMatrix::identity(n), pi_r);

    // Offset vectors of the change of variables.
    BitVector h_top(n), h_bot(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (tab.h.get(i)) h_top.set(i, true);
        if (tab.h.get(n + i)) h_bot.set(i, true);
    }
    BitVector t = h_top;
    {
        BitMatrix rp = mat_mul(r2_inv, pi_r);
        t ^= diag_vec(mat_mul(mat_mul(rp, l_br), rp.transposed()));
    }
    BitVector h_bc = r2_inv.transposed().mul(h_bot);
    {
        BitMatrix inner = mat_add(l_bc, mat_mul(pi_r, m_bc));
        BitMatrix left_f = mat_add(pi_perp, mat_mul(pi_r, m_bc));
        BitMatrix right_f = mat_add(pi_perp, mat_mul(m_bc, pi_r));
        inner = mat_add(inner, mat_mul(mat_mul(left_f, l_br), right_f));
        BitVector diag = diag_vec(mat_mul(mat_mul(r2.transposed(), inner), r2));
        h_bc ^= r2_inv.transposed().mul(diag);
    }

    // Vertex layout of the expansion: inputs (b then c), the rank block,
    // the auxiliary ladder, and the output copies.
    CliffordExpansion exp;
    exp.r = r;
    exp.r1 = r1;
    exp.r2 = r2;
    exp.t = t;
    QFE& q = exp.qfe;
    auto add_group = [&](const char* prefix, std::size_t count) {
        int base = static_cast<int>(q.vertices.size());
        for (std::size_t i = 0; i < count; ++i)
            q.vertices.push_back(prefix + std::to_string(i));
        return base;
    };
    int base_b = add_group("b", nr);
    int base_c = add_group("c", r);
    int base_r = add_group("r", r);
    int base_a = add_group("a", nr);
    int base_bp = add_group("bp", nr);
    for (std::size_t i = 0; i < nr; ++i) q.inputs.push_back(base_b + static_cast<int>(i));
    for (std::size_t i = 0; i < r; ++i) q.inputs.push_back(base_c + static_cast<int>(i));
    for (std::size_t i = 0; i < nr; ++i) q.outputs.push_back(base_bp + static_cast<int>(i));
    for (std::size_t i = 0; i < r; ++i) q.outputs.push_back(base_r + static_cast<int>(i));

    // Affine views of the substituted variables: u = r2 (x_I + t) on the
    // input side, w = inv(r1) x_O' on the output side, a the ladder bits.
    std::vector<AffineBits> u(n), w(n), aux(nr);
    BitVector r2t_vec = r2.mul(t);
    for (std::size_t i = 0; i < n; ++i) {
        AffineBits f;
        for (std::size_t k = 0; k < n; ++k)
            if (r2.get(i, k))
                f.support.push_back(k < nr ? base_b + static_cast<int>(k)
                                           : base_c + static_cast<int>(k - nr));
        f.constant = r2t_vec.get(i);
        u[i] = std::move(f);
    }
    for (std::size_t i = 0; i < n; ++i) {
        AffineBits f;
        for (std::size_t k = 0; k < n; ++k)
            if (r1_inv.get(i, k))
                f.support.push_back(k < nr ? base_bp + static_cast<int>(k)
                                           : base_r + static_cast<int>(k - nr));
        w[i] = std::move(f);
    }
    for (std::size_t i = 0; i < nr; ++i) aux[i] = AffineBits{{base_a + static_cast<int>(i)}, false};

    FormBuilder fb;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (l_br.get(i, j)) fb.add_pi_product(w[i], w[j]);
    for (std::size_t i = nr; i < n; ++i) fb.add_pi_product(w[i], u[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (l_bc.get(i, j)) fb.add_pi_product(u[i], u[j]);
    for (std::size_t i = 0; i < n; ++i)
        if (h_bc.get(i)) fb.add_pi_linear(u[i]);
    for (std::size_t i = 0; i < nr; ++i) {
        fb.add_pi_product(u[i], aux[i]);
        fb.add_pi_product(w[i], aux[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (d_br.get(i)) fb.add_half_pi_parity(w[i], -1);
    for (std::size_t i = 0; i < n; ++i)
        if (d_bc.get(i)) fb.add_half_pi_parity(u[i], -1);

    q.form = std::move(fb.form);
    q.norm.sqrt2_power = static_cast<int>(2 * n - r);
    q.norm.phase = -fb.constant;

    for (const auto& [key, angle] : q.form.terms)
        if (key.first != key.second)
            internal_check(angle.is_pi(), "cross term outside {0, pi}");
        else
            internal_check(angle.is_half_pi_multiple(), "square term not a multiple of pi/2");
    q.validate();
    return exp;
}

MeasurementPattern interpolate_corrections(const CliffordExpansion& exp) {
    const QFE& q = exp.qfe;
    const std::size_t nq = q.size();
    const std::size_t r = exp.r;
    const std::size_t n = exp.num_qubits();
    const std::size_t nr = n - r;
    Geometry geom = induced_geometry(q);
    internal_check(geom.unit_weights(), "expansion geometry must have unit edges");

    MeasurementPattern p;
    p.qubits = q.vertices;
    p.inputs = q.inputs;
    p.outputs = q.outputs;
    for (const auto& [key, wt] : geom.edges) p.entangle.push_back(key);

    // Canonical measurement order: ladder first, then the b and c inputs.
    std::vector<int> order;
    for (std::size_t i = 0; i < nr; ++i) order.push_back(static_cast<int>(n + r + i));  // a
    for (std::size_t i = 0; i < nr; ++i) order.push_back(static_cast<int>(i));          // b
    for (std::size_t i = 0; i < r; ++i) order.push_back(static_cast<int>(nr + i));      // c

    // Graph-state generators K(v) = X_v prod Z_neighbors for non-inputs.
    std::vector<bool> is_input(nq, false);
    for (int v : q.inputs) is_input[static_cast<std::size_t>(v)] = true;
    std::vector<PauliOperator> pool;
    for (std::size_t v = 0; v < nq; ++v) {
        if (is_input[v]) continue;
        PauliOperator k = PauliOperator::identity(nq);
        k.x_bits.set(v, true);
        k.z_bits = geom.neighbors(static_cast<int>(v));
        pool.push_back(std::move(k));
    }

    std::vector<SignalForm> beta(nq), gamma(nq);
    std::vector<bool> measured(nq, false);

    for (int u : order) {
        Angle alpha = -q.form.at(u, u);
        if (!alpha.is_half_pi_multiple())
            throw PreconditionError("interpolate_corrections: angle not a multiple of pi/2");
        // Observable of the measurement: 0 -> X, pi -> -X, pi/2 -> Y,
        // -pi/2 -> -Y, as a signed Pauli word.
        PauliOperator obs = PauliOperator::identity(nq);
        obs.x_bits.set(static_cast<std::size_t>(u), true);
        bool y_axis = alpha.den() == 2;
        if (y_axis) {
            obs.z_bits.set(static_cast<std::size_t>(u), true);
            obs.phase_quarter = alpha.num() == 1 ? 1 : 3;
        } else if (alpha.is_pi()) {
            obs.phase_quarter = 2;
        }

        std::size_t chosen = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (!pool[i].commutes_with(obs)) {
                chosen = i;
                break;
            }
        internal_check(chosen < pool.size(), "no stabilizer anticommutes with the observable");
        PauliOperator g = pool[chosen];
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (i != chosen && !pool[i].commutes_with(obs)) pool[i] *= g;
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(chosen));

        // Correction steered by this outcome: g away from u. The pool never
        // touches already-measured qubits, so the restriction is just u.
        for (std::size_t v = 0; v < nq; ++v)
            internal_check(v == static_cast<std::size_t>(u) || !measured[v] || !g.acts_on(v),
                           "correction acts on a measured qubit");
        SignalForm signal;
        signal.xor_signal(u);
        // Pending corrections flip the outcome's meaning: Z before X or Y,
        // X before Y.
        SignalForm delta = gamma[static_cast<std::size_t>(u)];
        if (y_axis) delta.xor_with(beta[static_cast<std::size_t>(u)]);
        signal.xor_with(delta);
        for (std::size_t v = 0; v < nq; ++v) {
            if (v == static_cast<std::size_t>(u)) continue;
            if (g.x_bits.get(v)) beta[v].xor_with(signal);   // X or Y action
            if (g.z_bits.get(v)) gamma[v].xor_with(signal);  // Y or Z action
        }

        measured[static_cast<std::size_t>(u)] = true;
        p.measurements.push_back(Measurement{u, alpha, {}, {}});
        // Keep the pool off the consumed qubit: any remaining support there
        // commutes with the observable, so multiplying it in clears it.
        for (PauliOperator& hgen : pool)
            if (hgen.acts_on(static_cast<std::size_t>(u))) hgen *= obs;
    }

    for (int z : q.outputs) {
        const SignalForm& bx = beta[static_cast<std::size_t>(z)];
        const SignalForm& bz = gamma[static_cast<std::size_t>(z)];
        if (!bx.empty() || !bz.empty()) p.final_corrections[z] = {bx, bz};
    }
    p.validate();
    return p;
}

MeasurementPattern clifford_pattern(const LeuvenTableau& tab) {
    CliffordExpansion exp = clifford_to_qfe(tab);
    MeasurementPattern p = interpolate_corrections(exp);
    std::size_t n = tab.num_qubits();
    internal_check(p.qubits.size() == 3 * n - exp.r, "pattern qubit count");
    internal_check(p.qubits.size() - p.inputs.size() - p.outputs.size() == n - exp.r,
                   "auxiliary qubit count");
    return p;
}

LeuvenTableau tableau_from_clifford_circuit(const Circuit& c) {
    c.validate();
    if (!c.plus_wires.empty())
        throw PreconditionError("tableau_from_clifford_circuit: circuit must be unitary");
    const std::size_t n = static_cast<std::size_t>(c.wires);
    std::vector<PauliOperator> img;
    for (std::size_t t = 0; t < 2 * n; ++t) {
        PauliOperator p = PauliOperator::identity(n);
        if (t < n)
            p.x_bits.set(t, true);
        else
            p.z_bits.set(t - n, true);
        img.push_back(std::move(p));
    }
    for (const Gate& gate : c.gates) {
        std::size_t q0 = static_cast<std::size_t>(gate.w0);
        switch (gate.kind) {
            case Gate::Kind::H:
                for (PauliOperator& p : img) {
                    bool x = p.x_bits.get(q0);
                    bool z = p.z_bits.get(q0);
                    if (x && z) p.phase_quarter = (p.phase_quarter + 2) % 4;
                    p.x_bits.set(q0, z);
                    p.z_bits.set(q0, x);
                }
                break;
            case Gate::Kind::Z:
                if (!(gate.angle == Angle::half_pi()))
                    throw UnsupportedGateError(
                        "tableau_from_clifford_circuit: only Z^(1/2) phase gates");
                for (PauliOperator& p : img)
                    if (p.x_bits.get(q0)) {
                        p.phase_quarter = (p.phase_quarter + 1) % 4;
                        p.z_bits.flip(q0);
                    }
                break;
            case Gate::Kind::CZ: {
                if (!gate.angle.is_pi())
                    throw UnsupportedGateError(
                        "tableau_from_clifford_circuit: only full CZ gates");
                std::size_t q1 = static_cast<std::size_t>(gate.w1);
                for (PauliOperator& p : img) {
                    bool xa = p.x_bits.get(q0);
                    bool xb = p.x_bits.get(q1);
                    if (xa && xb) p.phase_quarter = (p.phase_quarter + 2) % 4;
                    if (xb) p.z_bits.flip(q0);
                    if (xa) p.z_bits.flip(q1);
                }
                break;
            }
            case Gate::Kind::J:
                throw UnsupportedGateError("tableau_from_clifford_circuit: expand J gates first");
        }
    }
    LeuvenTableau tab;
    tab.c = BitMatrix(2 * n, 2 * n);
    tab.h = BitVector(2 * n);
    for (std::size_t t = 0; t < 2 * n; ++t)
        for (std::size_t j = 0; j < n; ++j) {
            if (img[t].x_bits.get(j)) tab.c.set(j, t, true);
            if (img[t].z_bits.get(j)) tab.c.set(n + j, t, true);
        }
    BitVector dv = d_vec(tab.c);
    for (std::size_t t = 0; t < 2 * n; ++t) {
        int k = img[t].phase_quarter;
        int d = dv.get(t) ? 1 : 0;
        if ((k - d) % 2 != 0) throw Error("tableau_from_clifford_circuit: phase parity broken");
        int xz = static_cast<int>(img[t].x_bits.dot(img[t].z_bits));
        int ht = (((k - d) / 2 - xz) % 2 + 2) % 2;
        if (ht) tab.h.set(t, true);
    }
    return tab;
}

LeuvenTableau random_tableau(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random_tableau: n must be positive");
    std::mt19937_64 rng(seed);
    Circuit c;
    c.wires = static_cast<int>(n);
    std::size_t length = 6 * n * n + 6;
    std::uniform_int_distribution<int> kind(0, n >= 2 ? 2 : 1);
    std::uniform_int_distribution<int> wire(0, static_cast<int>(n) - 1);
    for (std::size_t i = 0; i < length; ++i) {
        int k = kind(rng);
        if (k == 0) {
            c.gates.push_back(Gate{Gate::Kind::H, wire(rng), -1, Angle()});
        } else if (k == 1) {
            c.gates.push_back(Gate{Gate::Kind::Z, wire(rng), -1, Angle::half_pi()});
        } else {
            int a = wire(rng);
            int b = wire(rng);
            while (b == a) b = wire(rng);
            c.gates.push_back(Gate{Gate::Kind::CZ, a, b, Angle::pi()});
        }
    }
    return tableau_from_clifford_circuit(c);
}

}  // namespace qf
