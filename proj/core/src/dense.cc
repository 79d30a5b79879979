// Copyright 2026 The ccdecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccdecode/dense.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace ccd {

namespace {

using cplx = std::complex<double>;

void check_cap(size_t n, const char *what) {
    if (n > kDenseMaxQubits) {
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the dense cap.");
    }
}

cplx i_power(unsigned k) {
    static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k & 3];
}

struct PauliMasks {
    uint64_t x = 0;
    uint64_t z = 0;
    cplx base;
};

// P|k> = base * (-1)^{|z & k|} |k ^ x>.
PauliMasks masks_of(const PauliString &p) {
    PauliMasks m;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        m.x |= (uint64_t)p.vec.x(q) << q;
        m.z |= (uint64_t)p.vec.z(q) << q;
    }
    m.base = i_power(p.phase_exp + std::popcount(m.x & m.z));
    return m;
}

// Returns P m.
DenseMatrix pauli_times(const PauliString &p, const DenseMatrix &m) {
    PauliMasks pm = masks_of(p);
    DenseMatrix out(m.rows(), m.cols());
    for (Eigen::Index k = 0; k < m.rows(); k++) {
        cplx c = (std::popcount(pm.z & (uint64_t)k) & 1) ? -pm.base : pm.base;
        out.row((Eigen::Index)((uint64_t)k ^ pm.x)) = c * m.row(k);
    }
    return out;
}

// Returns P m P for Hermitian P.
DenseMatrix pauli_sandwich(const PauliString &p, const DenseMatrix &m) {
    DenseMatrix left = pauli_times(p, m);
    return pauli_times(p, left.adjoint()).adjoint();
}

double trace_product_real(const DenseMatrix &a, const DenseMatrix &b) {
    // tr(a b) = sum_{ij} a_ij b_ji.
    return (a.array() * b.transpose().array()).sum().real();
}

}  // namespace

void apply_gate_dense(DenseMatrix &m, size_t n, const Gate &g) {
    const Eigen::Index dim = (Eigen::Index)1 << n;
    const uint64_t bit = uint64_t{1} << g.q0;
    switch (g.kind) {
        case GateKind::H:
            for (Eigen::Index i = 0; i < dim; i++) {
                if ((uint64_t)i & bit) {
                    continue;
                }
                Eigen::Index j = (Eigen::Index)((uint64_t)i | bit);
                Eigen::RowVectorXcd r0 = m.row(i), r1 = m.row(j);
                m.row(i) = (r0 + r1) * M_SQRT1_2;
                m.row(j) = (r0 - r1) * M_SQRT1_2;
            }
            break;
        case GateKind::S:
        case GateKind::T: {
            cplx phase = g.kind == GateKind::S ? cplx(0, 1) : cplx(M_SQRT1_2, M_SQRT1_2);
            for (Eigen::Index i = 0; i < dim; i++) {
                if ((uint64_t)i & bit) {
                    m.row(i) *= phase;
                }
            }
            break;
        }
        case GateKind::CNOT: {
            const uint64_t tbit = uint64_t{1} << g.q1;
            for (Eigen::Index i = 0; i < dim; i++) {
                if (((uint64_t)i & bit) && !((uint64_t)i & tbit)) {
                    m.row(i).swap(m.row((Eigen::Index)((uint64_t)i | tbit)));
                }
            }
            break;
        }
    }
}

DenseMatrix dense_unitary(const DopedCircuit &c) {
    check_cap(c.num_qubits(), "dense_unitary");
    const Eigen::Index dim = (Eigen::Index)1 << c.num_qubits();
    DenseMatrix u = DenseMatrix::Identity(dim, dim);
    for (const Gate &g : c.gates()) {
        apply_gate_dense(u, c.num_qubits(), g);
    }
    return u;
}

DenseMatrix dense_unitary(const CliffordTableau &t) {
    return dense_unitary(DopedCircuit(t.num_qubits, synthesize(t)));
}

DenseMatrix dense_pauli(const PauliString &p) {
    check_cap(p.num_qubits(), "dense_pauli");
    const Eigen::Index dim = (Eigen::Index)1 << p.num_qubits();
    return pauli_times(p, DenseMatrix::Identity(dim, dim));
}

DenseMatrix dense_pauli_sum(const PauliSum &s) {
    check_cap(s.num_qubits(), "dense_pauli_sum");
    const Eigen::Index dim = (Eigen::Index)1 << s.num_qubits();
    DenseMatrix out = DenseMatrix::Zero(dim, dim);
    for (const PauliTerm &t : s.terms()) {
        out += t.coeff.to_double() * dense_pauli(PauliString(t.vec));
    }
    return out;
}

DenseMatrix dense_heisenberg(const DenseMatrix &u, const PauliString &p) {
    return u.adjoint() * pauli_times(p, u);
}

std::complex<double> dense_expect(const DenseMatrix &u, const PauliString &p, const PauliString &q) {
    DenseMatrix m = dense_heisenberg(u, p);
    // tr(Q^T M) = sum_k Q[k^x, k] M[k^x, k].
    PauliMasks qm = masks_of(q);
    cplx acc = 0;
    for (Eigen::Index k = 0; k < m.rows(); k++) {
        cplx c = (std::popcount(qm.z & (uint64_t)k) & 1) ? -qm.base : qm.base;
        acc += c * m((Eigen::Index)((uint64_t)k ^ qm.x), k);
    }
    return acc / (double)m.rows();
}

std::complex<double> dense_expect(const DopedCircuit &c, const PauliString &p, const PauliString &q) {
    return dense_expect(dense_unitary(c), p, q);
}

double dense_truncated_otoc(const DenseMatrix &u, const Partition &part, const std::vector<PauliString> &group) {
    const double dim = (double)u.rows();
    const uint64_t num_a = uint64_t{1} << (2 * part.a);
    double acc = 0;
    for (const PauliString &pd : group) {
        DenseMatrix m = dense_heisenberg(u, pd);
        for (uint64_t ia = 0; ia < num_a; ia++) {
            PauliString pa = local_pauli(part.n, 0, part.a, ia);
            acc += trace_product_real(pauli_sandwich(pa, m), m) / dim;
        }
    }
    return acc / ((double)num_a * (double)group.size());
}

double dense_otoc(const DenseMatrix &u, const Partition &part) {
    std::vector<PauliString> all;
    for (uint64_t i = 0; i < (uint64_t{1} << (2 * part.d)); i++) {
        all.push_back(local_pauli(part.n, part.d_offset(), part.d, i));
    }
    return dense_truncated_otoc(u, part, all);
}

double dense_fidelity_formula(const DenseMatrix &u, const DenseMatrix &v, const Partition &part) {
    const uint64_t num_a = uint64_t{1} << (2 * part.a);
    double num = 0, den = 0;
    for (uint64_t i = 0; i < (uint64_t{1} << (2 * part.d)); i++) {
        PauliString pd = local_pauli(part.n, part.d_offset(), part.d, i);
        DenseMatrix mu = dense_heisenberg(u, pd), mv = dense_heisenberg(v, pd);
        num += trace_product_real(mu, mv);
        for (uint64_t ia = 0; ia < num_a; ia++) {
            PauliString pa = local_pauli(part.n, 0, part.a, ia);
            den += trace_product_real(pauli_sandwich(pa, mu), mv);
        }
    }
    return num / den;
}

double hp_fidelity_dense(const DenseMatrix &u, const DenseMatrix &v, const Partition &part) {
    const size_t n = part.n, a = part.a;
    check_cap(n, "hp_fidelity_dense");
    if (2 * n + 2 * a > 20) {
        throw std::invalid_argument("hp_fidelity_dense: protocol register exceeds 20 qubits.");
    }
    const Eigen::Index dim = (Eigen::Index)1 << n;
    const size_t da = size_t{1} << a;
    const uint64_t amask = da - 1;
    const double amp = std::pow(2.0, -0.5 * (double)(n + a));

    // One d x d slice (system rows, mirror columns) per reference value
    // r = r_R + d_A r_R'. Pairs: (R, A), (A', R'), (B, B').
    std::vector<DenseMatrix> slices(da * da, DenseMatrix::Zero(dim, dim));
    for (uint64_t s = 0; s < (uint64_t)dim; s++) {
        for (uint64_t rp = 0; rp < da; rp++) {
            uint64_t m = (s & ~amask) | rp;
            slices[(s & amask) + da * rp]((Eigen::Index)s, (Eigen::Index)m) = amp;
        }
    }
    DenseMatrix v_dag = v.adjoint();
    for (DenseMatrix &sl : slices) {
        // U on the system, V^* on the mirror: S -> U S (V^*)^T.
        sl = u * sl * v_dag;
    }

    // Project (D, D') onto EPR pairs.
    const uint64_t dc = uint64_t{1} << part.c();
    const uint64_t dd = uint64_t{1} << part.d;
    const double proj = 1.0 / std::sqrt((double)dd);
    double p_out = 0, good = 0;
    for (uint64_t c1 = 0; c1 < dc; c1++) {
        for (uint64_t c2 = 0; c2 < dc; c2++) {
            cplx diag = 0;
            for (uint64_t r = 0; r < da * da; r++) {
                cplx phi = 0;
                for (uint64_t delta = 0; delta < dd; delta++) {
                    phi += slices[r]((Eigen::Index)(c1 + dc * delta), (Eigen::Index)(c2 + dc * delta));
                }
                phi *= proj;
                p_out += std::norm(phi);
                if (r % da == r / da) {
                    diag += phi;
                }
            }
            good += std::norm(diag) / (double)da;
        }
    }
    if (p_out <= 1e-300) {
        throw std::runtime_error("hp_fidelity_dense: projection has zero weight.");
    }
    return good / p_out;
}

double hp_fidelity_dense(const DopedCircuit &c, const CliffordTableau &v, const Partition &part) {
    return hp_fidelity_dense(dense_unitary(c), dense_unitary(v), part);
}

double dense_gate_fidelity(const DenseMatrix &u, const DenseMatrix &v) {
    double d = (double)u.rows();
    return std::norm((v.adjoint() * u).trace()) / (d * d);
}

double unitarity_error(const DenseMatrix &u) {
    DenseMatrix e = u.adjoint() * u - DenseMatrix::Identity(u.rows(), u.cols());
    return e.cwiseAbs().maxCoeff();
}

}  // namespace ccd
