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

#include "ccdecode/tableau.h"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sweep.h"

namespace ccd {

CliffordTableau::CliffordTableau(size_t n) : num_qubits(n) {
    rows.reserve(2 * n);
    for (size_t q = 0; q < n; q++) {
        rows.push_back(PauliString::single(n, q, 'X'));
        rows.push_back(PauliString::single(n, q, 'Z'));
    }
}

CliffordTableau CliffordTableau::from_gates(size_t n, const GateList &gates) {
    CliffordTableau t(n);
    for (const auto &g : gates) {
        t.append(g);
    }
    return t;
}

CliffordTableau CliffordTableau::from_partial(const SymplecticMatrix &m, const std::vector<uint8_t> &phase_bits) {
    if (phase_bits.size() != m.rows.size()) {
        throw std::invalid_argument("Phase bit count does not match matrix.");
    }
    CliffordTableau t;
    t.num_qubits = m.num_qubits;
    for (size_t k = 0; k < m.rows.size(); k++) {
        t.rows.emplace_back(m.rows[k], phase_bits[k] ? 2 : 0);
    }
    return t;
}

void CliffordTableau::append(const Gate &g) {
    auto check = [&](uint32_t q) {
        if (q >= num_qubits) {
            throw std::invalid_argument("Gate qubit out of range: " + g.str());
        }
    };
    check(g.q0);
    switch (g.kind) {
        case GateKind::H:
            std::swap(rows[2 * g.q0], rows[2 * g.q0 + 1]);
            return;
        case GateKind::S: {
            // S^dag X S = -i X Z.
            PauliString &x = rows[2 * g.q0];
            x *= rows[2 * g.q0 + 1];
            x.phase_exp = (x.phase_exp + 3) & 3;
            return;
        }
        case GateKind::CNOT:
            check(g.q1);
            if (g.q0 == g.q1) {
                throw std::invalid_argument("CNOT control equals target.");
            }
            // X_c -> X_c X_t and Z_t -> Z_c Z_t.
            rows[2 * g.q0] *= rows[2 * g.q1];
            rows[2 * g.q1 + 1] *= rows[2 * g.q0 + 1];
            return;
        case GateKind::T:
            throw std::invalid_argument("Tableaux are Clifford-only; got a T gate.");
    }
}

PauliString CliffordTableau::conjugate(const PauliString &p) const {
    if (p.num_qubits() != num_qubits) {
        throw std::invalid_argument("Pauli size does not match tableau.");
    }
    PauliString out(num_qubits);
    uint8_t phase = p.phase_exp;
    for (size_t q = 0; q < num_qubits; q++) {
        bool x = p.vec.x(q), z = p.vec.z(q);
        if (x) {
            out *= rows[2 * q];
        }
        if (z) {
            out *= rows[2 * q + 1];
        }
        if (x && z) {
            phase++;
        }
    }
    out.phase_exp = (out.phase_exp + phase) & 3;
    return out;
}

CliffordTableau CliffordTableau::inverse() const {
    size_t n = num_qubits;
    CliffordTableau inv;
    inv.num_qubits = n;
    inv.rows.assign(2 * n, PauliString(n));
    // M^{-1} = Omega M^T Omega: bit g of inverse row b is bit (b^1) of row (g^1).
    for (size_t g = 0; g < 2 * n; g++) {
        const F2Vec &row = rows[g ^ 1].vec;
        for (size_t b = 0; b < 2 * n; b++) {
            if (row.bit(b ^ 1)) {
                inv.rows[b].vec.set_bit(g, true);
            }
        }
    }
    for (size_t b = 0; b < 2 * n; b++) {
        PauliString image = conjugate(inv.rows[b]);
        if (image.phase_exp == 2) {
            inv.rows[b].phase_exp = 2;
        } else if (image.phase_exp != 0) {
            throw std::invalid_argument("inverse: tableau is not valid.");
        }
    }
    return inv;
}

SymplecticMatrix CliffordTableau::partial() const {
    SymplecticMatrix m(num_qubits);
    for (size_t k = 0; k < rows.size(); k++) {
        m.rows[k] = rows[k].vec;
    }
    return m;
}

std::vector<uint8_t> CliffordTableau::phase_bits() const {
    std::vector<uint8_t> out;
    for (const auto &r : rows) {
        out.push_back(r.phase_exp == 2);
    }
    return out;
}

bool CliffordTableau::is_valid() const {
    if (rows.size() != 2 * num_qubits) {
        return false;
    }
    for (const auto &r : rows) {
        if (r.num_qubits() != num_qubits || !r.is_hermitian()) {
            return false;
        }
    }
    return partial().is_symplectic();
}

std::string CliffordTableau::str() const {
    std::ostringstream out;
    out << "tableau n=" << num_qubits << "\n";
    for (const auto &r : rows) {
        out << r.vec.bits() << " " << (r.phase_exp == 2 ? 1 : 0) << "\n";
    }
    return out.str();
}

CliffordTableau CliffordTableau::from_text(const std::string &text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header) || header.rfind("tableau n=", 0) != 0) {
        throw std::invalid_argument("Expected a 'tableau n=<N>' header.");
    }
    size_t n = std::stoul(header.substr(10));
    CliffordTableau t;
    t.num_qubits = n;
    for (size_t k = 0; k < 2 * n; k++) {
        std::string bits, phase;
        if (!(in >> bits >> phase)) {
            throw std::invalid_argument("Truncated tableau text.");
        }
        if (bits.size() != 2 * n || (phase != "0" && phase != "1")) {
            throw std::invalid_argument("Malformed tableau row " + std::to_string(k) + ".");
        }
        t.rows.emplace_back(F2Vec::from_bits(bits), phase == "1" ? 2 : 0);
    }
    if (!t.is_valid()) {
        throw std::invalid_argument("Tableau text does not describe a valid Clifford.");
    }
    return t;
}

CliffordTableau apply_gate(const CliffordTableau &t, const Gate &g) {
    CliffordTableau r = t;
    r.append(g);
    return r;
}

PauliString conjugate_pauli(const CliffordTableau &t, const PauliString &p) {
    return t.conjugate(p);
}

CliffordTableau compose(const CliffordTableau &a, const CliffordTableau &b, bool invert_a) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("compose: tableau sizes differ.");
    }
    // (AB)^dag s AB = B^dag (A^dag s A) B.
    CliffordTableau first = invert_a ? a.inverse() : a;
    CliffordTableau out;
    out.num_qubits = a.num_qubits;
    out.rows.reserve(first.rows.size());
    for (const auto &r : first.rows) {
        out.rows.push_back(b.conjugate(r));
    }
    return out;
}

GateList synthesize(const CliffordTableau &t) {
    if (!t.is_valid()) {
        throw std::invalid_argument("synthesize: invalid tableau.");
    }
    // Conjugating every row by g turns the tableau of U into that of U g^dag.
    // Sweep until the identity is reached; U is then the recorded sequence.
    internal::RowTransformer tr;
    tr.rows = t.rows;
    for (size_t q = 0; q < t.num_qubits; q++) {
        tr.sweep_pair(2 * q, 2 * q + 1, q);
    }
    for (size_t k = 0; k < tr.rows.size(); k++) {
        tr.fix_local_sign(k);
    }
    return tr.gates;
}

bool is_valid(const CliffordTableau &t) {
    return t.is_valid();
}

CliffordTableau permutation_tableau(const std::vector<size_t> &perm) {
    size_t n = perm.size();
    CliffordTableau t;
    t.num_qubits = n;
    t.rows.assign(2 * n, PauliString(n));
    std::vector<bool> seen(n, false);
    for (size_t q = 0; q < n; q++) {
        if (perm[q] >= n || seen[perm[q]]) {
            throw std::invalid_argument("permutation_tableau: not a permutation.");
        }
        seen[perm[q]] = true;
        t.rows[2 * perm[q]] = PauliString::single(n, q, 'X');
        t.rows[2 * perm[q] + 1] = PauliString::single(n, q, 'Z');
    }
    return t;
}

CliffordTableau embed(const CliffordTableau &t, size_t n, size_t offset) {
    if (offset + t.num_qubits > n) {
        throw std::invalid_argument("embed: target too small.");
    }
    CliffordTableau out(n);
    for (size_t k = 0; k < t.rows.size(); k++) {
        PauliString r(n);
        r.phase_exp = t.rows[k].phase_exp;
        for (size_t q = 0; q < t.num_qubits; q++) {
            r.vec.set_x(q + offset, t.rows[k].vec.x(q));
            r.vec.set_z(q + offset, t.rows[k].vec.z(q));
        }
        out.rows[2 * offset + k] = r;
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const CliffordTableau &t) {
    return out << t.str();
}

}  // namespace ccd
