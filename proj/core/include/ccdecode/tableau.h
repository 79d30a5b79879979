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

#ifndef _CCDECODE_TABLEAU_H
#define _CCDECODE_TABLEAU_H

#include <iosfwd>
#include <string>
#include <vector>

#include "ccdecode/gate.h"
#include "ccdecode/pauli.h"

namespace ccd {

/// Tableau of a Clifford unitary U, stored as the Heisenberg images of the
/// local generators: rows[2q] = U^dag X_q U and rows[2q+1] = U^dag Z_q U.
/// Every row is Hermitian; its sign is the phase bit.
struct CliffordTableau {
    size_t num_qubits = 0;
    std::vector<PauliString> rows;

    CliffordTableau() = default;
    /// The identity tableau.
    explicit CliffordTableau(size_t n);

    /// Tableau of the circuit (gates in time order). Rejects T gates.
    static CliffordTableau from_gates(size_t n, const GateList &gates);
    /// Builds a tableau from a symplectic matrix and phase bits.
    static CliffordTableau from_partial(const SymplecticMatrix &m, const std::vector<uint8_t> &phase_bits);

    const PauliString &x_image(size_t q) const {
        return rows[2 * q];
    }
    const PauliString &z_image(size_t q) const {
        return rows[2 * q + 1];
    }

    /// U -> g U, i.e. the gate is applied after the current circuit.
    void append(const Gate &g);

    /// U^dag p U.
    PauliString conjugate(const PauliString &p) const;
    /// The tableau of U^dag.
    CliffordTableau inverse() const;

    SymplecticMatrix partial() const;
    std::vector<uint8_t> phase_bits() const;

    bool is_valid() const;

    bool operator==(const CliffordTableau &other) const {
        return rows == other.rows;
    }
    bool operator!=(const CliffordTableau &other) const {
        return !(*this == other);
    }

    /// "tableau n=<N>" followed by 2n lines "<2n bits> <phase bit>".
    std::string str() const;
    static CliffordTableau from_text(const std::string &text);
};

/// Returns the tableau of g U (the gate applied after U).
CliffordTableau apply_gate(const CliffordTableau &t, const Gate &g);

/// Returns U^dag p U.
PauliString conjugate_pauli(const CliffordTableau &t, const PauliString &p);

/// Returns the tableau of A B, or of A^dag B when invert_a is set.
CliffordTableau compose(const CliffordTableau &a, const CliffordTableau &b, bool invert_a = false);

/// Decomposes the tableau into H, S and CNOT gates (O(n^2) of them) whose
/// gate-wise reconstruction reproduces the tableau exactly, phases included.
GateList synthesize(const CliffordTableau &t);

bool is_valid(const CliffordTableau &t);

/// Tableau of a qubit permutation: qubit q is moved to position perm[q].
CliffordTableau permutation_tableau(const std::vector<size_t> &perm);

/// Embeds a tableau on k qubits into n qubits, acting on qubits offset..offset+k-1.
CliffordTableau embed(const CliffordTableau &t, size_t n, size_t offset);

std::ostream &operator<<(std::ostream &out, const CliffordTableau &t);

}  // namespace ccd

#endif
