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

#ifndef _CCDECODE_SUBROUTINES_H
#define _CCDECODE_SUBROUTINES_H

#include <string>
#include <vector>

#include "ccdecode/rng.h"
#include "ccdecode/tableau.h"

namespace ccd {

/// A partial tableau in normal form: anticommuting pairs in rows (2i, 2i+1)
/// for i < num_pairs, then unpaired rows at 2i followed by a zero row, then
/// zero rows. Rows in different slots commute.
struct TauMatrix {
    size_t num_qubits = 0;
    std::vector<F2Vec> rows;
    size_t num_pairs = 0;
    size_t num_unpaired = 0;
    /// For each row, the index of the input generator it came from, or -1.
    std::vector<int> source;

    TauMatrix() = default;
    explicit TauMatrix(size_t n);

    size_t num_slots() const {
        return num_pairs + num_unpaired;
    }
    bool row_is_constrained(size_t k) const;
    bool is_valid() const;

    /// Same layout as the tableau text format with a "tau n=<N>" header.
    std::string str() const;
    static TauMatrix from_text(const std::string &text);
};

/// Arranges an independent generator list into normal form. Each generator,
/// in input order, is paired with the first later unassigned generator that
/// anticommutes with it.
TauMatrix build_tau(const std::vector<PauliString> &h);

struct SweepResult {
    GateList gates;
    /// Rows are the images of the basis vectors under P -> W P W^dag.
    SymplecticMatrix transform;
};

/// Gates W with W p1 W^dag = +-X_1 and W p2 W^dag = +-Z_1.
SweepResult sweep_pair(const PauliString &p1, const PauliString &p2);

struct CliffordSampleStats {
    /// Draws of the first Pauli of each pair, and how many were the identity.
    std::vector<size_t> x_draws;
    std::vector<size_t> x_identity;
    /// Draws of the partner, and how many commuted (and were rejected).
    std::vector<size_t> z_draws;
    std::vector<size_t> z_rejected;
};

/// A uniformly random Clifford tableau (symplectic part and phases).
CliffordTableau sample_random_clifford(size_t n, Rng &rng, CliffordSampleStats *stats = nullptr);

struct DiagonalizeResult {
    /// D with D^dag g_a D = e_a exactly for every nonzero row a of the input.
    CliffordTableau dhat;
    GateList dhat_gates;
    /// The partial identity: row a is e_a where the input row was nonzero.
    TauMatrix out;
};

DiagonalizeResult diagonalize(const TauMatrix &tau);

/// Diagonalizes signed generators already arranged by a TauMatrix (rows with
/// sign bits); used when the images carry phases.
DiagonalizeResult diagonalize_signed(const TauMatrix &tau, const std::vector<uint8_t> &sign_bits);

/// A uniformly random Clifford W among those with W^dag e_a W = (-1)^{phase_a} tau_a
/// for every nonzero row a of tau. phase_bits has one entry per row.
CliffordTableau complete_constrained(const TauMatrix &tau, const std::vector<uint8_t> &phase_bits, Rng &rng);

}  // namespace ccd

#endif
