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

#ifndef _CCDECODE_SWEEP_H
#define _CCDECODE_SWEEP_H

#include <vector>

#include "ccdecode/gate.h"
#include "ccdecode/pauli.h"

namespace ccd::internal {

/// Applies Clifford gates to a working set of rows (P -> g P g^dag) and
/// records them. After recording g_1..g_K the rows equal W r W^dag with
/// W = g_K ... g_1.
struct RowTransformer {
    std::vector<PauliString> rows;
    GateList gates;

    void apply(const Gate &g);
    void swap_qubits(uint32_t a, uint32_t b);
    /// Conjugates by the Pauli X (resp. Z) on qubit q, flipping signs of rows
    /// that anticommute with it.
    void apply_x(uint32_t q);
    void apply_z(uint32_t q);

    /// Maps rows[i] to +-X_lo using gates supported on qubits >= lo.
    void sweep_single(size_t i, size_t lo);
    /// Maps rows[i1], rows[i2] to +-X_lo, +-Z_lo using gates on qubits >= lo.
    void sweep_pair(size_t i1, size_t i2, size_t lo);
    /// Forces the sign of rows[i] (equal to +-X_q or +-Z_q) to + by a Pauli.
    void fix_local_sign(size_t i);
};

}  // namespace ccd::internal

#endif
