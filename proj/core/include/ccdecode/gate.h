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

#ifndef _CCDECODE_GATE_H
#define _CCDECODE_GATE_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ccd {

enum class GateKind : uint8_t { H, S, CNOT, T };

/// A gate with 0-based qubit indices. For CNOT, q0 is the control.
struct Gate {
    GateKind kind;
    uint32_t q0;
    uint32_t q1 = 0;

    static Gate h(uint32_t q) {
        return {GateKind::H, q, 0};
    }
    static Gate s(uint32_t q) {
        return {GateKind::S, q, 0};
    }
    static Gate cnot(uint32_t control, uint32_t target) {
        return {GateKind::CNOT, control, target};
    }
    static Gate t(uint32_t q) {
        return {GateKind::T, q, 0};
    }

    bool is_clifford() const {
        return kind != GateKind::T;
    }
    bool operator==(const Gate &other) const;
    bool operator!=(const Gate &other) const {
        return !(*this == other);
    }
    /// Text form with 1-based indices, e.g. "CNOT 1 2".
    std::string str() const;
};

/// Gates in time order: the unitary of {g_1, ..., g_L} is g_L ... g_1.
using GateList = std::vector<Gate>;

size_t count_t(const GateList &gates);

/// The inverse of a Clifford gate list (reversed, with S^dag expanded to S S S).
GateList inverse_clifford_gates(const GateList &gates);

/// Gate sequences realizing single-qubit Paulis, up to global phase.
void append_pauli_x(GateList &out, uint32_t q);
void append_pauli_z(GateList &out, uint32_t q);

/// Parses one gate line ("H i", "S i", "CNOT k i", "T i"; 1-based).
Gate parse_gate_line(const std::string &line, size_t num_qubits);

std::ostream &operator<<(std::ostream &out, const Gate &g);

}  // namespace ccd

#endif
