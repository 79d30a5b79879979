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

#ifndef _CCDECODE_PAULI_H
#define _CCDECODE_PAULI_H

#include <iosfwd>
#include <string>
#include <string_view>

#include "ccdecode/f2.h"
#include "ccdecode/gate.h"

namespace ccd {

/// The operator i^phase_exp * (sigma_1 (x) ... (x) sigma_n), where sigma_q is
/// I, X, Z or Y for (x_q, z_q) = 00, 10, 01, 11.
///
/// Convention: Y = i X Z. Hermitian strings have phase_exp in {0, 2}.
struct PauliString {
    F2Vec vec;
    uint8_t phase_exp = 0;

    PauliString() = default;
    explicit PauliString(size_t n) : vec(n) {
    }
    explicit PauliString(F2Vec v, uint8_t phase = 0) : vec(std::move(v)), phase_exp(phase & 3) {
    }

    /// Parses e.g. "XZ", "-YI", "+iZ", "-iXX". Characters '_' are read as I.
    static PauliString from_text(std::string_view text);
    /// Parses 2n '0'/'1' characters in interleaved order, with an optional
    /// "+", "-", "i" or "-i" prefix.
    static PauliString from_bitstring(std::string_view text);
    /// A single-qubit Pauli ('X', 'Y' or 'Z') on qubit q of n.
    static PauliString single(size_t n, size_t q, char p);

    std::string str() const;
    std::string bitstring() const;

    size_t num_qubits() const {
        return vec.num_qubits;
    }
    bool is_identity() const {
        return vec.is_zero();
    }
    bool is_hermitian() const {
        return (phase_exp & 1) == 0;
    }
    /// +1 or -1 for Hermitian strings.
    int sign() const;
    /// The character I/X/Y/Z on qubit q.
    char letter(size_t q) const;

    /// Right-multiplies in place: *this = *this * rhs.
    PauliString &operator*=(const PauliString &rhs);
    PauliString operator*(const PauliString &rhs) const;
    bool commutes(const PauliString &other) const {
        return !symplectic_form(vec, other.vec);
    }

    /// In place P -> g P g^dag for a Clifford gate, using the standard tableau
    /// update rules (H: swap x,z; S: z ^= x; CNOT(k,i): x_i ^= x_k, z_k ^= z_i,
    /// each with its phase correction).
    void conjugate_by(const Gate &g);
    /// In place P -> g^dag P g for a Clifford gate.
    void heisenberg(const Gate &g);

    bool operator==(const PauliString &other) const {
        return phase_exp == other.phase_exp && vec == other.vec;
    }
    bool operator!=(const PauliString &other) const {
        return !(*this == other);
    }
    bool operator<(const PauliString &other) const;
};

/// The index-th Pauli string (phase 0) supported on qubits
/// [offset, offset + count): qubit offset + j takes x from bit 2j and z from
/// bit 2j + 1 of index. Indices run over [0, 4^count).
PauliString local_pauli(size_t n, size_t offset, size_t count, uint64_t index);

/// The product p * q with phase tracking.
PauliString pauli_mul(const PauliString &p, const PauliString &q);

/// Power of i contributed when multiplying the bare strings a * b (without
/// their own phase exponents).
uint8_t pauli_product_log_i(const F2Vec &a, const F2Vec &b);

std::ostream &operator<<(std::ostream &out, const PauliString &p);

struct PauliStringHash {
    size_t operator()(const PauliString &p) const {
        return p.vec.hash() * 4 + p.phase_exp;
    }
};

}  // namespace ccd

#endif
