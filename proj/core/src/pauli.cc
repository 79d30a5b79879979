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

#include "ccdecode/pauli.h"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace ccd {

namespace {

// Splits an optional phase prefix off `text`, returning the phase exponent.
uint8_t parse_phase_prefix(std::string_view &text) {
    uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        phase = text[0] == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    return phase;
}

std::string phase_prefix(uint8_t phase) {
    switch (phase & 3) {
        case 0:
            return "+";
        case 1:
            return "+i";
        case 2:
            return "-";
        default:
            return "-i";
    }
}

}  // namespace

PauliString PauliString::from_text(std::string_view text) {
    uint8_t phase = parse_phase_prefix(text);
    PauliString p(text.size());
    p.phase_exp = phase;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.vec.set_x(q, true);
                break;
            case 'Z':
                p.vec.set_z(q, true);
                break;
            case 'Y':
                p.vec.set_x(q, true);
                p.vec.set_z(q, true);
                break;
            default:
                throw std::invalid_argument(std::string("Bad Pauli character '") + text[q] + "'.");
        }
    }
    return p;
}

PauliString PauliString::from_bitstring(std::string_view text) {
    uint8_t phase = parse_phase_prefix(text);
    return PauliString(F2Vec::from_bits(text), phase);
}

PauliString PauliString::single(size_t n, size_t q, char p) {
    if (q >= n) {
        throw std::invalid_argument("Qubit index out of range.");
    }
    PauliString r(n);
    if (p == 'X' || p == 'Y') {
        r.vec.set_x(q, true);
    }
    if (p == 'Z' || p == 'Y') {
        r.vec.set_z(q, true);
    }
    if (p != 'X' && p != 'Y' && p != 'Z') {
        throw std::invalid_argument(std::string("Bad Pauli character '") + p + "'.");
    }
    return r;
}

char PauliString::letter(size_t q) const {
    static const char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[vec.x(q) + 2 * vec.z(q)];
}

std::string PauliString::str() const {
    std::string out = phase_prefix(phase_exp);
    for (size_t q = 0; q < num_qubits(); q++) {
        out.push_back(letter(q));
    }
    return out;
}

std::string PauliString::bitstring() const {
    return phase_prefix(phase_exp) + vec.bits();
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw std::invalid_argument("sign() of a non-Hermitian Pauli string.");
    }
    return phase_exp == 0 ? 1 : -1;
}

uint8_t pauli_product_log_i(const F2Vec &a, const F2Vec &b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("Pauli strings have different lengths.");
    }
    // Single-qubit products that pick up +i: XY, YZ, ZX. Those picking up -i:
    // YX, ZY, XZ.
    int plus = 0;
    int minus = 0;
    for (size_t w = 0; w < a.xs.size(); w++) {
        uint64_t x1 = a.xs[w], z1 = a.zs[w], x2 = b.xs[w], z2 = b.zs[w];
        uint64_t p = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t m = (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2) | (x1 & ~z1 & ~x2 & z2);
        plus += std::popcount(p);
        minus += std::popcount(m);
    }
    return (uint8_t)((plus - minus) & 3);
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    uint8_t log_i = pauli_product_log_i(vec, rhs.vec);
    vec ^= rhs.vec;
    phase_exp = (phase_exp + rhs.phase_exp + log_i) & 3;
    return *this;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    PauliString r = *this;
    r *= rhs;
    return r;
}

PauliString local_pauli(size_t n, size_t offset, size_t count, uint64_t index) {
    if (offset + count > n || count >= 32) {
        throw std::invalid_argument("local_pauli: range does not fit.");
    }
    PauliString p(n);
    for (size_t j = 0; j < count; j++) {
        p.vec.set_x(offset + j, (index >> (2 * j)) & 1);
        p.vec.set_z(offset + j, (index >> (2 * j + 1)) & 1);
    }
    return p;
}

PauliString pauli_mul(const PauliString &p, const PauliString &q) {
    return p * q;
}

bool PauliString::operator<(const PauliString &other) const {
    if (vec != other.vec) {
        return vec < other.vec;
    }
    return phase_exp < other.phase_exp;
}

void PauliString::conjugate_by(const Gate &g) {
    switch (g.kind) {
        case GateKind::H: {
            bool x = vec.x(g.q0), z = vec.z(g.q0);
            if (x && z) {
                phase_exp ^= 2;
            }
            vec.set_x(g.q0, z);
            vec.set_z(g.q0, x);
            return;
        }
        case GateKind::S: {
            bool x = vec.x(g.q0), z = vec.z(g.q0);
            if (x && z) {
                phase_exp ^= 2;
            }
            if (x) {
                vec.flip_z(g.q0);
            }
            return;
        }
        case GateKind::CNOT: {
            bool xk = vec.x(g.q0), zk = vec.z(g.q0);
            bool xi = vec.x(g.q1), zi = vec.z(g.q1);
            if (xk && zi && !(xi ^ zk)) {
                phase_exp ^= 2;
            }
            if (xk) {
                vec.flip_x(g.q1);
            }
            if (zi) {
                vec.flip_z(g.q0);
            }
            return;
        }
        case GateKind::T:
            throw std::invalid_argument("T is not a Clifford gate.");
    }
}

void PauliString::heisenberg(const Gate &g) {
    if (g.kind == GateKind::S) {
        // S^dag P S: X -> -Y, Y -> X.
        bool x = vec.x(g.q0), z = vec.z(g.q0);
        if (x && !z) {
            phase_exp ^= 2;
        }
        if (x) {
            vec.flip_z(g.q0);
        }
        return;
    }
    // H and CNOT are self-inverse.
    conjugate_by(g);
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

}  // namespace ccd
