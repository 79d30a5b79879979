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

#include "ccdecode/gate.h"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ccd {

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind || q0 != other.q0) {
        return false;
    }
    return kind != GateKind::CNOT || q1 == other.q1;
}

std::string Gate::str() const {
    switch (kind) {
        case GateKind::H:
            return "H " + std::to_string(q0 + 1);
        case GateKind::S:
            return "S " + std::to_string(q0 + 1);
        case GateKind::T:
            return "T " + std::to_string(q0 + 1);
        case GateKind::CNOT:
            return "CNOT " + std::to_string(q0 + 1) + " " + std::to_string(q1 + 1);
    }
    return "?";
}

std::ostream &operator<<(std::ostream &out, const Gate &g) {
    return out << g.str();
}

size_t count_t(const GateList &gates) {
    size_t t = 0;
    for (const auto &g : gates) {
        t += g.kind == GateKind::T;
    }
    return t;
}

GateList inverse_clifford_gates(const GateList &gates) {
    GateList out;
    out.reserve(gates.size() * 2);
    for (size_t k = gates.size(); k-- > 0;) {
        const Gate &g = gates[k];
        if (g.kind == GateKind::T) {
            throw std::invalid_argument("inverse_clifford_gates: T gate has no Clifford inverse.");
        }
        if (g.kind == GateKind::S) {
            out.push_back(g);
            out.push_back(g);
        }
        out.push_back(g);
    }
    return out;
}

void append_pauli_x(GateList &out, uint32_t q) {
    out.push_back(Gate::h(q));
    out.push_back(Gate::s(q));
    out.push_back(Gate::s(q));
    out.push_back(Gate::h(q));
}

void append_pauli_z(GateList &out, uint32_t q) {
    out.push_back(Gate::s(q));
    out.push_back(Gate::s(q));
}

Gate parse_gate_line(const std::string &line, size_t num_qubits) {
    std::istringstream in(line);
    std::string name;
    in >> name;
    auto read_index = [&]() -> uint32_t {
        long long v;
        if (!(in >> v)) {
            throw std::invalid_argument("Missing qubit index in gate line '" + line + "'.");
        }
        if (v < 1 || (size_t)v > num_qubits) {
            throw std::invalid_argument("Qubit index out of range in gate line '" + line + "'.");
        }
        return (uint32_t)(v - 1);
    };
    Gate g{GateKind::H, 0, 0};
    if (name == "H") {
        g = Gate::h(read_index());
    } else if (name == "S") {
        g = Gate::s(read_index());
    } else if (name == "T") {
        g = Gate::t(read_index());
    } else if (name == "CNOT") {
        uint32_t c = read_index();
        uint32_t t = read_index();
        if (c == t) {
            throw std::invalid_argument("CNOT control equals target in '" + line + "'.");
        }
        g = Gate::cnot(c, t);
    } else {
        throw std::invalid_argument("Unknown gate '" + name + "'.");
    }
    std::string rest;
    if (in >> rest) {
        throw std::invalid_argument("Trailing tokens in gate line '" + line + "'.");
    }
    return g;
}

}  // namespace ccd
