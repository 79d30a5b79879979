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

#include "ccdecode/doped.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ccdecode/subroutines.h"

namespace ccd {

DopedCircuit::DopedCircuit(size_t n, GateList gates) : n_(n), gates_(std::move(gates)) {
    if (n == 0) {
        throw std::invalid_argument("DopedCircuit needs at least one qubit.");
    }
    auto segs = std::make_shared<std::vector<Segment>>();
    GateList block;
    auto flush = [&]() {
        if (block.empty()) {
            return;
        }
        Segment s;
        s.block = CliffordTableau::from_gates(n, block);
        s.block_inverse = s.block.inverse();
        segs->push_back(std::move(s));
        block.clear();
    };
    for (const Gate &g : gates_) {
        if (g.q0 >= n || (g.kind == GateKind::CNOT && (g.q1 >= n || g.q0 == g.q1))) {
            throw std::invalid_argument("Gate '" + g.str() + "' does not fit " + std::to_string(n) + " qubits.");
        }
        if (g.kind == GateKind::T) {
            flush();
            Segment s;
            s.is_t = true;
            s.qubit = g.q0;
            segs->push_back(std::move(s));
            t_count_++;
        } else {
            block.push_back(g);
        }
    }
    flush();
    segments_ = std::move(segs);
}

std::string DopedCircuit::str() const {
    std::ostringstream out;
    out << "circuit n=" << n_ << "\n";
    for (const Gate &g : gates_) {
        out << g.str() << "\n";
    }
    return out.str();
}

DopedCircuit DopedCircuit::from_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("circuit n=", 0) != 0) {
        throw std::invalid_argument("Expected a 'circuit n=<N>' header.");
    }
    size_t n = std::stoul(line.substr(10));
    GateList gates;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        gates.push_back(parse_gate_line(line, n));
    }
    return DopedCircuit(n, std::move(gates));
}

DopedCircuit make_scrambler(size_t n, size_t t, Rng &rng) {
    if ((t + 1) / 2 > n) {
        throw std::invalid_argument("make_scrambler: too many T gates for the middle layer.");
    }
    GateList gates = synthesize(sample_random_clifford(n, rng));
    for (uint32_t i = 0; i < t / 2; i++) {
        gates.push_back(Gate::t(i));
        gates.push_back(Gate::h(i));
        gates.push_back(Gate::t(i));
    }
    if (t & 1) {
        gates.push_back(Gate::t((uint32_t)(t / 2)));
    }
    GateList tail = synthesize(sample_random_clifford(n, rng));
    gates.insert(gates.end(), tail.begin(), tail.end());
    return DopedCircuit(n, std::move(gates));
}

DopedCircuit random_doped_circuit(size_t n, size_t num_clifford, size_t t, Rng &rng) {
    if (n == 0) {
        throw std::invalid_argument("random_doped_circuit: n must be positive.");
    }
    GateList gates;
    for (size_t i = 0; i < num_clifford; i++) {
        uint32_t q = (uint32_t)random_below(rng, n);
        uint64_t kind = random_below(rng, n > 1 ? 3 : 2);
        if (kind == 0) {
            gates.push_back(Gate::h(q));
        } else if (kind == 1) {
            gates.push_back(Gate::s(q));
        } else {
            uint32_t target = (uint32_t)random_below(rng, n - 1);
            gates.push_back(Gate::cnot(q, target >= q ? target + 1 : target));
        }
    }
    for (size_t i = 0; i < t; i++) {
        size_t pos = (size_t)random_below(rng, gates.size() + 1);
        gates.insert(gates.begin() + (std::ptrdiff_t)pos, Gate::t((uint32_t)random_below(rng, n)));
    }
    return DopedCircuit(n, std::move(gates));
}

PauliSum PauliSum::from_pauli(const PauliString &p) {
    if (!p.is_hermitian()) {
        throw std::invalid_argument("PauliSum::from_pauli needs a Hermitian string.");
    }
    PauliSum s(p.num_qubits());
    s.terms_.push_back({p.vec, Coeff(p.sign(), 0, 0)});
    return s;
}

Coeff PauliSum::coeff_of(const F2Vec &v) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                               [](const PauliTerm &t, const F2Vec &key) { return t.vec < key; });
    if (it != terms_.end() && it->vec == v) {
        return it->coeff;
    }
    return Coeff();
}

const PauliTerm &PauliSum::max_term() const {
    if (terms_.empty()) {
        throw std::logic_error("max_term of an empty PauliSum.");
    }
    const PauliTerm *best = &terms_[0];
    RootTwo best_sq = RootTwo::from_coeff(best->coeff * best->coeff);
    for (size_t i = 1; i < terms_.size(); i++) {
        RootTwo sq = RootTwo::from_coeff(terms_[i].coeff * terms_[i].coeff);
        if (best_sq < sq) {
            best = &terms_[i];
            best_sq = sq;
        }
    }
    return *best;
}

RootTwo PauliSum::norm_squared() const {
    RootTwoSum acc;
    for (const PauliTerm &t : terms_) {
        acc.add_product(t.coeff, t.coeff);
    }
    return acc.value();
}

std::string PauliSum::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < terms_.size(); i++) {
        if (i) {
            out << " + ";
        }
        out << "(" << terms_[i].coeff << ")" << PauliString(terms_[i].vec).str().substr(1);
    }
    return out.str();
}

void PauliSum::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const PauliTerm &a, const PauliTerm &b) { return a.vec < b.vec; });
    size_t out = 0;
    for (size_t i = 0; i < terms_.size();) {
        PauliTerm merged = std::move(terms_[i]);
        size_t j = i + 1;
        for (; j < terms_.size() && terms_[j].vec == merged.vec; j++) {
            merged.coeff = merged.coeff + terms_[j].coeff;
        }
        if (!merged.coeff.is_zero()) {
            terms_[out++] = std::move(merged);
        }
        i = j;
    }
    terms_.resize(out);
}

std::ostream &operator<<(std::ostream &out, const PauliSum &s) {
    return out << s.str();
}

PauliSum propagate_pauli(const PauliString &p, const DopedCircuit &c, bool adjoint) {
    if (p.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("propagate_pauli: qubit count mismatch.");
    }
    PauliSum sum = PauliSum::from_pauli(p);
    std::vector<PauliTerm> &terms = sum.mutable_terms();
    auto step = [&](const DopedCircuit::Segment &s) {
        if (!s.is_t) {
            const CliffordTableau &tab = adjoint ? s.block : s.block_inverse;
            for (PauliTerm &term : terms) {
                PauliString img = tab.conjugate(PauliString(std::move(term.vec)));
                term.vec = std::move(img.vec);
                if (img.phase_exp == 2) {
                    term.coeff = -term.coeff;
                }
            }
            return;
        }
        // T^dag P T = (P + i Z P) / sqrt(2) and T P T^dag = (P - i Z P) / sqrt(2)
        // when P anticommutes with Z on the qubit. i Z X = -Y and i Z Y = X.
        uint32_t q = s.qubit;
        size_t count = terms.size();
        bool split = false;
        for (size_t i = 0; i < count; i++) {
            if (!terms[i].vec.x(q)) {
                continue;
            }
            split = true;
            Coeff c = terms[i].coeff.div_sqrt2();
            terms[i].coeff = c;
            F2Vec v = terms[i].vec;
            bool positive = v.z(q) == adjoint;
            v.flip_z(q);
            terms.push_back({std::move(v), positive ? c : -c});
        }
        if (split) {
            sum.canonicalize();
        }
    };
    const auto &segs = c.segments();
    if (adjoint) {
        for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
            step(*it);
        }
    } else {
        for (const auto &s : segs) {
            step(s);
        }
    }
    sum.canonicalize();
    return sum;
}

std::optional<std::pair<PauliString, int>> check_preserved(const PauliString &p, const DopedCircuit &c) {
    PauliSum s = propagate_pauli(p, c, true);
    if (s.size() != 1 || !s.terms()[0].coeff.is_unit()) {
        return std::nullopt;
    }
    const PauliTerm &t = s.terms()[0];
    return std::make_pair(PauliString(t.vec), t.coeff.a > 0 ? 1 : -1);
}

double resolution_bound(size_t t) {
    double tt = (double)t;
    return 1.0 / (6.0 * std::pow(M_SQRT2, tt - 1.0)) * std::pow(1.0 - M_SQRT1_2, tt);
}

}  // namespace ccd
