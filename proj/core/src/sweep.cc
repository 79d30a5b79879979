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

#include "sweep.h"

#include <stdexcept>

namespace ccd::internal {

void RowTransformer::apply(const Gate &g) {
    gates.push_back(g);
    for (auto &r : rows) {
        r.conjugate_by(g);
    }
}

void RowTransformer::swap_qubits(uint32_t a, uint32_t b) {
    apply(Gate::cnot(a, b));
    apply(Gate::cnot(b, a));
    apply(Gate::cnot(a, b));
}

void RowTransformer::apply_x(uint32_t q) {
    GateList g;
    append_pauli_x(g, q);
    for (const auto &e : g) {
        apply(e);
    }
}

void RowTransformer::apply_z(uint32_t q) {
    GateList g;
    append_pauli_z(g, q);
    for (const auto &e : g) {
        apply(e);
    }
}

namespace {

// Turns rows[i] into a product of X's on qubits >= lo and cancels all but the
// lowest of them with a CNOT ladder. Returns the surviving qubit.
uint32_t reduce_to_single_x(RowTransformer &tr, size_t i, size_t lo) {
    size_t n = tr.rows[i].num_qubits();
    for (size_t q = lo; q < n; q++) {
        const F2Vec &v = tr.rows[i].vec;
        if (v.z(q)) {
            tr.apply(v.x(q) ? Gate::s((uint32_t)q) : Gate::h((uint32_t)q));
        }
    }
    std::vector<uint32_t> support;
    for (size_t q = lo; q < n; q++) {
        if (tr.rows[i].vec.x(q)) {
            support.push_back((uint32_t)q);
        }
    }
    if (support.empty()) {
        throw std::invalid_argument("sweep: row is trivial on the remaining qubits.");
    }
    while (support.size() > 1) {
        std::vector<uint32_t> next;
        for (size_t a = 0; a < support.size(); a += 2) {
            if (a + 1 < support.size()) {
                tr.apply(Gate::cnot(support[a], support[a + 1]));
            }
            next.push_back(support[a]);
        }
        support.swap(next);
    }
    return support[0];
}

}  // namespace

void RowTransformer::sweep_single(size_t i, size_t lo) {
    uint32_t q = reduce_to_single_x(*this, i, lo);
    if (q != lo) {
        swap_qubits(q, (uint32_t)lo);
    }
}

void RowTransformer::sweep_pair(size_t i1, size_t i2, size_t lo) {
    if (rows[i1].commutes(rows[i2])) {
        throw std::invalid_argument("sweep_pair: rows commute.");
    }
    sweep_single(i1, lo);
    apply(Gate::h((uint32_t)lo));
    // rows[i1] is now Z_lo, so rows[i2] carries X or Y on qubit lo and the
    // ladder below keeps lo as its lowest surviving qubit.
    uint32_t q = reduce_to_single_x(*this, i2, lo);
    if (q != lo) {
        throw std::logic_error("sweep_pair: partner did not land on the pivot qubit.");
    }
    apply(Gate::h((uint32_t)lo));
}

void RowTransformer::fix_local_sign(size_t i) {
    const PauliString &r = rows[i];
    if (r.phase_exp == 0) {
        return;
    }
    size_t q = r.vec.first_bit() / 2;
    if (r.vec.x(q)) {
        apply_z((uint32_t)q);
    } else {
        apply_x((uint32_t)q);
    }
}

}  // namespace ccd::internal
