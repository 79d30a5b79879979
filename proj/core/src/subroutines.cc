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

#include "ccdecode/subroutines.h"

#include <sstream>
#include <stdexcept>

#include "sweep.h"

namespace ccd {

TauMatrix::TauMatrix(size_t n) : num_qubits(n), rows(2 * n, F2Vec(n)), source(2 * n, -1) {
}

bool TauMatrix::row_is_constrained(size_t k) const {
    size_t slot = k / 2;
    if (slot < num_pairs) {
        return true;
    }
    return slot < num_pairs + num_unpaired && (k & 1) == 0;
}

bool TauMatrix::is_valid() const {
    if (rows.size() != 2 * num_qubits || num_pairs + num_unpaired > num_qubits) {
        return false;
    }
    std::vector<F2Vec> nonzero;
    for (size_t k = 0; k < rows.size(); k++) {
        if (rows[k].num_qubits != num_qubits) {
            return false;
        }
        if (rows[k].is_zero() == row_is_constrained(k)) {
            return false;
        }
        if (!rows[k].is_zero()) {
            nonzero.push_back(rows[k]);
        }
    }
    for (size_t a = 0; a < rows.size(); a++) {
        for (size_t b = a + 1; b < rows.size(); b++) {
            bool paired = a / 2 == b / 2 && a / 2 < num_pairs;
            if (symplectic_form(rows[a], rows[b]) != paired) {
                return false;
            }
        }
    }
    return f2_rank(nonzero) == nonzero.size();
}

std::string TauMatrix::str() const {
    std::ostringstream out;
    out << "tau n=" << num_qubits << "\n";
    for (const auto &r : rows) {
        out << r.bits() << " 0\n";
    }
    return out.str();
}

TauMatrix TauMatrix::from_text(const std::string &text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header) || header.rfind("tau n=", 0) != 0) {
        throw std::invalid_argument("Expected a 'tau n=<N>' header.");
    }
    size_t n = std::stoul(header.substr(6));
    TauMatrix t(n);
    for (size_t k = 0; k < 2 * n; k++) {
        std::string bits, phase;
        if (!(in >> bits >> phase) || bits.size() != 2 * n) {
            throw std::invalid_argument("Malformed tau row " + std::to_string(k) + ".");
        }
        t.rows[k] = F2Vec::from_bits(bits);
    }
    // Recover the counts from the zero pattern.
    size_t slot = 0;
    while (slot < n && !t.rows[2 * slot].is_zero() && !t.rows[2 * slot + 1].is_zero()) {
        slot++;
    }
    t.num_pairs = slot;
    while (slot < n && !t.rows[2 * slot].is_zero() && t.rows[2 * slot + 1].is_zero()) {
        slot++;
    }
    t.num_unpaired = slot - t.num_pairs;
    if (!t.is_valid()) {
        throw std::invalid_argument("tau text is not in normal form.");
    }
    return t;
}

TauMatrix build_tau(const std::vector<PauliString> &h) {
    if (h.empty()) {
        throw std::invalid_argument("build_tau: need the qubit count; pass at least one generator.");
    }
    size_t n = h[0].num_qubits();
    std::vector<F2Vec> vecs;
    for (const auto &p : h) {
        if (p.num_qubits() != n) {
            throw std::invalid_argument("build_tau: generators have different sizes.");
        }
        vecs.push_back(p.vec);
    }
    if (f2_rank(vecs) != vecs.size() || h.size() > 2 * n) {
        throw std::invalid_argument("build_tau: generators are dependent.");
    }
    std::vector<bool> used(h.size(), false);
    std::vector<std::pair<size_t, size_t>> pairs;
    std::vector<size_t> singles;
    for (size_t i = 0; i < h.size(); i++) {
        if (used[i]) {
            continue;
        }
        used[i] = true;
        bool found = false;
        for (size_t j = i + 1; j < h.size(); j++) {
            if (!used[j] && symplectic_form(vecs[i], vecs[j])) {
                used[j] = true;
                pairs.push_back({i, j});
                found = true;
                break;
            }
        }
        if (!found) {
            singles.push_back(i);
        }
    }
    TauMatrix t(n);
    t.num_pairs = pairs.size();
    t.num_unpaired = singles.size();
    if (t.num_slots() > n) {
        throw std::invalid_argument("build_tau: generators are not in normal form.");
    }
    for (size_t k = 0; k < pairs.size(); k++) {
        t.rows[2 * k] = vecs[pairs[k].first];
        t.rows[2 * k + 1] = vecs[pairs[k].second];
        t.source[2 * k] = (int)pairs[k].first;
        t.source[2 * k + 1] = (int)pairs[k].second;
    }
    for (size_t k = 0; k < singles.size(); k++) {
        size_t slot = pairs.size() + k;
        t.rows[2 * slot] = vecs[singles[k]];
        t.source[2 * slot] = (int)singles[k];
    }
    if (!t.is_valid()) {
        throw std::invalid_argument("build_tau: generators are not in normal form.");
    }
    return t;
}

SweepResult sweep_pair(const PauliString &p1, const PauliString &p2) {
    if (p1.num_qubits() != p2.num_qubits()) {
        throw std::invalid_argument("sweep_pair: size mismatch.");
    }
    if (p1.commutes(p2)) {
        throw std::invalid_argument("sweep_pair: inputs commute.");
    }
    size_t n = p1.num_qubits();
    internal::RowTransformer tr;
    tr.rows = {p1, p2};
    tr.sweep_pair(0, 1, 0);
    SweepResult result{tr.gates, SymplecticMatrix(n)};
    // W s W^dag is conjugation by the tableau of W^dag.
    CliffordTableau w_dag = CliffordTableau::from_gates(n, tr.gates).inverse();
    for (size_t k = 0; k < 2 * n; k++) {
        result.transform.rows[k] = w_dag.rows[k].vec;
    }
    return result;
}

CliffordTableau sample_random_clifford(size_t n, Rng &rng, CliffordSampleStats *stats) {
    if (n == 0) {
        throw std::invalid_argument("sample_random_clifford: n must be positive.");
    }
    if (stats != nullptr) {
        *stats = CliffordSampleStats{};
    }
    // For each qubit j sample an anticommuting pair on qubits >= j and sweep it
    // onto (X_j, Z_j). The product of the sweeps, in order, is the sample.
    internal::RowTransformer tr;
    for (size_t j = 0; j < n; j++) {
        size_t x_draws = 0, x_identity = 0, z_draws = 0, z_rejected = 0;
        PauliString px(n);
        while (true) {
            px = random_pauli(n, j, rng);
            x_draws++;
            if (!px.is_identity()) {
                break;
            }
            x_identity++;
        }
        PauliString pz(n);
        while (true) {
            pz = random_pauli(n, j, rng);
            z_draws++;
            if (!pz.commutes(px)) {
                break;
            }
            z_rejected++;
        }
        if (stats != nullptr) {
            stats->x_draws.push_back(x_draws);
            stats->x_identity.push_back(x_identity);
            stats->z_draws.push_back(z_draws);
            stats->z_rejected.push_back(z_rejected);
        }
        tr.rows = {px, pz};
        tr.sweep_pair(0, 1, j);
    }
    CliffordTableau t = CliffordTableau::from_gates(n, tr.gates);
    for (auto &r : t.rows) {
        r.phase_exp = random_bit(rng) ? 2 : 0;
    }
    return t;
}

namespace {

// Sweeps unpaired rows (given by their indices in tr.rows) onto X on qubits
// lo, lo+1, ... and clears the X components they pick up on earlier unpaired
// qubits.
void sweep_unpaired(internal::RowTransformer &tr, const std::vector<size_t> &idx, size_t lo) {
    for (size_t k = 0; k < idx.size(); k++) {
        size_t q = lo + k;
        tr.sweep_single(idx[k], q);
        for (size_t prev = lo; prev < q; prev++) {
            if (tr.rows[idx[k]].vec.x(prev)) {
                tr.apply(Gate::cnot((uint32_t)q, (uint32_t)prev));
            }
        }
    }
}

}  // namespace

DiagonalizeResult diagonalize_signed(const TauMatrix &tau, const std::vector<uint8_t> &sign_bits) {
    if (!tau.is_valid()) {
        throw std::invalid_argument("diagonalize: input is not in normal form.");
    }
    if (sign_bits.size() != tau.rows.size()) {
        throw std::invalid_argument("diagonalize: need one sign bit per row.");
    }
    size_t n = tau.num_qubits;
    internal::RowTransformer tr;
    std::vector<size_t> row_of;
    for (size_t k = 0; k < tau.rows.size(); k++) {
        if (tau.row_is_constrained(k)) {
            row_of.push_back(k);
            tr.rows.emplace_back(tau.rows[k], sign_bits[k] ? 2 : 0);
        }
    }
    for (size_t i = 0; i < tau.num_pairs; i++) {
        tr.sweep_pair(2 * i, 2 * i + 1, i);
    }
    std::vector<size_t> singles;
    for (size_t i = 0; i < tau.num_unpaired; i++) {
        singles.push_back(2 * tau.num_pairs + i);
    }
    sweep_unpaired(tr, singles, tau.num_pairs);
    for (size_t k = 0; k < tr.rows.size(); k++) {
        tr.fix_local_sign(k);
    }
    DiagonalizeResult result;
    // W g W^dag = e, so D = W^dag.
    result.dhat = CliffordTableau::from_gates(n, tr.gates).inverse();
    result.dhat_gates = inverse_clifford_gates(tr.gates);
    result.out = TauMatrix(n);
    result.out.num_pairs = tau.num_pairs;
    result.out.num_unpaired = tau.num_unpaired;
    for (size_t k : row_of) {
        result.out.rows[k].set_bit(k, true);
        result.out.source[k] = tau.source[k];
    }
    return result;
}

DiagonalizeResult diagonalize(const TauMatrix &tau) {
    return diagonalize_signed(tau, std::vector<uint8_t>(tau.rows.size(), 0));
}

CliffordTableau complete_constrained(const TauMatrix &tau, const std::vector<uint8_t> &phase_bits, Rng &rng) {
    if (!tau.is_valid()) {
        throw std::invalid_argument("complete_constrained: constraints are not in normal form.");
    }
    if (phase_bits.size() != tau.rows.size()) {
        throw std::invalid_argument("complete_constrained: need one phase bit per row.");
    }
    size_t n = tau.num_qubits;
    size_t np = tau.num_pairs;
    size_t nn = tau.num_unpaired;
    internal::RowTransformer tr;
    for (size_t k = 0; k < tau.rows.size(); k++) {
        if (tau.row_is_constrained(k)) {
            tr.rows.emplace_back(tau.rows[k], phase_bits[k] ? 2 : 0);
        }
    }
    // Pairs onto (X_i, Z_i).
    for (size_t i = 0; i < np; i++) {
        tr.sweep_pair(2 * i, 2 * i + 1, i);
    }
    // A uniformly random Clifford on the remaining qubits.
    if (np < n) {
        CliffordTableau sym = sample_random_clifford(n - np, rng);
        for (Gate g : synthesize(sym)) {
            g.q0 += (uint32_t)np;
            g.q1 += (uint32_t)np;
            tr.apply(g);
        }
    }
    std::vector<size_t> singles;
    for (size_t i = 0; i < nn; i++) {
        singles.push_back(2 * np + i);
    }
    sweep_unpaired(tr, singles, np);
    for (size_t k = 0; k < tr.rows.size(); k++) {
        tr.fix_local_sign(k);
    }
    // W^dag e_a W = tau_a with W the recorded circuit.
    CliffordTableau w = CliffordTableau::from_gates(n, tr.gates);

    // Left factor fixing every constrained e_a: identity on pair qubits, a
    // random sign on Z of unpaired qubits, a random Clifford on free qubits.
    size_t used = np + nn;
    CliffordTableau r(n);
    for (size_t q = np; q < used; q++) {
        if (random_bit(rng)) {
            r.rows[2 * q + 1].phase_exp = 2;
        }
    }
    if (used < n) {
        CliffordTableau free_part = embed(sample_random_clifford(n - used, rng), n, used);
        for (size_t k = 2 * used; k < 2 * n; k++) {
            r.rows[k] = free_part.rows[k];
        }
    }
    return compose(r, w);
}

}  // namespace ccd
