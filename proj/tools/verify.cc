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

#include "verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>

#include "ccdecode/cc.h"
#include "ccdecode/dense.h"
#include "ccdecode/hp.h"

namespace ccd {

namespace {

constexpr double kTol = 1e-10;

double max_abs(const DenseMatrix &m) {
    return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

struct CheckResult {
    size_t cases = 0;
    size_t failures = 0;
    double worst = 0;
};

std::vector<PauliString> generators(size_t n) {
    std::vector<PauliString> out;
    for (size_t q = 0; q < n; q++) {
        out.push_back(PauliString::single(n, q, 'X'));
        out.push_back(PauliString::single(n, q, 'Z'));
    }
    return out;
}

void record(CheckResult &r, double err, double tol = kTol) {
    r.cases++;
    r.worst = std::max(r.worst, err);
    if (!(err <= tol)) {
        r.failures++;
    }
}

CheckResult tableau_vs_dense(Rng &rng, size_t cases) {
    CheckResult r;
    for (size_t i = 0; i < cases; i++) {
        size_t n = 1 + i % 5;
        CliffordTableau v = sample_random_clifford(n, rng);
        DenseMatrix u = dense_unitary(v);
        for (const auto &p : generators(n)) {
            record(r, max_abs(dense_heisenberg(u, p) - dense_pauli(v.conjugate(p))));
        }
    }
    return r;
}

CheckResult propagate_vs_dense(Rng &rng, size_t cases) {
    CheckResult r;
    for (size_t i = 0; i < cases; i++) {
        size_t n = 1 + i % 6;
        size_t t = i % 7;
        DopedCircuit c = random_doped_circuit(n, 4 * n, t, rng);
        PauliString p = random_pauli(n, 0, rng);
        PauliSum img = propagate_pauli(p, c);
        DenseMatrix u = dense_unitary(c);
        record(r, max_abs(dense_pauli_sum(img) - dense_heisenberg(u, p)));
        // Choi expectation against the predicted overlap; Q^T = (-1)^{#Y} Q.
        PauliString q = random_bit(rng) && img.size() ? PauliString(img.terms()[0].vec) : random_pauli(n, 0, rng);
        double expect = img.coeff_of(q.vec).to_double();
        for (size_t k = 0; k < n; k++) {
            if (q.letter(k) == 'Y') {
                expect = -expect;
            }
        }
        record(r, std::abs(dense_expect(u, p, q) - expect));
    }
    return r;
}

CheckResult otoc_vs_dense(Rng &rng, size_t cases) {
    CheckResult r;
    for (size_t i = 0; i < cases; i++) {
        size_t n = 3 + i % 3;
        Partition part(n, 1, 2);
        DopedCircuit c = random_doped_circuit(n, 6 * n, i % 5, rng);
        record(r, std::abs(four_point_otoc(c, part).to_double() - dense_otoc(dense_unitary(c), part)));
    }
    return r;
}

CheckResult fidelity_vs_dense(Rng &rng, size_t cases) {
    CheckResult r;
    for (size_t i = 0; i < cases; i++) {
        size_t n = 4 + i % 2;
        size_t t = i % 4;
        Partition part(n, 1, 2);
        DopedCircuit c = make_scrambler(n, t, rng);
        CCParams params;
        params.m = part.c();
        LearnResult learned = learn(c, params, rng);
        std::vector<PauliString> gens;
        for (const auto &g : learned.generators) {
            gens.push_back(g.source);
        }
        HPReport rep = hp_report(c, learned.v, part, gens);
        DenseMatrix u = dense_unitary(c), v = dense_unitary(learned.v);
        double f = rep.fidelity.to_double();
        record(r, std::abs(f - hp_fidelity_dense(u, v, part)));
        record(r, std::abs(f - dense_fidelity_formula(u, v, part)));
        std::vector<PauliString> group;
        std::vector<PauliString> with_identity = gens;
        with_identity.push_back(PauliString(n));
        for (const F2Vec &vec : enumerate_group(with_identity)) {
            group.push_back(PauliString(vec));
        }
        record(r, std::abs(rep.omega_gd.to_double() - dense_truncated_otoc(u, part, group)));
        record(r, rep.fidelity == rep.fidelity_from_parts ? 0.0 : 1.0);
    }
    return r;
}

CheckResult gate_fidelity_vs_dense(Rng &rng, size_t cases) {
    CheckResult r;
    for (size_t i = 0; i < cases; i++) {
        size_t n = 1 + i % 4;
        DopedCircuit c = random_doped_circuit(n, 4 * n, i % 4, rng);
        CliffordTableau v = sample_random_clifford(n, rng);
        if (random_bit(rng)) {
            // A Clifford that agrees with U away from its T gates.
            GateList cl;
            for (const Gate &g : c.gates()) {
                if (g.is_clifford()) {
                    cl.push_back(g);
                }
            }
            v = CliffordTableau::from_gates(n, cl);
        }
        record(r, std::abs(gate_fidelity(c, v).to_double() -
                           dense_gate_fidelity(dense_unitary(c), dense_unitary(v))));
    }
    return r;
}

CheckResult compression_vs_dense(Rng &rng, size_t cases) {
    CheckResult r;
    for (size_t i = 0; i < cases; i++) {
        size_t n = 5 + i % 2;
        size_t t = i % 4;
        DopedCircuit c = make_scrambler(n, t, rng);
        DecomposeResult dec = decompose(c, rng);
        record(r, dec.s + t >= n ? 0.0 : 1.0);
        try {
            residual_reconstruct(c, dec.u0, dec.u0_prime, dec.s, 1e-8);
            record(r, 0.0);
        } catch (const std::exception &) {
            record(r, 1.0);
        }
        DenseMatrix res = dense_unitary(dec.residual);
        for (const auto &p : generators(n)) {
            record(r, max_abs(dense_heisenberg(res, p) - dense_pauli_sum(propagate_pauli(p, dec.residual))));
        }
        CompressResult comp = compress_state(c, rng);
        DenseVector embedded = DenseVector::Zero((Eigen::Index)1 << n);
        for (Eigen::Index k = 0; k < comp.phi.size(); k++) {
            embedded(k << comp.s) = comp.phi(k);
        }
        DenseVector psi = dense_unitary(c).col(0);
        double overlap = std::norm(psi.dot(dense_unitary(comp.dtilde) * embedded));
        record(r, std::abs(1.0 - overlap), 1e-8);
    }
    return r;
}

}  // namespace

int run_dense_verification(uint64_t seed, size_t cases, std::ostream &out) {
    struct Named {
        const char *name;
        std::function<CheckResult(Rng &, size_t)> fn;
        size_t cases;
    };
    const size_t small = std::max<size_t>(cases / 10, 4);
    std::vector<Named> checks = {
        {"tableau_vs_dense", tableau_vs_dense, small},
        {"propagate_vs_dense", propagate_vs_dense, cases},
        {"otoc_vs_dense", otoc_vs_dense, small},
        {"fidelity_vs_dense", fidelity_vs_dense, small},
        {"gate_fidelity_vs_dense", gate_fidelity_vs_dense, small},
        {"compression_vs_dense", compression_vs_dense, small},
    };
    int failed = 0;
    for (size_t k = 0; k < checks.size(); k++) {
        Rng rng(derive_seed(seed, k));
        CheckResult r;
        std::string error;
        try {
            r = checks[k].fn(rng, checks[k].cases);
        } catch (const std::exception &e) {
            error = e.what();
            r.failures++;
        }
        char buf[200];
        std::snprintf(buf, sizeof buf, "%s %-24s checks=%zu failures=%zu worst=%.3g", r.failures ? "FAIL" : "PASS",
                      checks[k].name, r.cases, r.failures, r.worst);
        out << buf;
        if (!error.empty()) {
            out << " error=" << error;
        }
        out << "\n";
        failed += r.failures ? 1 : 0;
    }
    return failed;
}

}  // namespace ccd
