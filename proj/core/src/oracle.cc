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

#include "ccdecode/oracle.h"

#include <boost/random/binomial_distribution.hpp>
#include <cmath>
#include <stdexcept>

namespace ccd {

namespace {

// Outcome probabilities within this distance of 0 or 1 are treated as exact.
constexpr double kDeterministicSlack = 1e-12;

int count_y(const PauliString &q) {
    int y = 0;
    for (size_t k = 0; k < q.num_qubits(); k++) {
        y += q.vec.x(k) && q.vec.z(k);
    }
    return y;
}

}  // namespace

std::string to_string(OracleMode mode) {
    return mode == OracleMode::Exact ? "exact" : "shots";
}

OracleMode parse_oracle_mode(const std::string &text) {
    if (text == "exact") {
        return OracleMode::Exact;
    }
    if (text == "shots") {
        return OracleMode::Shots;
    }
    throw std::invalid_argument("Unknown oracle mode '" + text + "' (expected exact or shots).");
}

QueryStats &QueryStats::operator+=(const QueryStats &o) {
    calls += o.calls;
    queries += o.queries;
    learn_calls += o.learn_calls;
    verify_calls += o.verify_calls;
    phase_calls += o.phase_calls;
    return *this;
}

Oracle::Oracle(const DopedCircuit &c, OracleConfig cfg) : circuit_(c), cfg_(cfg) {
    if (cfg_.delta_fail <= 0 || cfg_.delta_fail >= 1) {
        throw std::invalid_argument("Oracle: delta_fail must lie in (0, 1).");
    }
    if (cfg_.mode == OracleMode::Shots) {
        if (c.num_qubits() > kDenseMaxQubits) {
            throw std::invalid_argument("Oracle: shots mode needs n <= " + std::to_string(kDenseMaxQubits) + ".");
        }
        unitary_ = dense_unitary(c);
    }
}

size_t Oracle::shots() const {
    return cfg_.shots ? cfg_.shots : circuit_.num_qubits();
}

uint64_t Oracle::verify_shots() const {
    double eps = resolution_bound(circuit_.t_count()) / 2;
    return (uint64_t)std::ceil(8.0 * std::log(2.0 / cfg_.delta_fail) / (eps * eps));
}

const PauliSum &Oracle::exact_image(const PauliString &p) {
    if (!cached_key_ || *cached_key_ != p) {
        cached_image_ = propagate_pauli(p, circuit_, true);
        cached_key_ = p;
    }
    return cached_image_;
}

const DenseMatrix &Oracle::dense_image(const PauliString &p) {
    if (!dense_key_ || *dense_key_ != p) {
        dense_cached_ = dense_heisenberg(unitary_, p);
        dense_key_ = p;
    }
    return dense_cached_;
}

uint64_t Oracle::count_outcomes(uint64_t trials, double prob_one, Rng &rng) {
    if (prob_one <= kDeterministicSlack) {
        return 0;
    }
    if (prob_one >= 1 - kDeterministicSlack) {
        return trials;
    }
    boost::random::binomial_distribution<int64_t, double> dist((int64_t)trials, prob_one);
    return (uint64_t)dist(rng);
}

PauliString Oracle::learn(const PauliString &p, Rng &rng) {
    const size_t n = circuit_.num_qubits();
    stats_.calls++;
    stats_.learn_calls++;
    // Two probe states per qubit, each shot uses U and U^dag once.
    stats_.queries += 4 * n * shots();
    if (cfg_.mode == OracleMode::Exact) {
        return PauliString(exact_image(p).max_term().vec);
    }
    const DenseMatrix &m = dense_image(p);
    const uint64_t dim = uint64_t{1} << n;
    const double norm = 2.0 / (double)dim;
    PauliString out(n);
    for (size_t j = 0; j < n; j++) {
        const uint64_t bit = uint64_t{1} << j;
        // Probability that qubit j returns to the probe state, with the rest
        // of the register maximally entangled with a reference.
        double stay0 = 0, stay_plus = 0;
        for (uint64_t k = 0; k < dim; k++) {
            if (k & bit) {
                continue;
            }
            for (uint64_t l = 0; l < dim; l++) {
                if (l & bit) {
                    continue;
                }
                auto a00 = m((Eigen::Index)k, (Eigen::Index)l), a01 = m((Eigen::Index)k, (Eigen::Index)(l | bit));
                auto a10 = m((Eigen::Index)(k | bit), (Eigen::Index)l);
                auto a11 = m((Eigen::Index)(k | bit), (Eigen::Index)(l | bit));
                stay0 += std::norm(a00);
                stay_plus += std::norm(0.5 * (a00 + a01 + a10 + a11));
            }
        }
        const uint64_t shots_j = shots();
        bool ret0 = 2 * count_outcomes(shots_j, stay0 * norm, rng) >= shots_j;
        bool ret_plus = 2 * count_outcomes(shots_j, stay_plus * norm, rng) >= shots_j;
        // Z-probe flips iff the letter has an X part; X-probe flips iff it has a Z part.
        out.vec.set_x(j, !ret0);
        out.vec.set_z(j, !ret_plus);
    }
    return out;
}

bool Oracle::verify(const PauliString &p, const PauliString &q, Rng &rng) {
    stats_.calls++;
    stats_.verify_calls++;
    const uint64_t trials = verify_shots();
    stats_.queries += trials;
    if (cfg_.mode == OracleMode::Exact) {
        const PauliSum &img = exact_image(p);
        return img.size() == 1 && img.terms()[0].coeff.is_unit() && img.terms()[0].vec == q.vec;
    }
    double v = dense_expect(unitary_, p, PauliString(q.vec)).real();
    uint64_t plus = count_outcomes(trials, (1 + v) / 2, rng);
    double est = 2.0 * (double)plus / (double)trials - 1.0;
    double eps = resolution_bound(circuit_.t_count()) / 2;
    return std::abs(est) > 1 - eps;
}

int Oracle::phase(const PauliString &p, const PauliString &q, Rng &rng) {
    stats_.calls++;
    stats_.phase_calls++;
    stats_.queries += 1;
    if (cfg_.mode == OracleMode::Exact) {
        const PauliSum &img = exact_image(p);
        if (img.size() != 1 || !img.terms()[0].coeff.is_unit() || img.terms()[0].vec != q.vec) {
            throw std::invalid_argument("phase: " + p.str() + " is not mapped to +-" + q.str() + ".");
        }
        return img.terms()[0].coeff.a > 0 ? 1 : -1;
    }
    // One shot of Q (x) P on the Choi state gives s (-1)^{#Y(Q)}.
    PauliString qh(q.vec);
    double v = dense_expect(unitary_, p, qh).real();
    int outcome = count_outcomes(1, (1 + v) / 2, rng) ? 1 : -1;
    return (count_y(qh) & 1) ? -outcome : outcome;
}

PauliString learn_image(const PauliString &p, const DopedCircuit &c, OracleMode mode, size_t shots, Rng &rng) {
    Oracle oracle(c, {mode, shots, 1e-3});
    return oracle.learn(p, rng);
}

bool verify_image(const PauliString &p, const PauliString &q, const DopedCircuit &c, OracleMode mode, Rng &rng) {
    Oracle oracle(c, {mode, 0, 1e-3});
    return oracle.verify(p, q, rng);
}

int phase_of_image(const PauliString &p, const DopedCircuit &c, OracleMode mode, Rng &rng) {
    Oracle oracle(c, {mode, 0, 1e-3});
    PauliString q = oracle.learn(p, rng);
    if (mode == OracleMode::Exact && !oracle.verify(p, q, rng)) {
        throw std::invalid_argument("phase_of_image: " + p.str() + " is not preserved.");
    }
    return oracle.phase(p, q, rng);
}

}  // namespace ccd
