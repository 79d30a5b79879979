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

#ifndef _CCDECODE_ORACLE_H
#define _CCDECODE_ORACLE_H

#include <cstdint>
#include <optional>
#include <string>

#include "ccdecode/dense.h"
#include "ccdecode/doped.h"

namespace ccd {

enum class OracleMode { Exact, Shots };

std::string to_string(OracleMode mode);
OracleMode parse_oracle_mode(const std::string &text);

struct OracleConfig {
    OracleMode mode = OracleMode::Exact;
    /// Shots per probe basis when learning an image; 0 means n.
    size_t shots = 0;
    /// Failure probability of one verification.
    double delta_fail = 1e-3;
};

/// Query accounting. "queries" counts uses of U (or U^dag) that the
/// measurement protocol would consume, in both modes.
struct QueryStats {
    uint64_t calls = 0;
    uint64_t queries = 0;
    uint64_t learn_calls = 0;
    uint64_t verify_calls = 0;
    uint64_t phase_calls = 0;

    QueryStats &operator+=(const QueryStats &o);
};

/// Query access to a doped circuit. Exact mode answers from the Pauli-sum
/// image; shots mode samples measurement outcomes of the per-qubit probe and
/// Choi-state protocols from the dense unitary (n <= kDenseMaxQubits).
///
/// Not thread-safe; use one oracle per worker.
class Oracle {
   public:
    explicit Oracle(const DopedCircuit &c, OracleConfig cfg = {});

    const DopedCircuit &circuit() const {
        return circuit_;
    }
    const OracleConfig &config() const {
        return cfg_;
    }
    const QueryStats &stats() const {
        return stats_;
    }
    size_t shots() const;
    /// Shots per verification: ceil(8 ln(2 / delta_fail) / eps^2) with
    /// eps = resolution_bound(t) / 2.
    uint64_t verify_shots() const;

    /// Candidate image of p (phase 0). Exact mode returns the image when p is
    /// preserved and the largest term otherwise.
    PauliString learn(const PauliString &p, Rng &rng);
    /// True iff U^dag p U = +-q (up to the shot-noise failure probability).
    bool verify(const PauliString &p, const PauliString &q, Rng &rng);
    /// Sign s with U^dag p U = s q. Exact mode throws if that does not hold.
    int phase(const PauliString &p, const PauliString &q, Rng &rng);

   private:
    const PauliSum &exact_image(const PauliString &p);
    const DenseMatrix &dense_image(const PauliString &p);
    uint64_t count_outcomes(uint64_t trials, double prob_one, Rng &rng);

    DopedCircuit circuit_;
    OracleConfig cfg_;
    QueryStats stats_;
    std::optional<PauliString> cached_key_;
    PauliSum cached_image_;
    DenseMatrix unitary_;
    std::optional<PauliString> dense_key_;
    DenseMatrix dense_cached_;
};

PauliString learn_image(const PauliString &p, const DopedCircuit &c, OracleMode mode, size_t shots, Rng &rng);
bool verify_image(const PauliString &p, const PauliString &q, const DopedCircuit &c, OracleMode mode, Rng &rng);
/// Sign of the image of a preserved p. Throws in exact mode if p is not preserved.
int phase_of_image(const PauliString &p, const DopedCircuit &c, OracleMode mode, Rng &rng);

}  // namespace ccd

#endif
