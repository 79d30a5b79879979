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

#ifndef _CCDECODE_CC_H
#define _CCDECODE_CC_H

#include <string>
#include <vector>

#include "ccdecode/dense.h"
#include "ccdecode/oracle.h"
#include "ccdecode/subroutines.h"

namespace ccd {

struct CCParams {
    /// Number of leading qubits excluded from the search (the C register).
    size_t m = 0;
    /// Candidates tried per search before giving up; 0 selects
    /// default_budget(n, t).
    size_t budget = 0;
    OracleConfig oracle;
};

/// ceil(2^{t+2} n / 3).
size_t default_budget(size_t n, size_t t);

struct LearnedGenerator {
    /// A preserved Pauli string supported on qubits [m, n).
    PauliString source;
    /// Its image up to sign: U^dag source U = sign * image.
    PauliString image;
    int sign = 1;
};

struct LearnStats {
    /// Candidates drawn against the budget (identity draws included).
    uint64_t sampling_steps = 0;
    uint64_t oracle_queries = 0;
    uint64_t oracle_calls = 0;
    /// Number of completed outer iterations.
    size_t k_reached = 0;
    /// Per outer iteration: candidates drawn until a preserved one was found.
    std::vector<uint64_t> x_trials;
};

struct LearnResult {
    size_t num_qubits = 0;
    size_t m = 0;
    std::vector<LearnedGenerator> generators;
    /// Decoder with V^dag source V = sign * image for every generator.
    CliffordTableau v;
    /// Diagonalizer of the generators (acting on [m, n)):
    /// dhat^dag source dhat is a local generator.
    CliffordTableau dhat;
    /// Generators in normal form (rows are sources).
    TauMatrix tau;
    LearnStats stats;

    size_t num_pairs() const {
        return tau.num_pairs;
    }
    /// Sections "[V]", "[Dhat]", "[generators]" (pauli image sign) and
    /// "[stats]" (key=value), after a "learn n=<N> m=<M>" header.
    std::string str() const;
    static LearnResult from_text(const std::string &text);
};

LearnResult learn(Oracle &oracle, const CCParams &params, Rng &rng);
LearnResult learn(const DopedCircuit &c, const CCParams &params, Rng &rng);

/// The decoder from learned generators: a uniformly random Clifford V with
/// V^dag source V = sign * image for all of them.
CliffordTableau complete_decoder(size_t n, const std::vector<LearnedGenerator> &gens, Rng &rng);

struct DecomposeResult {
    CliffordTableau u0;
    CliffordTableau u0_prime;
    /// Qubits [0, s) carry the identity block of the residual.
    size_t s = 0;
    /// u0^dag U u0'^dag as a circuit.
    DopedCircuit residual;
    LearnResult learned;
    size_t attempts = 0;
};

/// Writes U = u0 (1_s (x) u) u0' with Clifford u0, u0'. Retries learning up
/// to max_retries times with fresh randomness if the identity-block check fails.
DecomposeResult decompose(const DopedCircuit &c, Rng &rng, const CCParams &params = {}, size_t max_retries = 3);

/// Circuit of u0^dag U u0'^dag.
DopedCircuit residual_circuit(const DopedCircuit &c, const CliffordTableau &u0, const CliffordTableau &u0_prime);

/// True iff every X_j, Z_j (j < s) is mapped to itself with sign +1.
bool identity_block_holds(const DopedCircuit &residual, size_t s);

struct CompressResult {
    /// U|0> = dtilde (|0>_s (x) |phi>).
    CliffordTableau dtilde;
    size_t s = 0;
    DenseVector phi;
};

/// Compresses U|0^n>. Needs n <= kDenseMaxQubits for the residual state.
CompressResult compress_state(const DopedCircuit &c, Rng &rng, const CCParams &params = {});

/// The dense unitary u on qubits [s, n) of the residual. Throws if the
/// residual is not 1_s (x) u within tol.
DenseMatrix residual_reconstruct(const DopedCircuit &c, const CliffordTableau &u0, const CliffordTableau &u0_prime,
                                 size_t s, double tol = 1e-9);

}  // namespace ccd

#endif
