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

#ifndef _CCDECODE_DOPED_H
#define _CCDECODE_DOPED_H

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccdecode/exact.h"
#include "ccdecode/rng.h"
#include "ccdecode/tableau.h"

namespace ccd {

/// A Clifford+T circuit. T is diag(1, e^{i pi/4}).
///
/// On construction the gate list is compiled into alternating Clifford blocks
/// (kept as tableaux) and single T gates, which is what propagation uses.
class DopedCircuit {
   public:
    struct Segment {
        bool is_t = false;
        uint32_t qubit = 0;
        /// Tableau of the block B and of B^dag. Empty for T segments.
        CliffordTableau block;
        CliffordTableau block_inverse;
    };

    DopedCircuit() = default;
    DopedCircuit(size_t n, GateList gates);

    size_t num_qubits() const {
        return n_;
    }
    const GateList &gates() const {
        return gates_;
    }
    size_t t_count() const {
        return t_count_;
    }
    const std::vector<Segment> &segments() const {
        return *segments_;
    }

    /// "circuit n=<N>" followed by one gate per line (1-based indices).
    std::string str() const;
    static DopedCircuit from_text(const std::string &text);

   private:
    size_t n_ = 0;
    GateList gates_;
    size_t t_count_ = 0;
    std::shared_ptr<const std::vector<Segment>> segments_ = std::make_shared<std::vector<Segment>>();
};

/// Random Clifford C1, then prod_{i < t/2} T_i H_i T_i (plus a lone T on qubit
/// t/2 for odd t), then random Clifford C2. Needs ceil(t/2) <= n.
DopedCircuit make_scrambler(size_t n, size_t t, Rng &rng);

/// num_clifford uniformly chosen H, S or CNOT gates on random qubits with t
/// T gates inserted at random positions.
DopedCircuit random_doped_circuit(size_t n, size_t num_clifford, size_t t, Rng &rng);

struct PauliTerm {
    F2Vec vec;
    Coeff coeff;
};

/// Real linear combination of Hermitian Pauli strings (phase-free vectors),
/// with signs folded into the coefficients. Terms are sorted by vector and
/// nonzero.
class PauliSum {
   public:
    PauliSum() = default;
    explicit PauliSum(size_t n) : n_(n) {
    }
    /// The single-term sum of a Hermitian Pauli string.
    static PauliSum from_pauli(const PauliString &p);

    size_t num_qubits() const {
        return n_;
    }
    size_t size() const {
        return terms_.size();
    }
    const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    /// Coefficient of the given vector (zero if absent).
    Coeff coeff_of(const F2Vec &v) const;
    /// Largest |coefficient| term; ties broken by the vector order.
    const PauliTerm &max_term() const;

    /// Sum of squared coefficients, exactly.
    RootTwo norm_squared() const;
    std::string str() const;

    /// Merges like terms and drops zeros. Public for builders.
    void canonicalize();
    std::vector<PauliTerm> &mutable_terms() {
        return terms_;
    }

   private:
    size_t n_ = 0;
    std::vector<PauliTerm> terms_;
};

std::ostream &operator<<(std::ostream &out, const PauliSum &s);

/// U^dag p U when adjoint is set, U p U^dag otherwise. p must be Hermitian.
PauliSum propagate_pauli(const PauliString &p, const DopedCircuit &c, bool adjoint = true);

/// The image (q, sign) with U^dag p U = sign * q iff the image is one Pauli.
std::optional<std::pair<PauliString, int>> check_preserved(const PauliString &p, const DopedCircuit &c);

/// Lower bound on the gap between distinct Choi expectations for t T gates:
/// (1 / (6 sqrt(2)^{t-1})) (1 - 1/sqrt(2))^t.
double resolution_bound(size_t t);

}  // namespace ccd

#endif
