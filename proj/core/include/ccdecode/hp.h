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

#ifndef _CCDECODE_HP_H
#define _CCDECODE_HP_H

#include <string>
#include <utility>
#include <vector>

#include "ccdecode/doped.h"
#include "ccdecode/exact.h"
#include "ccdecode/partition.h"
#include "ccdecode/tableau.h"

namespace ccd {

/// Largest |D| for which sums over all of P(D) are attempted.
inline constexpr size_t kMaxEnumeratedD = 10;

/// tr(P_A X P_A Y) / d. Only matching terms contribute, each with the sign
/// (-1)^{omega(P_A, p)}.
RootTwo trace_kernel(const PauliString &pa, const PauliSum &x, const PauliSum &y);

/// All 2^k elements (phase-free) of the group generated by gens. Throws if
/// the generators span more than 2^20 elements.
std::vector<F2Vec> enumerate_group(const std::vector<PauliString> &gens);

/// Every P_D whose image under U is a single Pauli string, identity included.
std::vector<PauliString> preserved_subgroup(const DopedCircuit &c, const Partition &part);

/// Omega(U): the P(A) x P(D) average of tr(P_A P_D(U) P_A P_D(U)) / d.
RootTwo four_point_otoc(const DopedCircuit &c, const Partition &part);

/// The same average with P_D restricted to the group generated by gens
/// (strings supported on D).
RootTwo truncated_otoc(const DopedCircuit &c, const Partition &part, const std::vector<PauliString> &gens);

/// (R, R') summed over P(D) outside the group generated by gens.
std::pair<RootTwo, RootTwo> correction_terms(const DopedCircuit &c, const CliffordTableau &v, const Partition &part,
                                             const std::vector<PauliString> &gens);

/// Decoding fidelity of the Clifford decoder v, as the ratio of P(D) sums.
RootTwo fidelity(const DopedCircuit &c, const CliffordTableau &v, const Partition &part);

/// |tr(V^dag U)|^2 / d^2 as d^{-3} sum_P tr(P(U) P(V)). Needs n <= 10.
RootTwo gate_fidelity(const DopedCircuit &c, const CliffordTableau &v);

/// d_A^{-2} + d_D^{-2} - d_A^{-2} d_D^{-2}.
RootTwo scrambler_otoc_value(const Partition &part);

/// |Omega(U) - scrambler_otoc_value| <= tol. A negative tol selects 4 / d.
bool is_scrambler(const DopedCircuit &c, const Partition &part, double tol = -1);

struct HPReport {
    RootTwo fidelity;
    /// (1 + R) / (d_A^2 omega_gd + R').
    RootTwo fidelity_from_parts;
    /// Truncated OTOC over the learned group.
    RootTwo omega_gd;
    RootTwo omega4;
    RootTwo r;
    RootTwo r_prime;
    uint64_t gd_size = 0;
    /// |G_D| by exhaustive check; at least gd_size.
    uint64_t true_gd_size = 0;
    /// R = R' = 0.
    bool success = false;

    /// One "key=value" line per field; exact values followed by "_f" floats.
    std::string str() const;
};

/// Every quantity above in one pass over P(D). gens are the learned
/// generators, supported on D.
HPReport hp_report(const DopedCircuit &c, const CliffordTableau &v, const Partition &part,
                   const std::vector<PauliString> &gens);

}  // namespace ccd

#endif
