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

#ifndef _CCDECODE_DENSE_H
#define _CCDECODE_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ccdecode/doped.h"
#include "ccdecode/partition.h"

namespace ccd {

// Brute-force reference implementations. Qubit q is bit q of a basis index.
// EPR states are d^{-1/2} sum_i |i>|i> in the computational basis.

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

inline constexpr size_t kDenseMaxQubits = 12;

/// m -> g m, acting on the row index of a 2^n-row matrix.
void apply_gate_dense(DenseMatrix &m, size_t n, const Gate &g);

DenseMatrix dense_unitary(const DopedCircuit &c);
/// A unitary with the given tableau (global phase unspecified).
DenseMatrix dense_unitary(const CliffordTableau &t);

DenseMatrix dense_pauli(const PauliString &p);
DenseMatrix dense_pauli_sum(const PauliSum &s);

/// U^dag P U.
DenseMatrix dense_heisenberg(const DenseMatrix &u, const PauliString &p);

/// <U| Q (x) P |U> on the Choi state (1 (x) U)|EPR>, i.e. tr(Q^T U^dag P U) / d.
std::complex<double> dense_expect(const DenseMatrix &u, const PauliString &p, const PauliString &q);
std::complex<double> dense_expect(const DopedCircuit &c, const PauliString &p, const PauliString &q);

/// Four-point OTOC averaged over P(A) and P(D).
double dense_otoc(const DenseMatrix &u, const Partition &part);
/// Same average with P_D restricted to the listed group elements.
double dense_truncated_otoc(const DenseMatrix &u, const Partition &part, const std::vector<PauliString> &group);

/// The Pauli-average fidelity ratio evaluated with dense matrices.
double dense_fidelity_formula(const DenseMatrix &u, const DenseMatrix &v, const Partition &part);

/// Simulates the decoding protocol on 2n + 2|A| qubits and returns the
/// EPR fidelity between R and R'. Throws if the projection has zero weight.
double hp_fidelity_dense(const DenseMatrix &u, const DenseMatrix &v, const Partition &part);
double hp_fidelity_dense(const DopedCircuit &c, const CliffordTableau &v, const Partition &part);

/// |tr(V^dag U)|^2 / d^2.
double dense_gate_fidelity(const DenseMatrix &u, const DenseMatrix &v);

/// max |U^dag U - I|.
double unitarity_error(const DenseMatrix &u);

}  // namespace ccd

#endif
