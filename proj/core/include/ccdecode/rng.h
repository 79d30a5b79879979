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

#ifndef _CCDECODE_RNG_H
#define _CCDECODE_RNG_H

#include <cstdint>
#include <random>

#include "ccdecode/pauli.h"

namespace ccd {

/// All randomized operations take this engine explicitly. Only raw engine
/// output is consumed by the library's samplers, so streams are reproducible
/// across standard library implementations.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
uint64_t mix64(uint64_t x);

/// Child seed for an independent stream labelled by (a, b).
uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b = 0);

/// Uniform random bit.
bool random_bit(Rng &rng);

/// Uniform integer in [0, bound).
uint64_t random_below(Rng &rng, uint64_t bound);

/// Uniform Pauli string (phase 0) supported on qubits [lo, n).
PauliString random_pauli(size_t n, size_t lo, Rng &rng);

}  // namespace ccd

#endif
