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

#ifndef _CCDECODE_PARTITION_H
#define _CCDECODE_PARTITION_H

#include <cstddef>
#include <stdexcept>

namespace ccd {

/// Input split A B and output split C D of n qubits. A is the first |A|
/// qubits and D the last |D| qubits.
struct Partition {
    size_t n = 0;
    size_t a = 0;
    size_t d = 0;

    Partition() = default;
    Partition(size_t n_, size_t a_, size_t d_) : n(n_), a(a_), d(d_) {
        if (n == 0 || a > n || d > n) {
            throw std::invalid_argument("Partition sizes must satisfy |A|, |D| <= n.");
        }
    }
    size_t b() const {
        return n - a;
    }
    size_t c() const {
        return n - d;
    }
    /// First qubit of D.
    size_t d_offset() const {
        return n - d;
    }
};

}  // namespace ccd

#endif
