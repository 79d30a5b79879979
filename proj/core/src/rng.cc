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

#include "ccdecode/rng.h"

#include <stdexcept>

namespace ccd {

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b) {
    return seed ^ mix64(mix64(a) ^ (b * 0xD6E8FEB86659FD93ULL + 0x632BE59BD9B4E019ULL));
}

bool random_bit(Rng &rng) {
    return rng() >> 63;
}

uint64_t random_below(Rng &rng, uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("random_below: bound must be positive.");
    }
    // Rejection sampling keeps the draw exactly uniform.
    uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    while (true) {
        uint64_t v = rng();
        if (v <= limit) {
            return v % bound;
        }
    }
}

PauliString random_pauli(size_t n, size_t lo, Rng &rng) {
    PauliString p(n);
    uint64_t pool = 0;
    int left = 0;
    for (size_t q = lo; q < n; q++) {
        if (left < 2) {
            pool = rng();
            left = 64;
        }
        p.vec.set_x(q, pool & 1);
        p.vec.set_z(q, (pool >> 1) & 1);
        pool >>= 2;
        left -= 2;
    }
    return p;
}

}  // namespace ccd
