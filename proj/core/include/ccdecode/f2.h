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

#ifndef _CCDECODE_F2_H
#define _CCDECODE_F2_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ccd {

/// A vector in F2^{2n} with the logical interleaved order (x_1, z_1, ..., x_n, z_n).
///
/// Physically the x bits and z bits live in separate word arrays so that the
/// symplectic form and Pauli products reduce to a few word operations.
struct F2Vec {
    size_t num_qubits = 0;
    std::vector<uint64_t> xs;
    std::vector<uint64_t> zs;

    F2Vec() = default;
    explicit F2Vec(size_t n);

    /// Parses 2n characters '0'/'1' in interleaved order.
    static F2Vec from_bits(std::string_view bits);
    /// Renders 2n characters '0'/'1' in interleaved order.
    std::string bits() const;

    size_t num_words() const {
        return xs.size();
    }
    size_t num_bits() const {
        return 2 * num_qubits;
    }

    bool x(size_t q) const {
        return (xs[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs[q >> 6] >> (q & 63)) & 1;
    }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);
    void flip_x(size_t q) {
        xs[q >> 6] ^= uint64_t{1} << (q & 63);
    }
    void flip_z(size_t q) {
        zs[q >> 6] ^= uint64_t{1} << (q & 63);
    }

    /// Interleaved bit access: even k is x_{k/2}, odd k is z_{k/2}.
    bool bit(size_t k) const {
        return (k & 1) ? z(k >> 1) : x(k >> 1);
    }
    void set_bit(size_t k, bool v);

    bool is_zero() const;
    /// Number of qubits where the vector is not (0, 0).
    size_t support_size() const;
    /// Index of the first interleaved bit that is set, or num_bits() if zero.
    size_t first_bit() const;

    F2Vec &operator^=(const F2Vec &other);
    F2Vec operator^(const F2Vec &other) const;
    bool operator==(const F2Vec &other) const;
    bool operator!=(const F2Vec &other) const {
        return !(*this == other);
    }
    bool operator<(const F2Vec &other) const;

    size_t hash() const;
};

/// Returns a^T Omega b mod 2, with Omega the per-qubit [[0,1],[1,0]] block.
bool symplectic_form(const F2Vec &a, const F2Vec &b);

/// Rows are images of the interleaved basis vectors; v maps to sum_k v_k rows[k].
struct SymplecticMatrix {
    size_t num_qubits = 0;
    std::vector<F2Vec> rows;

    SymplecticMatrix() = default;
    explicit SymplecticMatrix(size_t n);
    static SymplecticMatrix identity(size_t n);

    /// True iff M Omega M^T = Omega.
    bool is_symplectic() const;
    F2Vec apply(const F2Vec &v) const;
    bool operator==(const SymplecticMatrix &other) const {
        return rows == other.rows;
    }
};

/// Incrementally maintained row-echelon basis of a subspace of F2^{2n}.
///
/// Each stored vector remembers which inserted vectors it is a combination of,
/// so membership queries can also report a decomposition.
class F2Basis {
   public:
    explicit F2Basis(size_t n);

    size_t rank() const {
        return pivots_.size();
    }
    size_t num_inserted() const {
        return num_inserted_;
    }

    /// Inserts v. Returns false (and stores nothing) if v is already in the span.
    bool insert(const F2Vec &v);
    bool contains(const F2Vec &v) const;
    /// If v is in the span, writes the indices (insertion order, counting only
    /// successful insertions) of a subset summing to v and returns true.
    bool decompose(const F2Vec &v, std::vector<size_t> *out) const;

   private:
    struct Row {
        F2Vec vec;
        std::vector<uint64_t> combo;
    };
    F2Vec reduce(F2Vec v, std::vector<uint64_t> *combo) const;

    size_t n_;
    size_t num_inserted_ = 0;
    std::vector<size_t> pivots_;
    std::vector<Row> rows_;
};

/// Rank over F2 of a list of vectors.
size_t f2_rank(const std::vector<F2Vec> &vecs);

/// A basis of the intersection of span(a) and span(b).
std::vector<F2Vec> f2_intersection(const std::vector<F2Vec> &a, const std::vector<F2Vec> &b);

}  // namespace ccd

#endif
