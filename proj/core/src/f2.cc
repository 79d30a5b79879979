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

#include "ccdecode/f2.h"

#include <bit>
#include <stdexcept>

namespace ccd {

namespace {

size_t words_for(size_t n) {
    return (n + 63) / 64;
}

void require_same(const F2Vec &a, const F2Vec &b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("F2 vectors have different lengths.");
    }
}

}  // namespace

F2Vec::F2Vec(size_t n) : num_qubits(n), xs(words_for(n), 0), zs(words_for(n), 0) {
}

F2Vec F2Vec::from_bits(std::string_view bits) {
    if (bits.size() % 2 != 0) {
        throw std::invalid_argument("Bitstring length must be even, got " + std::to_string(bits.size()) + ".");
    }
    F2Vec v(bits.size() / 2);
    for (size_t k = 0; k < bits.size(); k++) {
        char c = bits[k];
        if (c != '0' && c != '1') {
            throw std::invalid_argument(std::string("Bad bit character '") + c + "'.");
        }
        v.set_bit(k, c == '1');
    }
    return v;
}

std::string F2Vec::bits() const {
    std::string out;
    out.reserve(num_bits());
    for (size_t q = 0; q < num_qubits; q++) {
        out.push_back(x(q) ? '1' : '0');
        out.push_back(z(q) ? '1' : '0');
    }
    return out;
}

void F2Vec::set_x(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    xs[q >> 6] = v ? (xs[q >> 6] | m) : (xs[q >> 6] & ~m);
}

void F2Vec::set_z(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    zs[q >> 6] = v ? (zs[q >> 6] | m) : (zs[q >> 6] & ~m);
}

void F2Vec::set_bit(size_t k, bool v) {
    if (k & 1) {
        set_z(k >> 1, v);
    } else {
        set_x(k >> 1, v);
    }
}

bool F2Vec::is_zero() const {
    for (size_t w = 0; w < xs.size(); w++) {
        if (xs[w] | zs[w]) {
            return false;
        }
    }
    return true;
}

size_t F2Vec::support_size() const {
    size_t total = 0;
    for (size_t w = 0; w < xs.size(); w++) {
        total += std::popcount(xs[w] | zs[w]);
    }
    return total;
}

size_t F2Vec::first_bit() const {
    for (size_t w = 0; w < xs.size(); w++) {
        uint64_t m = xs[w] | zs[w];
        if (m) {
            size_t q = w * 64 + std::countr_zero(m);
            return x(q) ? 2 * q : 2 * q + 1;
        }
    }
    return num_bits();
}

F2Vec &F2Vec::operator^=(const F2Vec &other) {
    require_same(*this, other);
    for (size_t w = 0; w < xs.size(); w++) {
        xs[w] ^= other.xs[w];
        zs[w] ^= other.zs[w];
    }
    return *this;
}

F2Vec F2Vec::operator^(const F2Vec &other) const {
    F2Vec r = *this;
    r ^= other;
    return r;
}

bool F2Vec::operator==(const F2Vec &other) const {
    return num_qubits == other.num_qubits && xs == other.xs && zs == other.zs;
}

bool F2Vec::operator<(const F2Vec &other) const {
    if (num_qubits != other.num_qubits) {
        return num_qubits < other.num_qubits;
    }
    if (xs != other.xs) {
        return xs < other.xs;
    }
    return zs < other.zs;
}

size_t F2Vec::hash() const {
    uint64_t h = 0x9E3779B97F4A7C15ULL ^ num_qubits;
    for (size_t w = 0; w < xs.size(); w++) {
        h ^= xs[w] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h ^= zs[w] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return (size_t)h;
}

bool symplectic_form(const F2Vec &a, const F2Vec &b) {
    require_same(a, b);
    uint64_t acc = 0;
    for (size_t w = 0; w < a.xs.size(); w++) {
        acc ^= (a.xs[w] & b.zs[w]) ^ (a.zs[w] & b.xs[w]);
    }
    return std::popcount(acc) & 1;
}

SymplecticMatrix::SymplecticMatrix(size_t n) : num_qubits(n), rows(2 * n, F2Vec(n)) {
}

SymplecticMatrix SymplecticMatrix::identity(size_t n) {
    SymplecticMatrix m(n);
    for (size_t k = 0; k < 2 * n; k++) {
        m.rows[k].set_bit(k, true);
    }
    return m;
}

bool SymplecticMatrix::is_symplectic() const {
    if (rows.size() != 2 * num_qubits) {
        return false;
    }
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].num_qubits != num_qubits) {
            return false;
        }
        for (size_t j = i + 1; j < rows.size(); j++) {
            bool expected = (i / 2 == j / 2);
            if (symplectic_form(rows[i], rows[j]) != expected) {
                return false;
            }
        }
    }
    return true;
}

F2Vec SymplecticMatrix::apply(const F2Vec &v) const {
    if (v.num_qubits != num_qubits) {
        throw std::invalid_argument("Vector size does not match symplectic matrix.");
    }
    F2Vec out(num_qubits);
    for (size_t k = 0; k < 2 * num_qubits; k++) {
        if (v.bit(k)) {
            out ^= rows[k];
        }
    }
    return out;
}

F2Basis::F2Basis(size_t n) : n_(n) {
}

F2Vec F2Basis::reduce(F2Vec v, std::vector<uint64_t> *combo) const {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (v.bit(pivots_[i])) {
            v ^= rows_[i].vec;
            if (combo != nullptr) {
                for (size_t w = 0; w < combo->size(); w++) {
                    (*combo)[w] ^= rows_[i].combo[w];
                }
            }
        }
    }
    return v;
}

bool F2Basis::insert(const F2Vec &v) {
    if (v.num_qubits != n_) {
        throw std::invalid_argument("Vector size does not match basis.");
    }
    size_t k = rows_.size();
    std::vector<uint64_t> combo(k / 64 + 1, 0);
    F2Vec r = reduce(v, &combo);
    if (r.is_zero()) {
        return false;
    }
    combo[k >> 6] ^= uint64_t{1} << (k & 63);
    for (auto &row : rows_) {
        row.combo.resize(combo.size(), 0);
    }
    pivots_.push_back(r.first_bit());
    rows_.push_back({std::move(r), std::move(combo)});
    num_inserted_++;
    return true;
}

bool F2Basis::contains(const F2Vec &v) const {
    return reduce(v, nullptr).is_zero();
}

bool F2Basis::decompose(const F2Vec &v, std::vector<size_t> *out) const {
    std::vector<uint64_t> combo(rows_.size() / 64 + 1, 0);
    if (!reduce(v, &combo).is_zero()) {
        return false;
    }
    out->clear();
    for (size_t k = 0; k < rows_.size(); k++) {
        if ((combo[k >> 6] >> (k & 63)) & 1) {
            out->push_back(k);
        }
    }
    return true;
}

size_t f2_rank(const std::vector<F2Vec> &vecs) {
    if (vecs.empty()) {
        return 0;
    }
    F2Basis basis(vecs[0].num_qubits);
    for (const auto &v : vecs) {
        basis.insert(v);
    }
    return basis.rank();
}

std::vector<F2Vec> f2_intersection(const std::vector<F2Vec> &a, const std::vector<F2Vec> &b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    size_t n = a[0].num_qubits;
    // Insert a basis of span(a), remembering which rows came from a. Every
    // vector of b that is dependent on what came before yields a relation
    // whose a-part lies in the intersection.
    F2Basis basis(n);
    std::vector<bool> from_a;
    std::vector<F2Vec> stored;
    for (const auto &v : a) {
        if (basis.insert(v)) {
            from_a.push_back(true);
            stored.push_back(v);
        }
    }
    F2Basis result_basis(n);
    std::vector<F2Vec> result;
    std::vector<size_t> combo;
    for (const auto &v : b) {
        if (basis.decompose(v, &combo)) {
            F2Vec part(n);
            for (size_t k : combo) {
                if (from_a[k]) {
                    part ^= stored[k];
                }
            }
            if (result_basis.insert(part)) {
                result.push_back(part);
            }
        } else {
            basis.insert(v);
            from_a.push_back(false);
            stored.push_back(v);
        }
    }
    return result;
}

}  // namespace ccd
