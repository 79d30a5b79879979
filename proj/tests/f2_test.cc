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

#include <gtest/gtest.h>

#include "ccdecode/rng.h"

namespace ccd {
namespace {

F2Vec random_vec(size_t n, Rng &rng) {
    return random_pauli(n, 0, rng).vec;
}

TEST(F2Vec, BitsRoundTrip) {
    F2Vec v = F2Vec::from_bits("1001");
    EXPECT_TRUE(v.x(0));
    EXPECT_FALSE(v.z(0));
    EXPECT_FALSE(v.x(1));
    EXPECT_TRUE(v.z(1));
    EXPECT_EQ(v.bits(), "1001");
    EXPECT_THROW(F2Vec::from_bits("101"), std::invalid_argument);
    EXPECT_THROW(F2Vec::from_bits("10a1"), std::invalid_argument);
}

TEST(F2Vec, WideVectorsCrossWordBoundaries) {
    F2Vec v(130);
    v.set_x(129, true);
    v.set_z(64, true);
    EXPECT_EQ(v.support_size(), 2u);
    EXPECT_EQ(v.first_bit(), 129u);
    F2Vec w = v ^ v;
    EXPECT_TRUE(w.is_zero());
}

TEST(SymplecticForm, XAnticommutesWithY) {
    EXPECT_TRUE(symplectic_form(F2Vec::from_bits("10"), F2Vec::from_bits("11")));
}

TEST(SymplecticForm, XZCommutesWithZY) {
    EXPECT_FALSE(symplectic_form(F2Vec::from_bits("1001"), F2Vec::from_bits("0111")));
}

TEST(SymplecticForm, AlternatingAndBilinearExhaustive) {
    for (size_t n = 1; n <= 3; n++) {
        const uint64_t size = uint64_t{1} << (2 * n);
        std::vector<F2Vec> all;
        for (uint64_t i = 0; i < size; i++) {
            F2Vec v(n);
            for (size_t k = 0; k < 2 * n; k++) {
                v.set_bit(k, (i >> k) & 1);
            }
            all.push_back(v);
        }
        for (const auto &a : all) {
            EXPECT_FALSE(symplectic_form(a, a));
            for (const auto &b : all) {
                EXPECT_EQ(symplectic_form(a, b), symplectic_form(b, a));
            }
        }
        for (size_t i = 0; i < all.size(); i += 3) {
            for (size_t j = 0; j < all.size(); j += 5) {
                for (size_t k = 0; k < all.size(); k += 7) {
                    EXPECT_EQ(symplectic_form(all[i], all[j] ^ all[k]),
                              symplectic_form(all[i], all[j]) != symplectic_form(all[i], all[k]));
                }
            }
        }
    }
}

TEST(SymplecticForm, BilinearRandomizedAtEightQubits) {
    Rng rng(11);
    for (int it = 0; it < 500; it++) {
        F2Vec a = random_vec(8, rng), b = random_vec(8, rng), c = random_vec(8, rng);
        EXPECT_EQ(symplectic_form(a, b ^ c), symplectic_form(a, b) != symplectic_form(a, c));
    }
}

TEST(SymplecticForm, LengthMismatchThrows) {
    EXPECT_THROW(symplectic_form(F2Vec(2), F2Vec(3)), std::invalid_argument);
}

TEST(SymplecticMatrix, IdentityIsSymplectic) {
    EXPECT_TRUE(SymplecticMatrix::identity(5).is_symplectic());
    SymplecticMatrix m = SymplecticMatrix::identity(2);
    m.rows[1] = m.rows[0];
    EXPECT_FALSE(m.is_symplectic());
}

TEST(F2Basis, InsertContainsDecompose) {
    Rng rng(3);
    F2Basis basis(6);
    std::vector<F2Vec> inserted;
    for (int i = 0; i < 5; i++) {
        F2Vec v = random_vec(6, rng);
        if (basis.insert(v)) {
            inserted.push_back(v);
        }
    }
    EXPECT_EQ(basis.rank(), inserted.size());
    F2Vec combo = inserted[0] ^ inserted[2];
    EXPECT_TRUE(basis.contains(combo));
    EXPECT_FALSE(basis.insert(combo));
    std::vector<size_t> idx;
    ASSERT_TRUE(basis.decompose(combo, &idx));
    F2Vec rebuilt(6);
    for (size_t i : idx) {
        rebuilt ^= inserted[i];
    }
    EXPECT_EQ(rebuilt, combo);
}

TEST(F2Rank, MatchesIndependentInsertions) {
    std::vector<F2Vec> vecs = {F2Vec::from_bits("1000"), F2Vec::from_bits("0100"), F2Vec::from_bits("1100")};
    EXPECT_EQ(f2_rank(vecs), 2u);
}

TEST(F2Intersection, SpansCommonSubspace) {
    std::vector<F2Vec> a = {F2Vec::from_bits("100000"), F2Vec::from_bits("010000"), F2Vec::from_bits("001100")};
    std::vector<F2Vec> b = {F2Vec::from_bits("110000"), F2Vec::from_bits("000011")};
    std::vector<F2Vec> inter = f2_intersection(a, b);
    ASSERT_EQ(inter.size(), 1u);
    EXPECT_EQ(inter[0], F2Vec::from_bits("110000"));
}

TEST(F2Intersection, RandomizedDimensionFormula) {
    Rng rng(5);
    for (int it = 0; it < 50; it++) {
        std::vector<F2Vec> a, b;
        for (int i = 0; i < 5; i++) {
            a.push_back(random_vec(4, rng));
            b.push_back(random_vec(4, rng));
        }
        std::vector<F2Vec> both = a;
        both.insert(both.end(), b.begin(), b.end());
        std::vector<F2Vec> inter = f2_intersection(a, b);
        EXPECT_EQ(f2_rank(inter), inter.size());
        EXPECT_EQ(inter.size() + f2_rank(both), f2_rank(a) + f2_rank(b));
        F2Basis ba(4), bb(4);
        for (const auto &v : a) {
            ba.insert(v);
        }
        for (const auto &v : b) {
            bb.insert(v);
        }
        for (const auto &v : inter) {
            EXPECT_TRUE(ba.contains(v));
            EXPECT_TRUE(bb.contains(v));
        }
    }
}

}  // namespace
}  // namespace ccd
