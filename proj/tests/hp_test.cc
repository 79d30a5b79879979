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

#include "ccdecode/hp.h"

#include <gtest/gtest.h>

#include "ccdecode/cc.h"
#include "ccdecode/dense.h"

namespace ccd {
namespace {

std::vector<PauliString> learned_sources(const LearnResult &r) {
    std::vector<PauliString> out;
    for (const auto &g : r.generators) {
        out.push_back(g.source);
    }
    return out;
}

TEST(EnumerateGroup, SizeIsTwoToTheRank) {
    std::vector<PauliString> gens = {PauliString::from_text("XI"), PauliString::from_text("IZ"),
                                     PauliString::from_text("XZ")};
    EXPECT_EQ(enumerate_group(gens).size(), 4u);
    EXPECT_THROW(enumerate_group({}), std::invalid_argument);
}

TEST(Otoc, IdentityCircuitHasUnitOtoc) {
    DopedCircuit c(4, {});
    Partition part(4, 1, 2);
    EXPECT_EQ(four_point_otoc(c, part), RootTwo::from_int(1));
    EXPECT_EQ(preserved_subgroup(c, part).size(), 16u);
}

TEST(Otoc, ScramblerTargetValue) {
    Partition part(8, 1, 4);
    // 1/4 + 1/256 - 1/1024.
    EXPECT_EQ(scrambler_otoc_value(part), RootTwo(BigRational(259, 1024)));
}

TEST(Otoc, MatchesDense) {
    Rng rng(1);
    for (size_t t = 0; t <= 3; t++) {
        DopedCircuit c = make_scrambler(5, t, rng);
        Partition part(5, 1, 2);
        EXPECT_NEAR(four_point_otoc(c, part).to_double(), dense_otoc(dense_unitary(c), part), 1e-10);
    }
}

TEST(Otoc, TruncatedEqualsFullForCliffords) {
    Rng rng(2);
    DopedCircuit c = make_scrambler(6, 0, rng);
    Partition part(6, 1, 3);
    EXPECT_EQ(truncated_otoc(c, part, preserved_subgroup(c, part)), four_point_otoc(c, part));
    EXPECT_THROW(truncated_otoc(c, part, {PauliString::from_text("XIIIII")}), std::invalid_argument);
}

TEST(Otoc, RandomCliffordsAreUsuallyScramblers) {
    Rng rng(3);
    Partition part(8, 1, 4);
    int hits = 0;
    for (int i = 0; i < 10; i++) {
        hits += is_scrambler(make_scrambler(8, 0, rng), part);
    }
    EXPECT_GE(hits, 8);
    EXPECT_FALSE(is_scrambler(DopedCircuit(8, {}), part));
}

TEST(Fidelity, CliffordWithExactDecoderMatchesOtoc) {
    Rng rng(4);
    DopedCircuit c = make_scrambler(6, 0, rng);
    CliffordTableau u = CliffordTableau::from_gates(6, c.gates());
    Partition part(6, 1, 3);
    EXPECT_EQ(fidelity(c, u, part), RootTwo::from_int(1) / (RootTwo::from_int(4) * four_point_otoc(c, part)));
    HPReport rep = hp_report(c, u, part, preserved_subgroup(c, part));
    EXPECT_TRUE(rep.r.is_zero());
    EXPECT_TRUE(rep.r_prime.is_zero());
    EXPECT_TRUE(rep.success);
}

TEST(Fidelity, CorruptedDecoderBreaksThePartsIdentity) {
    Rng rng(5);
    DopedCircuit c = make_scrambler(6, 0, rng);
    CliffordTableau v = sample_random_clifford(6, rng);
    Partition part(6, 1, 3);
    // The group covers all of D, so R = R' = 0, but V disagrees with U on it.
    HPReport rep = hp_report(c, v, part, preserved_subgroup(c, part));
    EXPECT_TRUE(rep.success);
    EXPECT_NE(rep.fidelity, rep.fidelity_from_parts);
    EXPECT_LT(rep.fidelity.to_double(), rep.fidelity_from_parts.to_double());
}

TEST(Fidelity, MatchesDenseProtocol) {
    Rng rng(6);
    for (size_t t = 0; t <= 4; t++) {
        DopedCircuit c = make_scrambler(5, t, rng);
        Partition part(5, 1, 2);
        CCParams params;
        params.m = part.c();
        LearnResult r = learn(c, params, rng);
        double exact = fidelity(c, r.v, part).to_double();
        EXPECT_NEAR(exact, hp_fidelity_dense(c, r.v, part), 1e-9) << t;
        EXPECT_NEAR(exact, dense_fidelity_formula(dense_unitary(c), dense_unitary(r.v), part), 1e-9);
    }
}

TEST(Fidelity, SelfConsistentWithLearnedGroup) {
    for (size_t t = 0; t <= 6; t++) {
        Rng rng(50 + t);
        DopedCircuit c = make_scrambler(8, t, rng);
        Partition part(8, 1, 4);
        CCParams params;
        params.m = part.c();
        LearnResult r = learn(c, params, rng);
        HPReport rep = hp_report(c, r.v, part, learned_sources(r));
        EXPECT_EQ(rep.fidelity, rep.fidelity_from_parts) << t;
        EXPECT_GE(rep.true_gd_size, rep.gd_size);
        if (rep.success) {
            EXPECT_EQ(rep.fidelity * (RootTwo::from_int(4) * rep.omega_gd), RootTwo::from_int(1));
        }
    }
}

TEST(Fidelity, GateFidelityMatchesDense) {
    Rng rng(7);
    for (size_t t = 0; t <= 3; t++) {
        DopedCircuit c = make_scrambler(4, t, rng);
        LearnResult r = learn(c, {}, rng);
        RootTwo g = gate_fidelity(c, r.v);
        EXPECT_NEAR(g.to_double(), dense_gate_fidelity(dense_unitary(c), dense_unitary(r.v)), 1e-10);
        if (t > 0) {
            EXPECT_LT(g.to_double(), 1.0);
        } else {
            EXPECT_EQ(g, RootTwo::from_int(1));
        }
    }
}

TEST(Report, TextContainsFields) {
    Rng rng(9);
    DopedCircuit c = make_scrambler(4, 1, rng);
    Partition part(4, 1, 2);
    HPReport rep = hp_report(c, CliffordTableau(4), part, {});
    std::string s = rep.str();
    for (const char *key : {"fidelity=", "omega_gd=", "R=", "Rprime=", "gd_size=", "success="}) {
        EXPECT_NE(s.find(key), std::string::npos) << key;
    }
}

}  // namespace
}  // namespace ccd
