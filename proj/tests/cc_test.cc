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

#include "ccdecode/cc.h"

#include <gtest/gtest.h>

#include <cmath>

namespace ccd {
namespace {

// The 24 single-qubit Cliffords as 2x2 matrices, modulo global phase.
std::vector<DenseMatrix> single_qubit_cliffords() {
    std::vector<DenseMatrix> out;
    std::vector<GateList> frontier = {{}};
    auto same_up_to_phase = [](const DenseMatrix &a, const DenseMatrix &b) {
        return std::abs(std::abs((a.adjoint() * b).trace()) - 2.0) < 1e-9;
    };
    while (!frontier.empty() && out.size() < 24) {
        std::vector<GateList> next;
        for (const GateList &g : frontier) {
            DenseMatrix u = dense_unitary(DopedCircuit(1, g));
            bool seen = false;
            for (const auto &v : out) {
                seen = seen || same_up_to_phase(u, v);
            }
            if (seen) {
                continue;
            }
            out.push_back(u);
            for (Gate extra : {Gate::h(0), Gate::s(0)}) {
                GateList longer = g;
                longer.push_back(extra);
                next.push_back(longer);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

void expect_generators_hold(const LearnResult &r, const DopedCircuit &c) {
    for (const auto &g : r.generators) {
        auto img = check_preserved(g.source, c);
        ASSERT_TRUE(img) << g.source.str();
        EXPECT_EQ(img->first.vec, g.image.vec);
        EXPECT_EQ(img->second, g.sign);
        for (size_t q = 0; q < r.m; q++) {
            EXPECT_FALSE(g.source.vec.x(q) || g.source.vec.z(q));
        }
        // The decoder reproduces every learned image with its sign.
        PauliString via_v = r.v.conjugate(g.source);
        EXPECT_EQ(via_v.vec, g.image.vec);
        EXPECT_EQ(via_v.sign(), g.sign);
    }
}

TEST(Learn, CliffordCircuitIsLearnedExactly) {
    for (size_t n : {4u, 8u}) {
        for (uint64_t seed = 0; seed < 10; seed++) {
            Rng rng(seed);
            DopedCircuit c = make_scrambler(n, 0, rng);
            CliffordTableau u = CliffordTableau::from_gates(n, c.gates());
            LearnResult r = learn(c, {}, rng);
            EXPECT_EQ(r.generators.size(), 2 * n);
            EXPECT_EQ(r.num_pairs(), n);
            EXPECT_EQ(r.v, u);
        }
    }
}

TEST(Learn, GeneratorCountAndInvariants) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        Rng rng(100 + seed);
        const size_t n = 6, m = 2, t = 2;
        DopedCircuit c = make_scrambler(n, t, rng);
        CCParams params;
        params.m = m;
        LearnResult r = learn(c, params, rng);
        EXPECT_GE(r.generators.size(), 2 * (n - m) - t);
        EXPECT_EQ(2 * r.tau.num_pairs + r.tau.num_unpaired, r.generators.size());
        expect_generators_hold(r, c);
        EXPECT_GT(r.stats.sampling_steps, 0u);
        EXPECT_GT(r.stats.oracle_queries, 0u);
    }
}

TEST(Learn, FullGroupAtFourQubits) {
    Rng rng(7);
    DopedCircuit c = make_scrambler(4, 0, rng);
    LearnResult r = learn(c, {}, rng);
    // 2n independent generators span all 4^n Paulis.
    EXPECT_EQ(r.generators.size(), 8u);
}

TEST(Learn, TextRoundTrip) {
    Rng rng(8);
    DopedCircuit c = make_scrambler(5, 2, rng);
    CCParams params;
    params.m = 1;
    LearnResult r = learn(c, params, rng);
    LearnResult back = LearnResult::from_text(r.str());
    EXPECT_EQ(back.num_qubits, 5u);
    EXPECT_EQ(back.m, 1u);
    EXPECT_EQ(back.v, r.v);
    EXPECT_EQ(back.dhat, r.dhat);
    ASSERT_EQ(back.generators.size(), r.generators.size());
    for (size_t i = 0; i < r.generators.size(); i++) {
        EXPECT_EQ(back.generators[i].source, r.generators[i].source);
        EXPECT_EQ(back.generators[i].image, r.generators[i].image);
        EXPECT_EQ(back.generators[i].sign, r.generators[i].sign);
    }
    EXPECT_EQ(back.stats.sampling_steps, r.stats.sampling_steps);
    EXPECT_THROW(LearnResult::from_text("garbage"), std::invalid_argument);
}

TEST(Learn, ShotsOracleAgreesWithExact) {
    Rng rng(9);
    DopedCircuit c = make_scrambler(5, 1, rng);
    CCParams params;
    params.oracle.mode = OracleMode::Shots;
    params.oracle.shots = 20;
    LearnResult r = learn(c, params, rng);
    expect_generators_hold(r, c);
    EXPECT_GE(r.generators.size(), 2 * 5 - 1u);
}

TEST(Decompose, CliffordHasFullIdentityBlock) {
    Rng rng(10);
    DopedCircuit c = make_scrambler(6, 0, rng);
    DecomposeResult d = decompose(c, rng);
    EXPECT_EQ(d.s, 6u);
    EXPECT_TRUE(identity_block_holds(d.residual, d.s));
}

TEST(Decompose, IdentityBlockAtEightQubits) {
    for (uint64_t seed = 0; seed < 5; seed++) {
        Rng rng(20 + seed);
        DopedCircuit c = make_scrambler(8, 4, rng);
        DecomposeResult d = decompose(c, rng);
        EXPECT_GE(d.s, 4u);
        EXPECT_TRUE(identity_block_holds(d.residual, d.s));
        DenseMatrix u = residual_reconstruct(c, d.u0, d.u0_prime, d.s);
        EXPECT_LT(unitarity_error(u), 1e-9);
    }
}

TEST(Decompose, ResidualRecoversReconstructedCircuit) {
    Rng rng(11);
    for (int i = 0; i < 5; i++) {
        DopedCircuit c = make_scrambler(5, 2, rng);
        DecomposeResult d = decompose(c, rng);
        DenseMatrix r = residual_reconstruct(c, d.u0, d.u0_prime, d.s);
        // U = u0 (I_s (x) r) u0'.
        const Eigen::Index lo = (Eigen::Index)1 << d.s;
        DenseMatrix block = DenseMatrix::Zero(r.rows() * lo, r.cols() * lo);
        for (Eigen::Index i = 0; i < block.rows(); i++) {
            for (Eigen::Index j = 0; j < block.cols(); j++) {
                if (i % lo == j % lo) {
                    block(i, j) = r(i / lo, j / lo);
                }
            }
        }
        DenseMatrix rebuilt = dense_unitary(d.u0) * block * dense_unitary(d.u0_prime);
        DenseMatrix u = dense_unitary(c);
        EXPECT_NEAR(std::abs((rebuilt.adjoint() * u).trace()), (double)u.rows(), 1e-8);
    }
}

TEST(Decompose, SingleTIsCliffordEquivalentToT) {
    const std::vector<DenseMatrix> cliffords = single_qubit_cliffords();
    ASSERT_EQ(cliffords.size(), 24u);
    DenseMatrix t = dense_unitary(DopedCircuit(1, {Gate::t(0)}));
    for (uint64_t seed = 0; seed < 5; seed++) {
        Rng rng(30 + seed);
        DopedCircuit c = make_scrambler(2, 1, rng);
        DecomposeResult d = decompose(c, rng);
        ASSERT_EQ(d.s, 1u);
        DenseMatrix r = residual_reconstruct(c, d.u0, d.u0_prime, d.s);
        bool found = false;
        for (const auto &a : cliffords) {
            for (const auto &b : cliffords) {
                found = found || std::abs(std::abs((t.adjoint() * a * r * b).trace()) - 2.0) < 1e-9;
            }
        }
        EXPECT_TRUE(found);
    }
}

TEST(CompressState, SixQubitsTwoTGates) {
    for (uint64_t seed = 0; seed < 5; seed++) {
        Rng rng(40 + seed);
        DopedCircuit c = make_scrambler(6, 2, rng);
        CompressResult r = compress_state(c, rng);
        EXPECT_GE(r.s, 4u);
        ASSERT_EQ(r.phi.size(), (Eigen::Index)1 << (6 - r.s));
        DenseVector full = DenseVector::Zero(64);
        for (Eigen::Index i = 0; i < r.phi.size(); i++) {
            full(i << r.s) = r.phi(i);
        }
        DenseVector rebuilt = dense_unitary(r.dtilde) * full;
        DenseVector target = dense_unitary(c).col(0);
        EXPECT_NEAR(std::abs(rebuilt.dot(target)), 1.0, 1e-9);
    }
}

TEST(Budget, GrowsWithTCount) {
    EXPECT_LT(default_budget(8, 0), default_budget(8, 4));
}

}  // namespace
}  // namespace ccd
