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

#include "ccdecode/exact.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace ccd {
namespace {

TEST(Coeff, MonomialNormalForm) {
    Coeff c = Coeff::monomial(1, 1);
    EXPECT_EQ(c.a, 0);
    EXPECT_EQ(c.b, 1);
    EXPECT_EQ(c.e, 1);
    EXPECT_NEAR(c.to_double(), M_SQRT1_2, 1e-15);
    EXPECT_EQ(Coeff::monomial(4, 2), Coeff(2, 0, 0));
    EXPECT_EQ(Coeff::monomial(3, 4).str(), "3/√2^4");
    EXPECT_EQ(Coeff::monomial(-1, 3).str(), "-1/√2^3");
}

TEST(Coeff, DivSqrt2MatchesMonomials) {
    Coeff c = Coeff::one();
    for (uint32_t k = 1; k <= 12; k++) {
        c = c.div_sqrt2();
        EXPECT_EQ(c, Coeff::monomial(1, k)) << k;
    }
}

TEST(Coeff, SumsLeaveTheMonomialForm) {
    // 1/2 + 1/(2 sqrt 2) has no m / sqrt(2)^k form.
    Coeff s = Coeff::monomial(1, 2) + Coeff::monomial(1, 3);
    EXPECT_NEAR(s.to_double(), 0.5 + 0.5 * M_SQRT1_2, 1e-15);
    EXPECT_EQ(s.str(), "(2+1√2)/2^2");
    EXPECT_TRUE((s - s).is_zero());
}

TEST(Coeff, ArithmeticMatchesDoubles) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> m(-9, 9), k(0, 8);
    for (int it = 0; it < 2000; it++) {
        Coeff a = Coeff::monomial(m(rng), k(rng)) + Coeff::monomial(m(rng), k(rng));
        Coeff b = Coeff::monomial(m(rng), k(rng)) - Coeff::monomial(m(rng), k(rng));
        EXPECT_NEAR((a + b).to_double(), a.to_double() + b.to_double(), 1e-12);
        EXPECT_NEAR((a * b).to_double(), a.to_double() * b.to_double(), 1e-12);
        EXPECT_NEAR(a.div_sqrt2().to_double(), a.to_double() * M_SQRT1_2, 1e-12);
        // Equality is structural because the representation is canonical.
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) - b, a);
    }
}

TEST(Coeff, UnitDetection) {
    EXPECT_TRUE(Coeff::one().is_unit());
    EXPECT_TRUE((-Coeff::one()).is_unit());
    EXPECT_FALSE(Coeff::monomial(1, 1).is_unit());
    EXPECT_TRUE((Coeff::monomial(1, 1) * Coeff::monomial(1, 1) * Coeff(2, 0, 0)).is_unit());
}

TEST(Coeff, OverflowThrows) {
    Coeff big(INT64_MAX, 0, 0);
    EXPECT_THROW(big + big, std::overflow_error);
    EXPECT_THROW(big * big, std::overflow_error);
}

TEST(RootTwo, FromCoeffAndSign) {
    RootTwo r = RootTwo::from_coeff(Coeff::monomial(1, 1));
    EXPECT_EQ(r.rational_part(), 0);
    EXPECT_EQ(r.sqrt2_part(), BigRational(1, 2));
    EXPECT_EQ(r.sign(), 1);
    // 1 - sqrt(2) < 0 and 3 - 2 sqrt(2) > 0.
    EXPECT_EQ(RootTwo(1, -1).sign(), -1);
    EXPECT_EQ(RootTwo(3, -2).sign(), 1);
    EXPECT_EQ(RootTwo().sign(), 0);
}

TEST(RootTwo, FieldOperations) {
    RootTwo a(BigRational(1, 3), BigRational(2, 5)), b(BigRational(-7, 2), BigRational(1, 4));
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_NEAR((a * b).to_double(), a.to_double() * b.to_double(), 1e-12);
    EXPECT_TRUE(b < a);
    EXPECT_THROW(a / RootTwo(), std::domain_error);
}

TEST(RootTwo, Rendering) {
    EXPECT_EQ(RootTwo(BigRational(3, 8)).str(), "3/2^3");
    EXPECT_EQ(RootTwo::from_coeff(Coeff::monomial(1, 3)).str(), "1/(2^1·√2)");
    EXPECT_EQ(RootTwo(BigRational(1, 3)).str(), "1/3");
}

TEST(RootTwoSum, AccumulatesProductsExactly) {
    RootTwoSum s;
    Coeff h = Coeff::monomial(1, 1);
    s.add_product(h, h);
    s.add_product(h, h);
    EXPECT_EQ(s.value(), RootTwo::from_int(1));
    s.add(Coeff::monomial(1, 5), -1);
    EXPECT_NEAR(s.value().to_double(), 1 - std::pow(M_SQRT1_2, 5), 1e-15);
}

TEST(RootTwoSum, LargeSumsStayExact) {
    RootTwoSum s;
    for (int i = 0; i < 4096; i++) {
        s.add(Coeff::monomial(1, 12));
    }
    EXPECT_EQ(s.value(), RootTwo::from_int(64));
}

}  // namespace
}  // namespace ccd
