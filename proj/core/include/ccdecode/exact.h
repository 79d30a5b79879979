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

#ifndef _CCDECODE_EXACT_H
#define _CCDECODE_EXACT_H

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ccd {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// An element (a + b sqrt(2)) / 2^e of Z[1/sqrt(2)], kept with e minimal
/// (a and b not both even when e > 0). A monomial m / sqrt(2)^k has b = 0 for
/// even k and a = 0 for odd k. Arithmetic is overflow-checked and throws
/// std::overflow_error rather than wrapping.
struct Coeff {
    int64_t a = 0;
    int64_t b = 0;
    uint32_t e = 0;

    Coeff() = default;
    Coeff(int64_t a_, int64_t b_, uint32_t e_) : a(a_), b(b_), e(e_) {
        normalize();
    }
    /// m / sqrt(2)^k.
    static Coeff monomial(int64_t m, uint32_t k);
    static Coeff one() {
        return Coeff(1, 0, 0);
    }

    void normalize();
    bool is_zero() const {
        return a == 0 && b == 0;
    }
    /// True iff the value is +1 or -1.
    bool is_unit() const {
        return b == 0 && e == 0 && (a == 1 || a == -1);
    }
    double to_double() const;
    /// "m/√2^k" for monomials, "(a+b√2)/2^e" otherwise.
    std::string str() const;

    Coeff operator-() const;
    Coeff operator+(const Coeff &o) const;
    Coeff operator-(const Coeff &o) const {
        return *this + (-o);
    }
    Coeff operator*(const Coeff &o) const;
    Coeff div_sqrt2() const;
    bool operator==(const Coeff &o) const {
        return a == o.a && b == o.b && e == o.e;
    }
    bool operator!=(const Coeff &o) const {
        return !(*this == o);
    }
};

/// Exact a + b sqrt(2) with rational a, b.
class RootTwo {
   public:
    RootTwo() = default;
    RootTwo(BigRational a, BigRational b = 0) : a_(std::move(a)), b_(std::move(b)) {
    }
    static RootTwo from_coeff(const Coeff &c);
    static RootTwo from_int(int64_t v) {
        return RootTwo(BigRational(v));
    }

    const BigRational &rational_part() const {
        return a_;
    }
    const BigRational &sqrt2_part() const {
        return b_;
    }
    bool is_zero() const {
        return a_ == 0 && b_ == 0;
    }
    int sign() const;
    double to_double() const;
    /// Renders dyadic parts as "m/2^a" and the irrational part as
    /// "m/(2^a·√2)"; other denominators as "p/q".
    std::string str() const;

    RootTwo operator+(const RootTwo &o) const;
    RootTwo operator-(const RootTwo &o) const;
    RootTwo operator-() const;
    RootTwo operator*(const RootTwo &o) const;
    RootTwo operator/(const RootTwo &o) const;
    bool operator==(const RootTwo &o) const {
        return a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const RootTwo &o) const {
        return !(*this == o);
    }
    bool operator<(const RootTwo &o) const {
        return (*this - o).sign() < 0;
    }
    bool operator<=(const RootTwo &o) const {
        return (*this - o).sign() <= 0;
    }

   private:
    BigRational a_;
    BigRational b_;
};

/// Accumulates sums of coefficients and coefficient products exactly.
class RootTwoSum {
   public:
    void add(const Coeff &c);
    void add(const Coeff &c, int sign) {
        add(sign < 0 ? -c : c);
    }
    void add_product(const Coeff &a, const Coeff &b, int sign = 1);
    RootTwo value() const;

   private:
    // Value = (even_ + odd_ * sqrt(2)) / 2^exp_.
    void rescale(uint32_t e);
    void add_raw(BigInt a, BigInt b, uint32_t e);
    BigInt even_ = 0;
    BigInt odd_ = 0;
    uint32_t exp_ = 0;
};

std::ostream &operator<<(std::ostream &out, const Coeff &c);
std::ostream &operator<<(std::ostream &out, const RootTwo &v);

}  // namespace ccd

#endif
