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

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ccd {

namespace {

int64_t checked_shift(int64_t m, uint32_t s) {
    if (s >= 63) {
        if (m == 0) {
            return 0;
        }
        throw std::overflow_error("Coeff numerator overflow.");
    }
    int64_t limit = INT64_MAX >> s;
    if (m > limit || m < -limit) {
        throw std::overflow_error("Coeff numerator overflow.");
    }
    return m * (int64_t{1} << s);
}

// Power-of-two exponent of a positive integer, or -1 if it is not a power of two.
int power_of_two_exponent(const BigInt &v) {
    if (v <= 0) {
        return -1;
    }
    unsigned lsb = boost::multiprecision::lsb(v);
    if (boost::multiprecision::msb(v) != lsb) {
        return -1;
    }
    return (int)lsb;
}

std::string render_rational(const BigRational &r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    int e = power_of_two_exponent(den);
    std::ostringstream out;
    if (e >= 0) {
        out << num << "/2^" << e;
    } else {
        out << num << "/" << den;
    }
    return out.str();
}

std::string render_sqrt2_part(const BigRational &b) {
    // b sqrt(2) = (2b) / sqrt(2).
    BigRational twice = b * 2;
    BigInt num = boost::multiprecision::numerator(twice);
    BigInt den = boost::multiprecision::denominator(twice);
    int e = power_of_two_exponent(den);
    std::ostringstream out;
    if (e >= 0) {
        out << num << "/(2^" << e << "·√2)";
    } else {
        out << num << "/(" << den << "·√2)";
    }
    return out.str();
}

}  // namespace

Coeff Coeff::monomial(int64_t m, uint32_t k) {
    if (k & 1) {
        // m / sqrt(2)^k = m sqrt(2) / 2^{(k+1)/2}.
        return Coeff(0, m, (k + 1) / 2);
    }
    return Coeff(m, 0, k / 2);
}

void Coeff::normalize() {
    if (a == 0 && b == 0) {
        e = 0;
        return;
    }
    while (e > 0 && (a & 1) == 0 && (b & 1) == 0) {
        a /= 2;
        b /= 2;
        e--;
    }
}

double Coeff::to_double() const {
    return std::ldexp((double)a + (double)b * M_SQRT2, -(int)e);
}

std::string Coeff::str() const {
    if (b == 0) {
        if (e == 0) {
            return std::to_string(a);
        }
        return std::to_string(a) + "/√2^" + std::to_string(2 * e);
    }
    if (a == 0) {
        if (e == 0) {
            return std::to_string(2 * b) + "/√2^1";
        }
        return std::to_string(b) + "/√2^" + std::to_string(2 * e - 1);
    }
    return "(" + std::to_string(a) + (b < 0 ? "-" : "+") + std::to_string(b < 0 ? -b : b) + "√2)/2^" +
           std::to_string(e);
}

Coeff Coeff::operator-() const {
    if (a == INT64_MIN || b == INT64_MIN) {
        throw std::overflow_error("Coeff numerator overflow.");
    }
    Coeff r;
    r.a = -a;
    r.b = -b;
    r.e = e;
    return r;
}

Coeff Coeff::operator+(const Coeff &o) const {
    if (is_zero()) {
        return o;
    }
    if (o.is_zero()) {
        return *this;
    }
    uint32_t top = std::max(e, o.e);
    int64_t a1 = checked_shift(a, top - e), b1 = checked_shift(b, top - e);
    int64_t a2 = checked_shift(o.a, top - o.e), b2 = checked_shift(o.b, top - o.e);
    int64_t sa, sb;
    if (__builtin_add_overflow(a1, a2, &sa) || __builtin_add_overflow(b1, b2, &sb)) {
        throw std::overflow_error("Coeff numerator overflow.");
    }
    return Coeff(sa, sb, top);
}

Coeff Coeff::operator*(const Coeff &o) const {
    // (a1 + b1 r)(a2 + b2 r) = (a1 a2 + 2 b1 b2) + (a1 b2 + b1 a2) r.
    int64_t p1, p2, p3, p4, ra, rb;
    bool bad = __builtin_mul_overflow(a, o.a, &p1) || __builtin_mul_overflow(b, o.b, &p2) ||
               __builtin_mul_overflow(p2, 2, &p2) || __builtin_mul_overflow(a, o.b, &p3) ||
               __builtin_mul_overflow(b, o.a, &p4) || __builtin_add_overflow(p1, p2, &ra) ||
               __builtin_add_overflow(p3, p4, &rb);
    if (bad) {
        throw std::overflow_error("Coeff numerator overflow.");
    }
    return Coeff(ra, rb, e + o.e);
}

Coeff Coeff::div_sqrt2() const {
    // (a + b r) / r = (2 b + a r) / 2.
    return Coeff(checked_shift(b, 1), a, e + 1);
}

RootTwo RootTwo::from_coeff(const Coeff &c) {
    BigInt den = BigInt(1) << c.e;
    return RootTwo(BigRational(BigInt(c.a), den), BigRational(BigInt(c.b), den));
}

int RootTwo::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    // Opposite signs: compare a^2 with 2 b^2.
    BigRational a2 = a_ * a_, b2 = b_ * b_ * 2;
    return a2 > b2 ? sa : sb;
}

double RootTwo::to_double() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * M_SQRT2;
}

std::string RootTwo::str() const {
    if (b_ == 0) {
        return render_rational(a_);
    }
    if (a_ == 0) {
        return render_sqrt2_part(b_);
    }
    return render_rational(a_) + " + " + render_sqrt2_part(b_);
}

RootTwo RootTwo::operator+(const RootTwo &o) const {
    return RootTwo(a_ + o.a_, b_ + o.b_);
}

RootTwo RootTwo::operator-(const RootTwo &o) const {
    return RootTwo(a_ - o.a_, b_ - o.b_);
}

RootTwo RootTwo::operator-() const {
    return RootTwo(-a_, -b_);
}

RootTwo RootTwo::operator*(const RootTwo &o) const {
    return RootTwo(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

RootTwo RootTwo::operator/(const RootTwo &o) const {
    BigRational den = o.a_ * o.a_ - 2 * o.b_ * o.b_;
    if (den == 0) {
        throw std::domain_error("RootTwo division by zero.");
    }
    // (a + b r)(c - d r) / (c^2 - 2 d^2).
    return RootTwo((a_ * o.a_ - 2 * b_ * o.b_) / den, (b_ * o.a_ - a_ * o.b_) / den);
}

void RootTwoSum::rescale(uint32_t e) {
    if (e > exp_) {
        even_ <<= (e - exp_);
        odd_ <<= (e - exp_);
        exp_ = e;
    }
}

void RootTwoSum::add_raw(BigInt a, BigInt b, uint32_t e) {
    rescale(e);
    even_ += a << (exp_ - e);
    odd_ += b << (exp_ - e);
}

void RootTwoSum::add(const Coeff &c) {
    if (!c.is_zero()) {
        add_raw(BigInt(c.a), BigInt(c.b), c.e);
    }
}

void RootTwoSum::add_product(const Coeff &x, const Coeff &y, int sign) {
    if (x.is_zero() || y.is_zero()) {
        return;
    }
    BigInt a = BigInt(x.a) * y.a + 2 * BigInt(x.b) * y.b;
    BigInt b = BigInt(x.a) * y.b + BigInt(x.b) * y.a;
    if (sign < 0) {
        a = -a;
        b = -b;
    }
    add_raw(std::move(a), std::move(b), x.e + y.e);
}

RootTwo RootTwoSum::value() const {
    BigInt den = BigInt(1) << exp_;
    return RootTwo(BigRational(even_, den), BigRational(odd_, den));
}

std::ostream &operator<<(std::ostream &out, const Coeff &c) {
    return out << c.str();
}

std::ostream &operator<<(std::ostream &out, const RootTwo &v) {
    return out << v.str();
}

}  // namespace ccd
