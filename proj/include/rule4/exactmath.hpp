// Copyright 2026 The rule4 Authors
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

#ifndef RULE4_EXACTMATH_HPP_
#define RULE4_EXACTMATH_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rule4 {

using BigInt = mpz_class;

// Exact fraction over arbitrary-precision integers. Always held in lowest
// terms with a positive denominator, so equality is representation equality.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const mpq_class& value) : value_(value) {
    value_.canonicalize();
  }

  // Accepts "p", "p/q", "-p/q" and plain decimals such as "0.125" or "-2.5";
  // decimals are converted exactly. Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  // Nearest double, ties to even.
  double to_double() const;

  // Canonical "p/q" text; integers render without a denominator.
  std::string str() const { return value_.get_str(); }

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) {
    return lhs += rhs;
  }
  friend Rational operator-(Rational lhs, const Rational& rhs) {
    return lhs -= rhs;
  }
  friend Rational operator*(Rational lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend Rational operator/(Rational lhs, const Rational& rhs) {
    return lhs /= rhs;
  }
  friend Rational operator-(const Rational& x) {
    return Rational(mpq_class(-x.value_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

Rational reciprocal(const Rational& x);
Rational square(const Rational& x);

// H_{n,j} = sum_{i=1}^{n} 1 / i^j, exactly. H_{0,j} = 0.
//
// Values come from a per-power prefix table that is extended on demand and
// shared process-wide behind a mutex; the returned value never depends on
// which thread extended the table.
Rational generalized_harmonic(std::int64_t n, int j);

}  // namespace rule4

#endif  // RULE4_EXACTMATH_HPP_
