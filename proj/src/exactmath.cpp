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

#include "rule4/exactmath.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace rule4 {

double Rational::to_double() const {
  // mpq_get_d truncates; step one ulp outward when past the midpoint.
  const double t = value_.get_d();
  if (!std::isfinite(t)) return t;
  const double away = std::nextafter(
      t, sign() < 0 ? -std::numeric_limits<double>::infinity()
                    : std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return t;
  mpq_class mid = (mpq_class(t) + mpq_class(away)) / 2;
  const int c = cmp(abs(value_), abs(mid));
  if (c > 0) return away;
  if (c < 0) return t;
  std::int64_t bits;
  static_assert(sizeof(bits) == sizeof(t));
  std::memcpy(&bits, &t, sizeof(t));
  return (bits & 1) == 0 ? t : away;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view digits) {
  return BigInt(std::string(digits), 10);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational literal: '" +
                                std::string(original) + "'");
  };
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    const BigInt d = parse_integer(den);
    if (d == 0) return fail();
    result = Rational(parse_integer(num), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !all_digits(whole)) return fail();
    if (!frac.empty() && !all_digits(frac)) return fail();
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const BigInt w = whole.empty() ? BigInt(0) : parse_integer(whole);
    const BigInt f = frac.empty() ? BigInt(0) : parse_integer(frac);
    result = Rational(BigInt(w * scale + f), scale);
  } else {
    if (!all_digits(text)) return fail();
    result = Rational(parse_integer(text), BigInt(1));
  }
  return negative ? -result : result;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

Rational reciprocal(const Rational& x) { return Rational(1) / x; }

Rational square(const Rational& x) { return x * x; }

Rational generalized_harmonic(std::int64_t n, int j) {
  if (n < 0) throw std::invalid_argument("harmonic index must be >= 0");
  if (j < 1) throw std::invalid_argument("harmonic power must be >= 1");

  static std::mutex mu;
  static std::map<int, std::vector<Rational>> prefix;  // prefix[j][n] = H_{n,j}

  std::lock_guard<std::mutex> lock(mu);
  auto& table = prefix[j];
  if (table.empty()) table.emplace_back(0);
  while (static_cast<std::int64_t>(table.size()) <= n) {
    const auto i = static_cast<unsigned long>(table.size());
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), i, static_cast<unsigned long>(j));
    table.push_back(table.back() + Rational(BigInt(1), power));
  }
  return table[static_cast<std::size_t>(n)];
}

}  // namespace rule4
