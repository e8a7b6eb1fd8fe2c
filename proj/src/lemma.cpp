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

#include "rule4/lemma.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rule4 {

Rational ratio(int n, const CoefficientTable& table) {
  return table.c(n) / Rational(n);
}

double envelope_h(double n) {
  if (!(n > 1.0)) throw std::domain_error("h(n) needs n > 1");
  const double t = 1.0 + std::log(n - 1.0);
  return t * t / (n - 1.0);
}

LemmaReport verify_lemma(int n_max, const CoefficientTable& table) {
  if (n_max < kTailBoundThreshold) {
    throw std::invalid_argument("lemma check needs n_max >= " +
                                std::to_string(kTailBoundThreshold) +
                                ", got " + std::to_string(n_max));
  }
  if (!table.covers(n_max)) {
    throw std::invalid_argument("coefficient table does not reach n_max");
  }

  LemmaReport report;
  report.checked_upper = n_max;
  report.finite_check_ok = true;
  report.envelope_ok = true;

  auto flag = [&report](int n) {
    if (report.failures.empty() || report.failures.back() != n) {
      report.failures.push_back(n);
    }
  };

  const Rational at_four = ratio(4, table);
  report.max_ratio_at = 2;
  report.max_ratio = ratio(2, table);
  for (int n = 2; n <= n_max; ++n) {
    const Rational r = ratio(n, table);
    if (r > report.max_ratio) {
      report.max_ratio = r;
      report.max_ratio_at = n;
    }
    if (n != 4 && !(r < at_four)) {
      report.finite_check_ok = false;
      flag(n);
    }
    if (n >= 5 && !(envelope_h(n) - r.to_double() > kEnvelopeMargin)) {
      report.envelope_ok = false;
      flag(n);
    }
    if (n >= 4 && n < n_max &&
        !(envelope_h(n) - envelope_h(n + 1) > kEnvelopeMargin)) {
      report.envelope_ok = false;
      flag(n);
    }
  }

  const double peak = at_four.to_double();
  for (int n = 5; n <= n_max; ++n) {
    if (peak - envelope_h(n) > kEnvelopeMargin) {
      report.tail_bound_start = n;
      break;
    }
  }
  return report;
}

}  // namespace rule4
