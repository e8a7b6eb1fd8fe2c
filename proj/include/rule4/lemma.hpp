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

// Machine check that C_n / n peaks at n = 4 for exponential parents.
//
// The argument has two halves. For large n,
//
//   C_n / n < h(n) = (1 + log(n - 1))^2 / (n - 1),
//
// and h decreases for n > e + 1, so once h drops below C_4 / 4 = 121/196
// every later n is covered. The remaining finite range is compared exactly.

#ifndef RULE4_LEMMA_HPP_
#define RULE4_LEMMA_HPP_

#include <vector>

#include "rule4/coefficients.hpp"
#include "rule4/exactmath.hpp"

namespace rule4 {

// Smallest acceptable gap between a float bound and the value it bounds.
inline constexpr double kEnvelopeMargin = 1e-9;

// First n for which the envelope argument must start; the finite check has
// to reach at least this far.
inline constexpr int kTailBoundThreshold = 34;

// C_n / n exactly. Throws std::out_of_range if the table does not cover n.
Rational ratio(int n, const CoefficientTable& table);

// h(n) = (1 + log(n - 1))^2 / (n - 1). Throws std::domain_error for n <= 1.
double envelope_h(double n);

struct LemmaReport {
  int checked_upper = 0;
  int max_ratio_at = 0;
  Rational max_ratio;
  // Smallest n >= 5 with h(n) below max ratio by more than kEnvelopeMargin,
  // or 0 if none was found up to checked_upper.
  int tail_bound_start = 0;
  // ratio(n) < 121/196 exactly for every n != 4 in [2, checked_upper].
  bool finite_check_ok = false;
  // ratio(n) <= h(n) on [5, checked_upper] and h strictly decreasing on
  // integers [4, checked_upper], both with margin kEnvelopeMargin.
  bool envelope_ok = false;
  std::vector<int> failures;  // n values where any check failed

  bool ok() const {
    return finite_check_ok && envelope_ok && max_ratio_at == 4 &&
           tail_bound_start != 0 && failures.empty();
  }
};

// Failed checks are reported, not thrown. Throws std::invalid_argument for
// n_max < kTailBoundThreshold or a table that does not cover n_max. The
// envelope bound holds for exponential tables only.
LemmaReport verify_lemma(int n_max, const CoefficientTable& table);

}  // namespace rule4

#endif  // RULE4_LEMMA_HPP_
