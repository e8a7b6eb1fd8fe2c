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

#ifndef RULE4_PARTITIONS_HPP_
#define RULE4_PARTITIONS_HPP_

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rule4/exactmath.hpp"

namespace rule4 {

// An admissible partition of n: every part is at least 2. Stored as part
// multiplicities; parts() gives the canonical descending list.
class Partition {
 public:
  // Throws std::invalid_argument if any part is < 2 or the list is empty.
  static Partition from_parts(std::span<const int> parts);
  // Multiplicities per part size; zero entries are dropped.
  static Partition from_frequencies(const std::map<int, int>& frequencies);
  // "5,5,4,4,4" in any order; throws std::invalid_argument on bad syntax
  // or an inadmissible part.
  static Partition parse(std::string_view text);

  int n() const { return n_; }
  int length() const { return length_; }
  // f_j; 0 when j is absent.
  int frequency(int part) const;
  const std::map<int, int>& frequencies() const { return frequencies_; }
  std::vector<int> parts() const;
  int largest_part() const { return frequencies_.rbegin()->first; }

  // "5,5,4,4,4"
  std::string str() const;
  // "<4^3 5^2>"
  std::string frequency_str() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Partition() = default;
  int n_ = 0;
  int length_ = 0;
  std::map<int, int> frequencies_;
};

// Canonical preference between two partitions of the same n: fewer parts
// first, then descending-lexicographic on the sorted part lists.
bool preferred_over(const Partition& a, const Partition& b);

// Visits every admissible partition of n exactly once, in descending
// lexicographic order of the sorted part lists: (n), (n-2,2), ... , (2,...,2).
// Throws std::invalid_argument for n < 2.
void for_each_admissible(int n,
                         const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_admissible(int n);

// p(n) by Euler's pentagonal-number recurrence, exact.
BigInt count_unrestricted(int n);
// P(n) = p(n) - p(n-1); P(0) = 1 is the empty partition.
BigInt count_admissible(int n);

// pi / (12 sqrt(2) n^{3/2}) * exp(pi sqrt(2n/3))
double asymptotic_admissible(double n);
// exp(pi sqrt(2n/3)) / (4 sqrt(3) n)
double asymptotic_unrestricted(double n);

}  // namespace rule4

#endif  // RULE4_PARTITIONS_HPP_
