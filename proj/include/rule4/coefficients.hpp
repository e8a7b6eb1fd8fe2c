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

#ifndef RULE4_COEFFICIENTS_HPP_
#define RULE4_COEFFICIENTS_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rule4/exactmath.hpp"

namespace rule4 {

// Scale-free constants of the range of a subsample of size j:
//   d     = E(R_j) / sigma
//   k_sq  = Var(R_j) / sigma^2
//   c     = d^2 / k_sq   (the efficiency of the subsample)
struct PartCoefficients {
  int part = 0;
  Rational d;
  Rational k_sq;
  Rational c;

  friend bool operator==(const PartCoefficients&,
                         const PartCoefficients&) = default;
};

class CoefficientTable {
 public:
  // `rows` must be contiguous part sizes starting at 2 with d > 0 and
  // k_sq > 0; c is recomputed. Throws std::invalid_argument otherwise.
  CoefficientTable(std::string label,
                   std::vector<PartCoefficients> rows);

  const std::string& label() const { return label_; }
  int max_part() const { return static_cast<int>(rows_.size()) + 1; }
  bool covers(int part) const { return part >= 2 && part <= max_part(); }

  // Throws std::out_of_range for parts outside [2, max_part()].
  const PartCoefficients& at(int part) const;
  const Rational& d(int part) const { return at(part).d; }
  const Rational& k_sq(int part) const { return at(part).k_sq; }
  const Rational& c(int part) const { return at(part).c; }

  const std::vector<PartCoefficients>& rows() const { return rows_; }

  friend bool operator==(const CoefficientTable&,
                         const CoefficientTable&) = default;

 private:
  std::string label_;
  std::vector<PartCoefficients> rows_;
};

// d_j = H_{j-1,1}, k_sq_j = H_{j-1,2} for an exponential parent.
CoefficientTable exponential_table(int max_part);

// A table in the coefficient CSV format failed to load. row() is the
// 1-based line number of the offending line (the header is line 1).
class TableFormatError : public std::runtime_error {
 public:
  TableFormatError(int row, const std::string& what);
  int row() const { return row_; }

 private:
  int row_;
};

// Reads the coefficient CSV format:
//
//   j,d,k_sq[,C]
//   2,1,1
//   3,3/2,5/4
//
// Values are "p/q" or decimal text. A trailing C column is accepted and
// ignored; C is always recomputed from d and k_sq.
CoefficientTable load_table(std::istream& in, std::string label = "file");

// Canonical export: header "j,d,k_sq", one row per part, values as reduced
// "p/q" (integers without denominator), LF line endings.
void export_table(const CoefficientTable& table, std::ostream& out);
std::string export_table(const CoefficientTable& table);

}  // namespace rule4

#endif  // RULE4_COEFFICIENTS_HPP_
