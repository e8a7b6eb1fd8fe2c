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

#include "rule4/coefficients.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <utility>

namespace rule4 {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

CoefficientTable::CoefficientTable(std::string label,
                                   std::vector<PartCoefficients> rows)
    : label_(std::move(label)), rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw std::invalid_argument("coefficient table needs at least part 2");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto& row = rows_[i];
    if (row.part != static_cast<int>(i) + 2) {
      throw std::invalid_argument("coefficient table parts must run 2,3,...");
    }
    if (row.d.sign() <= 0) {
      throw std::invalid_argument("coefficient table: non-positive d");
    }
    if (row.k_sq.sign() <= 0) {
      throw std::invalid_argument("coefficient table: non-positive variance");
    }
    row.c = square(row.d) / row.k_sq;
  }
}

const PartCoefficients& CoefficientTable::at(int part) const {
  if (!covers(part)) {
    throw std::out_of_range("part size " + std::to_string(part) +
                            " outside coefficient table [2, " +
                            std::to_string(max_part()) + "]");
  }
  return rows_[static_cast<std::size_t>(part - 2)];
}

CoefficientTable exponential_table(int max_part) {
  if (max_part < 2) {
    throw std::invalid_argument("exponential table needs max_part >= 2");
  }
  std::vector<PartCoefficients> rows;
  rows.reserve(static_cast<std::size_t>(max_part - 1));
  for (int j = 2; j <= max_part; ++j) {
    rows.push_back({j, generalized_harmonic(j - 1, 1),
                    generalized_harmonic(j - 1, 2), Rational()});
  }
  return CoefficientTable("exponential", std::move(rows));
}

TableFormatError::TableFormatError(int row, const std::string& what)
    : std::runtime_error("row " + std::to_string(row) + ": " + what),
      row_(row) {}

CoefficientTable load_table(std::istream& in, std::string label) {
  std::string line;
  int row = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++row;
      if (!trim(line).empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw TableFormatError(1, "empty input, expected header");
  {
    const auto header = split_fields(trim(line));
    const bool ok = (header.size() == 3 || header.size() == 4) &&
                    trim(header[0]) == "j" && trim(header[1]) == "d" &&
                    trim(header[2]) == "k_sq" &&
                    (header.size() == 3 || trim(header[3]) == "C");
    if (!ok) {
      throw TableFormatError(row, "malformed header, expected 'j,d,k_sq'");
    }
  }

  std::vector<PartCoefficients> rows;
  while (next_line()) {
    const auto fields = split_fields(trim(line));
    if (fields.size() != 3 && fields.size() != 4) {
      throw TableFormatError(row, "malformed row: expected 3 or 4 fields");
    }
    int part = 0;
    const auto j_text = trim(fields[0]);
    const auto [ptr, ec] =
        std::from_chars(j_text.data(), j_text.data() + j_text.size(), part);
    if (ec != std::errc() || ptr != j_text.data() + j_text.size()) {
      throw TableFormatError(row, "malformed row: bad part size");
    }
    Rational d;
    Rational k_sq;
    try {
      d = Rational::parse(trim(fields[1]));
      k_sq = Rational::parse(trim(fields[2]));
      if (fields.size() == 4) (void)Rational::parse(trim(fields[3]));
    } catch (const std::invalid_argument& e) {
      throw TableFormatError(row, std::string("malformed row: ") + e.what());
    }
    const int expected = static_cast<int>(rows.size()) + 2;
    if (part != expected) {
      throw TableFormatError(row, "gap in part sizes: expected " +
                                      std::to_string(expected) + ", got " +
                                      std::to_string(part));
    }
    if (d.sign() <= 0) throw TableFormatError(row, "non-positive mean range");
    if (k_sq.sign() <= 0) throw TableFormatError(row, "non-positive variance");
    rows.push_back({part, std::move(d), std::move(k_sq), Rational()});
  }
  if (rows.empty()) throw TableFormatError(row, "table has no rows");
  return CoefficientTable(std::move(label), std::move(rows));
}

void export_table(const CoefficientTable& table, std::ostream& out) {
  out << "j,d,k_sq\n";
  for (const auto& row : table.rows()) {
    out << row.part << ',' << row.d << ',' << row.k_sq << '\n';
  }
}

std::string export_table(const CoefficientTable& table) {
  std::ostringstream os;
  export_table(table, os);
  return os.str();
}

}  // namespace rule4
