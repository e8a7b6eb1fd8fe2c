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

#include "rule4/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace rule4 {

Partition Partition::from_parts(std::span<const int> parts) {
  if (parts.empty()) throw std::invalid_argument("partition has no parts");
  Partition p;
  for (int part : parts) {
    if (part < 2) {
      throw std::invalid_argument("inadmissible part " + std::to_string(part) +
                                  " (parts must be >= 2)");
    }
    ++p.frequencies_[part];
    p.n_ += part;
    ++p.length_;
  }
  return p;
}

Partition Partition::from_frequencies(const std::map<int, int>& frequencies) {
  std::vector<int> parts;
  for (const auto& [part, f] : frequencies) {
    if (f < 0) throw std::invalid_argument("negative multiplicity");
    parts.insert(parts.end(), static_cast<std::size_t>(f), part);
  }
  return from_parts(parts);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto field = text.substr(start, comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() ||
        ptr != field.data() + field.size()) {
      throw std::invalid_argument("bad partition spec '" + std::string(text) +
                                  "'");
    }
    parts.push_back(value);
    start = comma + 1;
  }
  return from_parts(parts);
}

int Partition::frequency(int part) const {
  const auto it = frequencies_.find(part);
  return it == frequencies_.end() ? 0 : it->second;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length_));
  for (auto it = frequencies_.rbegin(); it != frequencies_.rend(); ++it) {
    out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
  }
  return out;
}

std::string Partition::str() const {
  std::string out;
  for (int part : parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(part);
  }
  return out;
}

std::string Partition::frequency_str() const {
  std::string out = "<";
  bool first = true;
  for (const auto& [part, f] : frequencies_) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(part);
    if (f > 1) out += '^' + std::to_string(f);
  }
  return out + ">";
}

bool preferred_over(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  const auto pa = a.parts();
  const auto pb = b.parts();
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(),
                                      pa.end());
}

namespace {

void enumerate_from(int remaining, int max_part, std::vector<int>& prefix,
                    const std::function<void(const Partition&)>& visit) {
  for (int part = std::min(max_part, remaining); part >= 2; --part) {
    const int rest = remaining - part;
    if (rest == 1) continue;
    prefix.push_back(part);
    if (rest == 0) {
      visit(Partition::from_parts(prefix));
    } else {
      enumerate_from(rest, part, prefix, visit);
    }
    prefix.pop_back();
  }
}

}  // namespace

void for_each_admissible(int n,
                         const std::function<void(const Partition&)>& visit) {
  if (n < 2) throw std::invalid_argument("admissible partitions need n >= 2");
  std::vector<int> prefix;
  enumerate_from(n, n, prefix, visit);
}

std::vector<Partition> enumerate_admissible(int n) {
  std::vector<Partition> out;
  for_each_admissible(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

BigInt count_unrestricted(int n) {
  if (n < 0) return 0;
  static std::mutex mu;
  static std::vector<BigInt> table{BigInt(1)};

  std::lock_guard<std::mutex> lock(mu);
  // p(m) = sum_{k>=1} (-1)^{k+1} [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
  for (int m = static_cast<int>(table.size()); m <= n; ++m) {
    BigInt total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      BigInt term = table[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += table[static_cast<std::size_t>(m - g2)];
      if (k % 2 == 1) {
        total += term;
      } else {
        total -= term;
      }
    }
    table.push_back(total);
  }
  return table[static_cast<std::size_t>(n)];
}

BigInt count_admissible(int n) {
  if (n < 0) return 0;
  return count_unrestricted(n) - count_unrestricted(n - 1);
}

double asymptotic_admissible(double n) {
  using std::numbers::pi;
  return pi / (12.0 * std::sqrt(2.0) * std::pow(n, 1.5)) *
         std::exp(pi * std::sqrt(2.0 * n / 3.0));
}

double asymptotic_unrestricted(double n) {
  using std::numbers::pi;
  return std::exp(pi * std::sqrt(2.0 * n / 3.0)) / (4.0 * std::sqrt(3.0) * n);
}

}  // namespace rule4
