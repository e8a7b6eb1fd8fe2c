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

#include "rule4/estimator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rule4 {

EstimatorPlan make_plan(const Partition& partition,
                        const CoefficientTable& table) {
  Rational c_sum;
  for (const auto& [part, f] : partition.frequencies()) {
    c_sum += table.c(part) * Rational(f);
  }
  EstimatorPlan plan{partition, {}, reciprocal(c_sum)};
  for (int part : partition.parts()) {
    const auto& row = table.at(part);
    plan.blocks.push_back({part, row.d / row.k_sq * plan.variance_factor,
                           row.d});
  }
  return plan;
}

Rational bias_sum(const EstimatorPlan& plan) {
  Rational total;
  for (const auto& block : plan.blocks) total += block.weight * block.d;
  return total;
}

PlanEvaluator::PlanEvaluator(const EstimatorPlan& plan)
    : sample_size_(plan.partition.n()) {
  for (const auto& block : plan.blocks) {
    parts_.push_back(block.part);
    weights_.push_back(block.weight.to_double());
  }
}

double PlanEvaluator::operator()(std::span<const double> sample) const {
  if (sample.size() != static_cast<std::size_t>(sample_size_)) {
    throw std::invalid_argument("sample has " + std::to_string(sample.size()) +
                                " values, plan needs " +
                                std::to_string(sample_size_));
  }
  double total = 0.0;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto block = sample.subspan(offset, static_cast<std::size_t>(parts_[i]));
    const auto [lo, hi] = std::minmax_element(block.begin(), block.end());
    total += weights_[i] * (*hi - *lo);
    offset += block.size();
  }
  return total;
}

double estimate(std::span<const double> sample, const EstimatorPlan& plan) {
  return PlanEvaluator(plan)(sample);
}

double theoretical_variance(const EstimatorPlan& plan, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  return sigma * sigma * plan.variance_factor.to_double();
}

}  // namespace rule4
