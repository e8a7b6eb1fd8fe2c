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

#ifndef RULE4_ESTIMATOR_HPP_
#define RULE4_ESTIMATOR_HPP_

#include <span>
#include <vector>

#include "rule4/coefficients.hpp"
#include "rule4/exactmath.hpp"
#include "rule4/partitions.hpp"

namespace rule4 {

// One contiguous subsample of the plan.
struct PlanBlock {
  int part = 0;
  Rational weight;  // a_i
  Rational d;       // d_{n_i}, kept so unbiasedness can be checked alone
};

// Weighted-range estimator sigma_hat = sum_i a_i R_{n_i} with
//
//   a_i = (d_{n_i} / k_{n_i}^2) / sum_k C_{n_k}
//
// Blocks follow the canonical descending part order and are laid over the
// sample left to right.
struct EstimatorPlan {
  Partition partition;
  std::vector<PlanBlock> blocks;
  Rational variance_factor;  // 1 / sum_i C_{n_i}; Var = sigma^2 * factor
};

// Throws std::out_of_range if a part is missing from the table.
EstimatorPlan make_plan(const Partition& partition,
                        const CoefficientTable& table);

// sum_i a_i d_{n_i}; equals 1 exactly for an unbiased plan.
Rational bias_sum(const EstimatorPlan& plan);

// Throws std::invalid_argument if sample.size() != plan.partition.n().
double estimate(std::span<const double> sample, const EstimatorPlan& plan);

// Float view of a plan for repeated evaluation: weights are converted once.
class PlanEvaluator {
 public:
  explicit PlanEvaluator(const EstimatorPlan& plan);
  int sample_size() const { return sample_size_; }
  // Throws std::invalid_argument on a sample of the wrong length.
  double operator()(std::span<const double> sample) const;

 private:
  int sample_size_ = 0;
  std::vector<int> parts_;
  std::vector<double> weights_;
};

// sigma^2 * variance_factor. Throws std::invalid_argument for sigma <= 0.
double theoretical_variance(const EstimatorPlan& plan, double sigma);

}  // namespace rule4

#endif  // RULE4_ESTIMATOR_HPP_
