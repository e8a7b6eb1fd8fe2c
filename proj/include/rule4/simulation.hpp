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

#ifndef RULE4_SIMULATION_HPP_
#define RULE4_SIMULATION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "rule4/estimator.hpp"
#include "rule4/partitions.hpp"

namespace rule4 {

// Counter-based stream: the k-th draw is a SplitMix64 finalization of
// key + k * golden_gamma, with the key derived from (seed, stream id).
// Any replicate can be regenerated without touching the others.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double next_uniform();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Inverse CDF of Exp(theta): -theta * log(1 - u).
double exponential_quantile(double u, double theta);

// n iid Exp(theta) draws. Throws std::invalid_argument for theta <= 0.
std::vector<double> sample_exponential(int n, double theta,
                                       CounterStream& stream);

// Sum in a fixed pairwise tree; the result depends only on the values and
// their order.
double pairwise_sum(std::span<const double> values);

struct SimulationReport {
  Partition plan_partition;
  int n = 0;
  double theta = 0.0;
  std::int64_t replicates = 0;
  std::uint64_t seed = 0;
  double mean_estimate = 0.0;
  double variance_estimate = 0.0;  // divisor replicates - 1
  double mean_std_error = 0.0;     // sqrt(variance_estimate / replicates)
  double theoretical_variance = 0.0;
};

// Replicate i draws its sample from CounterStream(seed, i). Replicates are
// spread over `threads` workers (0 picks the hardware concurrency); the
// report is bit-identical for any thread count. Throws
// std::invalid_argument for theta <= 0 or replicates < 1.
SimulationReport monte_carlo(const EstimatorPlan& plan, double theta,
                             std::int64_t replicates, std::uint64_t seed,
                             unsigned threads = 0);

}  // namespace rule4

#endif  // RULE4_SIMULATION_HPP_
