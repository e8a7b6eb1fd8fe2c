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

#include "rule4/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace rule4 {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void require_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("theta must be positive and finite");
  }
}

}  // namespace

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_(mix64(mix64(seed) ^ (stream_id * kGoldenGamma + kGoldenGamma))) {}

std::uint64_t CounterStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGoldenGamma);
}

double CounterStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double exponential_quantile(double u, double theta) {
  return -theta * std::log1p(-u);
}

std::vector<double> sample_exponential(int n, double theta,
                                       CounterStream& stream) {
  require_theta(theta);
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (auto& x : out) x = exponential_quantile(stream.next_uniform(), theta);
  return out;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double total = 0.0;
    for (double v : values) total += v;
    return total;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

SimulationReport monte_carlo(const EstimatorPlan& plan, double theta,
                             std::int64_t replicates, std::uint64_t seed,
                             unsigned threads) {
  require_theta(theta);
  if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const PlanEvaluator evaluate(plan);
  const int n = plan.partition.n();
  const auto count = static_cast<std::size_t>(replicates);
  std::vector<double> estimates(count);

  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<double> sample(static_cast<std::size_t>(n));
    for (std::size_t i = begin; i < end; ++i) {
      CounterStream stream(seed, i);
      for (auto& x : sample) {
        x = exponential_quantile(stream.next_uniform(), theta);
      }
      estimates[i] = evaluate(sample);
    }
  };

  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, count / 1024)));
  if (threads <= 1) {
    work(0, count);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(count, t * chunk);
      const std::size_t end = std::min(count, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
  }

  const double mean = pairwise_sum(estimates) / static_cast<double>(count);
  double variance = 0.0;
  if (count > 1) {
    std::vector<double> squares(count);
    std::transform(estimates.begin(), estimates.end(), squares.begin(),
                   [mean](double x) { return (x - mean) * (x - mean); });
    variance = pairwise_sum(squares) / static_cast<double>(count - 1);
  }

  return SimulationReport{plan.partition,
                          n,
                          theta,
                          replicates,
                          seed,
                          mean,
                          variance,
                          std::sqrt(variance / static_cast<double>(count)),
                          theoretical_variance(plan, theta)};
}

}  // namespace rule4
