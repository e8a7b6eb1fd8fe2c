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
#include <vector>

#include "gtest/gtest.h"
#include "rule4/optimizer.hpp"

namespace rule4 {
namespace {

using Parts = std::vector<int>;

Rational Q(const char* text) { return Rational::parse(text); }

Partition P(Parts parts) { return Partition::from_parts(parts); }

const CoefficientTable& table() {
  static const CoefficientTable t = exponential_table(100);
  return t;
}

TEST(PlanTest, SinglePairHasUnitWeight) {
  const EstimatorPlan plan = make_plan(P({2}), table());
  ASSERT_EQ(plan.blocks.size(), 1u);
  EXPECT_EQ(plan.blocks[0].weight, Rational(1));
  EXPECT_EQ(plan.variance_factor, Rational(1));
}

TEST(PlanTest, TwentyTwoObservations) {
  const EstimatorPlan plan = make_plan(P({5, 5, 4, 4, 4}), table());
  ASSERT_EQ(plan.blocks.size(), 5u);
  EXPECT_EQ(plan.blocks[0].part, 5);
  EXPECT_EQ(plan.blocks[1].part, 5);
  EXPECT_EQ(plan.blocks[2].part, 4);
  EXPECT_EQ(plan.blocks[0].weight, Q("2940/27133"));
  EXPECT_EQ(plan.blocks[1].weight, Q("2940/27133"));
  for (int i = 2; i < 5; ++i) {
    EXPECT_EQ(plan.blocks[static_cast<std::size_t>(i)].weight, Q("2706/27133"));
  }
  EXPECT_EQ(plan.variance_factor, Q("2009/27133"));
  EXPECT_EQ(bias_sum(plan), Rational(1));
}

TEST(PlanTest, EqualBlocksShareWeight) {
  const EstimatorPlan plan = make_plan(P({4, 4}), table());
  EXPECT_EQ(plan.blocks[0].weight, Q("3/11"));
  EXPECT_EQ(plan.blocks[1].weight, Q("3/11"));
  EXPECT_EQ(plan.variance_factor, Q("49/242"));
}

TEST(EstimateTest, HandComputedValues) {
  const std::vector<double> sample = {3.0, 0.0, 5.0, 1.0};
  EXPECT_DOUBLE_EQ(estimate(sample, make_plan(P({2, 2}), table())), 3.5);
  const std::vector<double> pair = {0.0, 1.0};
  EXPECT_DOUBLE_EQ(estimate(pair, make_plan(P({2}), table())), 1.0);
  const std::vector<double> flat(22, 7.25);
  EXPECT_EQ(estimate(flat, make_plan(P({5, 5, 4, 4, 4}), table())), 0.0);
}

TEST(EstimateTest, RejectsWrongLength) {
  const EstimatorPlan plan = make_plan(P({2, 2}), table());
  const std::vector<double> short_sample = {1.0, 2.0, 3.0};
  EXPECT_THROW(estimate(short_sample, plan), std::invalid_argument);
  EXPECT_EQ(PlanEvaluator(plan).sample_size(), 4);
}

TEST(EstimateTest, ScaleEquivariantAndShiftInvariant) {
  const EstimatorPlan plan = make_plan(P({5, 5, 4, 4, 4}), table());
  std::vector<double> x(22);
  for (int i = 0; i < 22; ++i) x[static_cast<std::size_t>(i)] = (i * 7919 % 23) * 0.125;
  const double base = estimate(x, plan);
  std::vector<double> scaled = x, shifted = x;
  for (auto& v : scaled) v *= 4.0;
  for (auto& v : shifted) v += 16.0;
  EXPECT_DOUBLE_EQ(estimate(scaled, plan), 4.0 * base);
  EXPECT_DOUBLE_EQ(estimate(shifted, plan), base);
}

TEST(EstimateTest, BlocksAreContiguous) {
  const EstimatorPlan plan = make_plan(P({2, 2}), table());
  // Reordering inside a block changes nothing, moving across blocks does.
  EXPECT_DOUBLE_EQ(estimate(std::vector<double>{0, 3, 1, 5}, plan),
                   estimate(std::vector<double>{3, 0, 5, 1}, plan));
  EXPECT_NE(estimate(std::vector<double>{0, 1, 3, 5}, plan),
            estimate(std::vector<double>{0, 3, 1, 5}, plan));
}

TEST(EstimateTest, TheoreticalVarianceScalesWithSigmaSquared) {
  const EstimatorPlan plan = make_plan(P({5, 5, 4, 4, 4}), table());
  EXPECT_DOUBLE_EQ(theoretical_variance(plan, 1.0), 2009.0 / 27133.0);
  EXPECT_DOUBLE_EQ(theoretical_variance(plan, 3.0), 9.0 * 2009.0 / 27133.0);
  EXPECT_THROW(theoretical_variance(plan, 0.0), std::invalid_argument);
}

TEST(UnbiasednessTest, EveryPartitionToForty) {
  for (int n = 2; n <= 40; ++n) {
    for_each_admissible(n, [&](const Partition& p) {
      ASSERT_EQ(bias_sum(make_plan(p, table())), Rational(1)) << p.str();
    });
  }
}

TEST(UnbiasednessTest, ClosedFormPlansToHundred) {
  for (int n = 2; n <= 100; ++n) {
    ASSERT_EQ(bias_sum(make_plan(rule_of_fours(n), table())), Rational(1)) << n;
  }
}

TEST(OptimalityTest, OptimalPlanHasSmallestVarianceFactor) {
  for (int n = 2; n <= 40; ++n) {
    const Rational best = make_plan(solve_dp(n, table()).partition, table())
                              .variance_factor;
    for_each_admissible(n, [&](const Partition& p) {
      ASSERT_LE(best, make_plan(p, table()).variance_factor) << p.str();
    });
  }
}

}  // namespace
}  // namespace rule4
