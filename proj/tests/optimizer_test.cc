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

#include "rule4/optimizer.hpp"

#include <iostream>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"

namespace rule4 {
namespace {

using Parts = std::vector<int>;

Rational Q(const char* text) { return Rational::parse(text); }

Partition P(Parts parts) { return Partition::from_parts(parts); }

// Brute force over every admissible partition: best objective and how many
// partitions reach it.
struct BruteBest {
  Rational value;
  int count = 0;
};

BruteBest brute_force(int n, const CoefficientTable& table) {
  BruteBest best;
  for_each_admissible(n, [&](const Partition& p) {
    Rational sum;
    for (int part : p.parts()) sum += table.c(part);
    if (best.count == 0 || sum > best.value) {
      best.value = sum;
      best.count = 1;
    } else if (sum == best.value) {
      ++best.count;
    }
  });
  return best;
}

class ExponentialOptimizerTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { table_ = new CoefficientTable(exponential_table(400)); }
  static void TearDownTestSuite() {
    delete table_;
    table_ = nullptr;
  }
  static const CoefficientTable& table() { return *table_; }

 private:
  static CoefficientTable* table_;
};

CoefficientTable* ExponentialOptimizerTest::table_ = nullptr;

TEST_F(ExponentialOptimizerTest, DynamicProgramKnownOptima) {
  const SolveResult four = solve_dp(4, table());
  EXPECT_EQ(four.partition, P({4}));
  EXPECT_EQ(four.objective, Q("121/49"));
  EXPECT_EQ(four.method, Method::kDynamicProgramming);

  const SolveResult ten = solve_dp(10, table());
  EXPECT_EQ(ten.partition, P({5, 5}));
  EXPECT_EQ(ten.objective, Q("250/41"));

  const SolveResult twenty_two = solve_dp(22, table());
  EXPECT_EQ(twenty_two.partition, P({5, 5, 4, 4, 4}));
  EXPECT_EQ(twenty_two.objective, Q("27133/2009"));
}

TEST_F(ExponentialOptimizerTest, DynamicProgramMatchesEnumeration) {
  for (int n = 2; n <= 40; ++n) {
    const BruteBest best = brute_force(n, table());
    const SolveResult r = solve_dp(n, table());
    ASSERT_EQ(r.objective, best.value) << n;
    ASSERT_EQ(objective(r.partition, table()), r.objective) << n;
    ASSERT_EQ(r.partition.n(), n);
  }
}

TEST_F(ExponentialOptimizerTest, MaximizerCountsMatchEnumeration) {
  const auto counts = count_maximizers(40, table());
  for (int n = 2; n <= 40; ++n) {
    ASSERT_EQ(counts[static_cast<std::size_t>(n)], brute_force(n, table()).count)
        << n;
  }
}

TEST_F(ExponentialOptimizerTest, RangeSolveMatchesSingleSolves) {
  const auto range = solve_dp_range(60, table());
  ASSERT_EQ(range.size(), 59u);
  for (int n = 2; n <= 60; ++n) {
    const SolveResult single = solve_dp(n, table());
    ASSERT_EQ(range[static_cast<std::size_t>(n - 2)].partition, single.partition);
    ASSERT_EQ(range[static_cast<std::size_t>(n - 2)].objective, single.objective);
  }
}

TEST_F(ExponentialOptimizerTest, ResidueGraphEdgeWeights) {
  const ResidueGraph g = build_residue_graph(table(), 22);
  EXPECT_EQ(g.modulus(), 4);
  EXPECT_EQ(g.part_weight(5), Q("305/8036"));
  EXPECT_EQ(g.part_weight(2), Q("23/98"));
  EXPECT_EQ(g.part_weight(3), Q("51/980"));
  EXPECT_EQ(g.part_weight(4), Rational(0));
  EXPECT_THROW(g.part_weight(23), std::out_of_range);

  for (const auto& e : g.edges()) {
    ASSERT_GE(e.weight.sign(), 0);
    ASSERT_NE(e.part, 4);
    ASSERT_EQ(e.to, (e.from + e.part) % 4);
  }
  EXPECT_EQ(g.edges().size(), 4u * 20u);
}

TEST_F(ExponentialOptimizerTest, ReducedGraphKeepsCheapestPartPerClass) {
  const ResidueGraph g = build_residue_graph(table(), 22);
  const auto& reduced = g.reduced_edges();
  ASSERT_EQ(reduced.size(), 12u);
  for (const auto& e : reduced) {
    ASSERT_NE(e.from, e.to);
    for (const auto& other : g.edges()) {
      if (other.from == e.from && other.to == e.to) {
        ASSERT_LE(e.weight, other.weight);
      }
    }
  }
  // Class 2 is served by part 6 (73285/516362), cheaper than part 2.
  for (const auto& e : reduced) {
    if ((e.to - e.from + 4) % 4 == 1) EXPECT_EQ(e.part, 5);
    if ((e.to - e.from + 4) % 4 == 2) EXPECT_EQ(e.part, 6);
    if ((e.to - e.from + 4) % 4 == 3) EXPECT_EQ(e.part, 3);
  }
  EXPECT_EQ(g.part_weight(6), Q("73285/516362"));
}

TEST_F(ExponentialOptimizerTest, ShortestPathTotals) {
  const ResidueGraph g = build_residue_graph(table(), 22);

  const ResiduePath to0 = shortest_residue_path(g, 0);
  EXPECT_TRUE(to0.edges.empty());
  EXPECT_EQ(to0.weight, Rational(0));

  const ResiduePath to1 = shortest_residue_path(g, 1);
  EXPECT_EQ(to1.weight, Q("305/8036"));
  ASSERT_EQ(to1.edges.size(), 1u);
  EXPECT_EQ(to1.edges[0].part, 5);

  const ResiduePath to2 = shortest_residue_path(g, 2);
  EXPECT_EQ(to2.weight, Q("610/8036"));
  ASSERT_EQ(to2.edges.size(), 2u);
  EXPECT_EQ(to2.edges[0].from, 0);
  EXPECT_EQ(to2.edges[0].to, 1);
  EXPECT_EQ(to2.edges[1].from, 1);
  EXPECT_EQ(to2.edges[1].to, 2);
  EXPECT_EQ(to2.edges[1].part, 5);

  const ResiduePath to3 = shortest_residue_path(g, 3);
  EXPECT_EQ(to3.weight, Q("51/980"));
  ASSERT_EQ(to3.edges.size(), 1u);
  EXPECT_EQ(to3.edges[0].part, 3);

  EXPECT_THROW(shortest_residue_path(g, 4), std::invalid_argument);
}

TEST_F(ExponentialOptimizerTest, GroupRelaxationExamples) {
  const SolveResult r22 = solve_group_relaxation(22, table());
  EXPECT_EQ(r22.partition, P({5, 5, 4, 4, 4}));
  EXPECT_EQ(r22.method, Method::kGroupRelaxation);
  EXPECT_FALSE(r22.relaxation_fell_back);

  const SolveResult r11 = solve_group_relaxation(11, table());
  EXPECT_EQ(r11.partition, P({4, 4, 3}));

  for (int q = 1; q <= 20; ++q) {
    const SolveResult r = solve_group_relaxation(4 * q, table());
    EXPECT_EQ(r.partition, Partition::from_frequencies({{4, q}})) << q;
  }
}

TEST_F(ExponentialOptimizerTest, GroupRelaxationFallsBackOnlyForSmallN) {
  // n = 2 and n = 6 ask for two part-5 steps with too little room.
  const SolveResult six = solve_group_relaxation(6, table());
  EXPECT_TRUE(six.relaxation_fell_back);
  EXPECT_EQ(six.method, Method::kDynamicProgramming);
  EXPECT_EQ(six.partition, P({3, 3}));

  for (int n = 7; n <= 400; ++n) {
    ASSERT_FALSE(solve_group_relaxation(n, table()).relaxation_fell_back) << n;
  }
}

TEST_F(ExponentialOptimizerTest, BestRatioPartIsFour) {
  EXPECT_EQ(best_ratio_part(table(), 400), 4);
  EXPECT_EQ(best_ratio_part(table(), 3), 3);
  EXPECT_EQ(best_ratio_part(table(), 2), 2);
}

TEST(RuleOfFoursTest, ClosedFormCases) {
  EXPECT_EQ(rule_of_fours(2), P({2}));
  EXPECT_EQ(rule_of_fours(3), P({3}));
  EXPECT_EQ(rule_of_fours(4), P({4}));
  EXPECT_EQ(rule_of_fours(5), P({5}));
  EXPECT_EQ(rule_of_fours(6), P({3, 3}));
  EXPECT_EQ(rule_of_fours(7), P({4, 3}));
  EXPECT_EQ(rule_of_fours(9), P({5, 4}));
  EXPECT_EQ(rule_of_fours(10), P({5, 5}));
  EXPECT_EQ(rule_of_fours(22), P({5, 5, 4, 4, 4}));
  EXPECT_EQ(rule_of_fours(100), Partition::from_frequencies({{4, 25}}));
  EXPECT_THROW(rule_of_fours(1), std::invalid_argument);
}

TEST_F(ExponentialOptimizerTest, ThreeWayAgreementTo400) {
  const AgreementSweep sweep = sweep_agreement(400, table());
  EXPECT_TRUE(sweep.objective_mismatches.empty());
  EXPECT_TRUE(sweep.partition_mismatches.empty());
  EXPECT_TRUE(sweep.ok());
  std::ostringstream ties;
  for (int n : sweep.ties) ties << n << ' ';
  RecordProperty("tied_n", ties.str());
  std::cout << "[ info ] n <= 400 with more than one optimal partition: ["
            << ties.str() << "]\n";
}

TEST(OptimizerErrorsTest, RejectsBadInputs) {
  const CoefficientTable small = exponential_table(10);
  EXPECT_THROW(solve_dp(1, small), std::invalid_argument);
  EXPECT_THROW(solve_dp(11, small), std::invalid_argument);
  EXPECT_THROW(solve_group_relaxation(11, small), std::invalid_argument);
  EXPECT_THROW(build_residue_graph(small, 1), std::invalid_argument);
  EXPECT_THROW(solve_closed_form(11, small), std::invalid_argument);
}

// A table whose best ratio part is 3 rather than 4.
TEST(LoadedTableOptimizerTest, ArbitraryTableAgreesWithBruteForce) {
  std::vector<PartCoefficients> rows;
  // C_2 = 1, C_3 = 2 (ratio 2/3), C_4 = 2.2, C_5 = 3.2, C_6 = 3.9, C_7 = 4.6
  const char* c_values[] = {"1", "2", "11/5", "16/5", "39/10", "23/5"};
  for (int j = 2; j <= 7; ++j) {
    rows.push_back({j, Q(c_values[j - 2]), Rational(1), Rational()});
  }
  // d = C, k_sq = C so that C = d^2 / k_sq.
  for (auto& row : rows) row.k_sq = row.d;
  const CoefficientTable t("custom", rows);
  EXPECT_EQ(best_ratio_part(t, 7), 3);
  for (int n = 2; n <= 7; ++n) {
    const BruteBest best = brute_force(n, t);
    EXPECT_EQ(solve_dp(n, t).objective, best.value) << n;
    EXPECT_EQ(solve_group_relaxation(n, t).objective, best.value) << n;
  }
}

TEST(LoadedTableOptimizerTest, TiesPreferFewerPartsThenLexicographic) {
  // Every C_j / j equal: all partitions tie, so the single part wins.
  std::vector<PartCoefficients> rows;
  for (int j = 2; j <= 9; ++j) {
    rows.push_back({j, Rational(j), Rational(j), Rational()});
  }
  const CoefficientTable t("flat", rows);
  EXPECT_EQ(solve_dp(9, t).partition, P({9}));
  EXPECT_EQ(count_maximizers(9, t)[9], count_admissible(9));
  // Relaxation modulus falls back to the smallest part on ties.
  EXPECT_EQ(best_ratio_part(t, 9), 2);
}

}  // namespace
}  // namespace rule4
