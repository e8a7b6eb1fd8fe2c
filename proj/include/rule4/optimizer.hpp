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

// Solvers for the equality knapsack
//
//   maximize   sum_j C_j f_j
//   subject to sum_j j f_j = n,  f_j >= 0 integer,  j >= 2
//
// whose maximizer is the minimum-variance partition of a sample of size n.
// Three independent routes are provided: an exact dynamic program, the
// group relaxation solved as a shortest path over residues modulo the best
// part size, and the closed form for exponential parents.

#ifndef RULE4_OPTIMIZER_HPP_
#define RULE4_OPTIMIZER_HPP_

#include <string_view>
#include <vector>

#include "rule4/coefficients.hpp"
#include "rule4/exactmath.hpp"
#include "rule4/partitions.hpp"

namespace rule4 {

enum class Method { kDynamicProgramming, kGroupRelaxation, kClosedForm };

// "dp", "group_relaxation", "closed_form"
std::string_view method_label(Method method);

struct SolveResult {
  Partition partition;
  Rational objective;  // sum of C over the parts
  Method method;
  // Set when the group relaxation produced a negative multiplicity for the
  // modulus part and the result came from the dynamic program instead.
  bool relaxation_fell_back = false;
};

// Exact objective sum_i C_{n_i}. Throws std::out_of_range if the table does
// not cover every part.
Rational objective(const Partition& partition, const CoefficientTable& table);

// Arc of the residue multigraph: using one part of size `part` moves from
// residue `from` to (from + part) mod modulus at cost `weight`.
struct ResidueEdge {
  int from = 0;
  int to = 0;
  int part = 0;
  Rational weight;
};

class ResidueGraph {
 public:
  int modulus() const { return modulus_; }
  int n() const { return n_; }

  // j * C_b / b - C_j; nonnegative for every j in [2, n]. The modulus part
  // itself has weight 0 and carries no edge.
  const Rational& part_weight(int part) const;

  // Full multigraph: for each residue v and part j in [2, n], j != b,
  // an edge v -> (v + j) mod b.
  std::vector<ResidueEdge> edges() const;

  // One edge per ordered pair of distinct residues, keeping the cheapest
  // part size (larger part on exact ties). Self-loops are dropped since
  // their weights are nonnegative.
  const std::vector<ResidueEdge>& reduced_edges() const { return reduced_; }

 private:
  friend ResidueGraph build_residue_graph(const CoefficientTable&, int);

  int modulus_ = 0;
  int n_ = 0;
  std::vector<Rational> weights_;  // indexed by part size
  std::vector<ResidueEdge> reduced_;
};

// The part size maximizing C_j / j over [2, n]; smallest j on ties.
int best_ratio_part(const CoefficientTable& table, int n);

// Graph over residues modulo best_ratio_part(table, n). Throws
// std::invalid_argument for n < 2 or a table not covering [2, n];
// std::logic_error if any edge weight is negative.
ResidueGraph build_residue_graph(const CoefficientTable& table, int n);

struct ResiduePath {
  int target = 0;
  std::vector<ResidueEdge> edges;  // in walk order from residue 0
  Rational weight;
};

// Minimum-weight path from residue 0 to `target` by Dijkstra on the reduced
// graph. Ties prefer fewer edges. Throws std::invalid_argument if the
// target is not a residue of the graph, std::runtime_error if unreachable.
ResiduePath shortest_residue_path(const ResidueGraph& graph, int target);

// Exact maximizer by dynamic programming over totals 0..n. Ties are broken
// with preferred_over().
SolveResult solve_dp(int n, const CoefficientTable& table);

// solve_dp for every total in [2, n_max] from one table sweep; element i
// holds the result for n = i + 2.
std::vector<SolveResult> solve_dp_range(int n_max,
                                        const CoefficientTable& table);

// Number of distinct optimal partitions of every total in [0, n_max]
// (element n). Used to tell genuine ties apart from solver disagreement.
std::vector<BigInt> count_maximizers(int n_max, const CoefficientTable& table);

// Group relaxation: shortest residue path to n mod b, then the multiplicity
// of b is recovered as (n - sum_{j != b} j f_j) / b. When that is negative
// the result is computed by solve_dp and marked relaxation_fell_back.
SolveResult solve_group_relaxation(int n, const CoefficientTable& table);

// Closed-form optimum for exponential parents; n = 4q + r.
//   r = 0         -> <4^q>
//   r = 1, 2      -> <4^{q-r} 5^r>   (q >= r)
//   r = 3         -> <3 4^q>         (q >= 1)
//   2 <= n <= 5   -> (n)
//   n = 6         -> (3,3)
Partition rule_of_fours(int n);

// rule_of_fours(n) scored against `table`.
SolveResult solve_closed_form(int n, const CoefficientTable& table);

// Three-way comparison of solve_dp, solve_group_relaxation and
// solve_closed_form on every n in [2, n_max]. Meaningful for exponential
// tables, where the closed form applies.
struct AgreementSweep {
  int n_max = 0;
  std::vector<int> objective_mismatches;  // any two objectives differ
  std::vector<int> partition_mismatches;  // unique maximizer, partitions differ
  std::vector<int> ties;                  // more than one optimal partition
  std::vector<int> relaxation_fallbacks;  // group relaxation needed the DP

  // Objectives agree everywhere, partitions agree wherever the maximizer is
  // unique, and the relaxation recovered a nonnegative modulus count for
  // every n > 6.
  bool ok() const;
};

AgreementSweep sweep_agreement(int n_max, const CoefficientTable& table);

}  // namespace rule4

#endif  // RULE4_OPTIMIZER_HPP_
