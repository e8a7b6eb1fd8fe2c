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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace rule4 {

namespace {

void require_solvable(int n, const CoefficientTable& table) {
  if (n < 2) {
    throw std::invalid_argument("n must be >= 2, got " + std::to_string(n));
  }
  if (!table.covers(n)) {
    throw std::invalid_argument("coefficient table '" + table.label() +
                                "' covers parts up to " +
                                std::to_string(table.max_part()) +
                                ", need " + std::to_string(n));
  }
}

// One DP cell: the best objective for a total, the last part chosen and the
// number of parts. Partitions are rebuilt from `part` links on demand.
struct Cell {
  bool reachable = false;
  Rational value;
  int part = 0;
  int length = 0;
};

std::vector<int> rebuild_parts(const std::vector<Cell>& cells, int total) {
  std::vector<int> parts;
  while (total > 0) {
    const int part = cells[static_cast<std::size_t>(total)].part;
    parts.push_back(part);
    total -= part;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

std::vector<int> with_part(std::vector<int> parts, int part) {
  parts.insert(std::upper_bound(parts.begin(), parts.end(), part,
                                std::greater<>()),
               part);
  return parts;
}

std::vector<Cell> dp_cells(int n_max, const CoefficientTable& table) {
  std::vector<Cell> cells(static_cast<std::size_t>(n_max) + 1);
  cells[0].reachable = true;
  for (int total = 2; total <= n_max; ++total) {
    Cell& best = cells[static_cast<std::size_t>(total)];
    for (int part = 2; part <= total; ++part) {
      const Cell& rest = cells[static_cast<std::size_t>(total - part)];
      if (!rest.reachable) continue;
      Rational value = rest.value + table.c(part);
      const int length = rest.length + 1;
      bool take = !best.reachable || value > best.value;
      if (!take && value == best.value) {
        if (length != best.length) {
          take = length < best.length;
        } else {
          const auto mine = with_part(rebuild_parts(cells, total - part), part);
          const auto theirs = rebuild_parts(cells, total);
          take = std::lexicographical_compare(theirs.begin(), theirs.end(),
                                              mine.begin(), mine.end());
        }
      }
      if (take) {
        best.reachable = true;
        best.value = std::move(value);
        best.part = part;
        best.length = length;
      }
    }
  }
  return cells;
}

SolveResult dp_result(const std::vector<Cell>& cells, int n) {
  const auto parts = rebuild_parts(cells, n);
  return SolveResult{Partition::from_parts(parts),
                     cells[static_cast<std::size_t>(n)].value,
                     Method::kDynamicProgramming};
}

}  // namespace

std::string_view method_label(Method method) {
  switch (method) {
    case Method::kDynamicProgramming:
      return "dp";
    case Method::kGroupRelaxation:
      return "group_relaxation";
    case Method::kClosedForm:
      return "closed_form";
  }
  return "unknown";
}

Rational objective(const Partition& partition, const CoefficientTable& table) {
  Rational total;
  for (const auto& [part, f] : partition.frequencies()) {
    total += table.c(part) * Rational(f);
  }
  return total;
}

const Rational& ResidueGraph::part_weight(int part) const {
  if (part < 2 || part > n_) {
    throw std::out_of_range("no residue edge for part " +
                            std::to_string(part));
  }
  return weights_[static_cast<std::size_t>(part)];
}

std::vector<ResidueEdge> ResidueGraph::edges() const {
  std::vector<ResidueEdge> out;
  for (int v = 0; v < modulus_; ++v) {
    for (int part = 2; part <= n_; ++part) {
      if (part == modulus_) continue;
      out.push_back({v, (v + part) % modulus_, part,
                     weights_[static_cast<std::size_t>(part)]});
    }
  }
  return out;
}

int best_ratio_part(const CoefficientTable& table, int n) {
  require_solvable(n, table);
  int best = 2;
  Rational best_ratio = table.c(2) / Rational(2);
  for (int part = 3; part <= n; ++part) {
    Rational ratio = table.c(part) / Rational(part);
    if (ratio > best_ratio) {
      best = part;
      best_ratio = std::move(ratio);
    }
  }
  return best;
}

ResidueGraph build_residue_graph(const CoefficientTable& table, int n) {
  ResidueGraph graph;
  graph.modulus_ = best_ratio_part(table, n);
  graph.n_ = n;
  const int b = graph.modulus_;
  const Rational slope = table.c(b) / Rational(b);

  graph.weights_.resize(static_cast<std::size_t>(n) + 1);
  for (int part = 2; part <= n; ++part) {
    Rational w = Rational(part) * slope - table.c(part);
    if (w.sign() < 0) {
      throw std::logic_error("negative residue edge weight for part " +
                             std::to_string(part) +
                             "; modulus does not maximize C_j/j");
    }
    graph.weights_[static_cast<std::size_t>(part)] = std::move(w);
  }

  // Edge weights depend only on the part, so the cheapest part per residue
  // class serves every source vertex.
  std::vector<int> cheapest(static_cast<std::size_t>(b), 0);
  for (int part = 2; part <= n; ++part) {
    const int cls = part % b;
    if (cls == 0) continue;
    int& current = cheapest[static_cast<std::size_t>(cls)];
    if (current == 0 ||
        graph.weights_[static_cast<std::size_t>(part)] <=
            graph.weights_[static_cast<std::size_t>(current)]) {
      current = part;
    }
  }
  for (int v = 0; v < b; ++v) {
    for (int cls = 1; cls < b; ++cls) {
      const int part = cheapest[static_cast<std::size_t>(cls)];
      if (part == 0) continue;
      graph.reduced_.push_back({v, (v + cls) % b, part,
                                graph.weights_[static_cast<std::size_t>(part)]});
    }
  }
  return graph;
}

ResiduePath shortest_residue_path(const ResidueGraph& graph, int target) {
  const int b = graph.modulus();
  if (target < 0 || target >= b) {
    throw std::invalid_argument("residue " + std::to_string(target) +
                                " outside [0, " + std::to_string(b) + ")");
  }
  struct Label {
    bool reached = false;
    bool settled = false;
    Rational dist;
    int hops = 0;
    int via = -1;  // index into reduced_edges()
  };
  const auto& edges = graph.reduced_edges();
  std::vector<Label> labels(static_cast<std::size_t>(b));
  labels[0].reached = true;

  auto better = [](const Rational& d1, int h1, const Label& l) {
    if (!l.reached) return true;
    if (d1 != l.dist) return d1 < l.dist;
    return h1 < l.hops;
  };

  for (int round = 0; round < b; ++round) {
    int u = -1;
    for (int v = 0; v < b; ++v) {
      const Label& l = labels[static_cast<std::size_t>(v)];
      if (!l.reached || l.settled) continue;
      if (u < 0 || better(l.dist, l.hops, labels[static_cast<std::size_t>(u)])) {
        u = v;
      }
    }
    if (u < 0) break;
    labels[static_cast<std::size_t>(u)].settled = true;
    if (u == target) break;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].from != u) continue;
      Label& head = labels[static_cast<std::size_t>(edges[e].to)];
      if (head.settled) continue;
      const Label& tail = labels[static_cast<std::size_t>(u)];
      Rational d = tail.dist + edges[e].weight;
      if (better(d, tail.hops + 1, head)) {
        head.reached = true;
        head.dist = std::move(d);
        head.hops = tail.hops + 1;
        head.via = static_cast<int>(e);
      }
    }
  }

  const Label& end = labels[static_cast<std::size_t>(target)];
  if (!end.reached) {
    throw std::runtime_error("residue " + std::to_string(target) +
                             " unreachable from 0");
  }
  ResiduePath path;
  path.target = target;
  path.weight = end.dist;
  // The source is settled first and never relabelled, so the chain of
  // `via` links ends at residue 0.
  for (int v = target; labels[static_cast<std::size_t>(v)].via >= 0;) {
    const auto& edge =
        edges[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)].via)];
    path.edges.push_back(edge);
    v = edge.from;
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

SolveResult solve_dp(int n, const CoefficientTable& table) {
  require_solvable(n, table);
  return dp_result(dp_cells(n, table), n);
}

std::vector<SolveResult> solve_dp_range(int n_max,
                                        const CoefficientTable& table) {
  require_solvable(n_max, table);
  const auto cells = dp_cells(n_max, table);
  std::vector<SolveResult> out;
  out.reserve(static_cast<std::size_t>(n_max - 1));
  for (int n = 2; n <= n_max; ++n) out.push_back(dp_result(cells, n));
  return out;
}

std::vector<BigInt> count_maximizers(int n_max,
                                     const CoefficientTable& table) {
  require_solvable(n_max, table);
  const auto size = static_cast<std::size_t>(n_max) + 1;
  std::vector<bool> reachable(size, false);
  std::vector<Rational> best(size);
  std::vector<BigInt> ways(size, BigInt(0));
  reachable[0] = true;
  ways[0] = 1;
  // Parts are taken in increasing order so each multiset is counted once.
  for (int part = 2; part <= n_max; ++part) {
    const Rational& c = table.c(part);
    for (int total = part; total <= n_max; ++total) {
      const auto from = static_cast<std::size_t>(total - part);
      const auto to = static_cast<std::size_t>(total);
      if (!reachable[from]) continue;
      Rational value = best[from] + c;
      if (!reachable[to] || value > best[to]) {
        reachable[to] = true;
        best[to] = std::move(value);
        ways[to] = ways[from];
      } else if (value == best[to]) {
        ways[to] += ways[from];
      }
    }
  }
  return ways;
}

SolveResult solve_group_relaxation(int n, const CoefficientTable& table) {
  const ResidueGraph graph = build_residue_graph(table, n);
  const int b = graph.modulus();
  const ResiduePath path = shortest_residue_path(graph, n % b);

  std::vector<int> parts;
  int used = 0;
  for (const auto& edge : path.edges) {
    parts.push_back(edge.part);
    used += edge.part;
  }
  // n - used is a multiple of b by construction of the residue walk.
  const int modulus_count = (n - used) / b;
  if (modulus_count < 0) {
    SolveResult fallback = solve_dp(n, table);
    fallback.relaxation_fell_back = true;
    return fallback;
  }
  parts.insert(parts.end(), static_cast<std::size_t>(modulus_count), b);
  Partition partition = Partition::from_parts(parts);
  Rational value = objective(partition, table);
  return SolveResult{std::move(partition), std::move(value),
                     Method::kGroupRelaxation};
}

Partition rule_of_fours(int n) {
  if (n < 2) {
    throw std::invalid_argument("n must be >= 2, got " + std::to_string(n));
  }
  if (n <= 5) return Partition::from_parts(std::vector<int>{n});
  if (n == 6) return Partition::from_parts(std::vector<int>{3, 3});
  const int q = n / 4;
  const int r = n % 4;
  switch (r) {
    case 0:
      return Partition::from_frequencies({{4, q}});
    case 1:
    case 2:
      return Partition::from_frequencies({{4, q - r}, {5, r}});
    default:
      return Partition::from_frequencies({{3, 1}, {4, q}});
  }
}

SolveResult solve_closed_form(int n, const CoefficientTable& table) {
  require_solvable(n, table);
  Partition partition = rule_of_fours(n);
  Rational value = objective(partition, table);
  return SolveResult{std::move(partition), std::move(value),
                     Method::kClosedForm};
}

bool AgreementSweep::ok() const {
  const bool late_fallback =
      std::any_of(relaxation_fallbacks.begin(), relaxation_fallbacks.end(),
                  [](int n) { return n > 6; });
  return objective_mismatches.empty() && partition_mismatches.empty() &&
         !late_fallback;
}

AgreementSweep sweep_agreement(int n_max, const CoefficientTable& table) {
  AgreementSweep sweep;
  sweep.n_max = n_max;
  const auto dp = solve_dp_range(n_max, table);
  const auto counts = count_maximizers(n_max, table);
  for (int n = 2; n <= n_max; ++n) {
    const SolveResult& exact = dp[static_cast<std::size_t>(n - 2)];
    const SolveResult relaxed = solve_group_relaxation(n, table);
    const SolveResult closed = solve_closed_form(n, table);
    const bool unique = counts[static_cast<std::size_t>(n)] == 1;
    if (!unique) sweep.ties.push_back(n);
    if (relaxed.relaxation_fell_back) sweep.relaxation_fallbacks.push_back(n);
    if (exact.objective != relaxed.objective ||
        exact.objective != closed.objective) {
      sweep.objective_mismatches.push_back(n);
    } else if (unique && (exact.partition != relaxed.partition ||
                          exact.partition != closed.partition)) {
      sweep.partition_mismatches.push_back(n);
    }
  }
  return sweep;
}

}  // namespace rule4
