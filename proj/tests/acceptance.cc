// Copyright 2026 The greedydp Authors
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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "greedydp/instances.h"
#include "greedydp/interval_scheduling.h"
#include "greedydp/knapsack.h"
#include "greedydp/shortest_paths.h"
#include "greedydp/subproblem_lab.h"

namespace greedydp {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Suite {
 public:
  void Run(const std::string& id, const std::string& title, double time_limit_s,
           const std::function<Outcome()>& body) {
    const auto begin = std::chrono::steady_clock::now();
    Outcome outcome = body();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    if (time_limit_s > 0 && seconds >= time_limit_s) {
      outcome.pass = false;
      outcome.detail += " (runtime limit " + std::to_string(time_limit_s) + " s exceeded)";
    }
    std::printf("[%s] %-4s %s: %s [%.2f s]\n", outcome.pass ? "PASS" : "FAIL", id.c_str(),
                title.c_str(), outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!outcome.pass) ++failures_;
  }

  void Note(const std::string& id, const std::string& text) {
    std::printf("[N/A ] %-4s %s\n", id.c_str(), text.c_str());
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::uint64_t Choose2(std::uint64_t k) { return k * (k - 1) / 2; }

Outcome Fig1LowerBound() {
  Outcome o;
  std::string counts;
  for (int m = 2; m <= 14; ++m) {
    const CountReport r = MemoSolve(GenFig1(m), OrderPolicy::Index());
    counts += std::to_string(r.distinct_subproblems) + (m < 14 ? "," : "");
    if (r.distinct_subproblems < (std::uint64_t{1} << m)) {
      o.pass = false;
      o.detail += "m=" + std::to_string(m) + " below 2^m; ";
    }
  }
  o.detail += "distinct for m=2..14: " + counts;
  return o;
}

Outcome SuffixBound() {
  Outcome o;
  int violations = 0;
  int instances = 0;
  auto check = [&](const ISInstance& inst) {
    ++instances;
    const CountReport r = MemoSolve(inst, OrderPolicy::EarliestStart());
    if (r.distinct_subproblems > inst.size() + 1) ++violations;
  };
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    check(GenRandomIS(static_cast<int>(seed % 21), 1000 + seed, seed % 2 == 0));
  }
  for (int m = 1; m <= 10; ++m) {
    check(GenFig1(m));
    check(GenFig2(m));
  }
  o.pass = violations == 0;
  o.detail = std::to_string(violations) + " violations over " + std::to_string(instances) +
             " instances";
  return o;
}

Outcome Fig2Quadratic() {
  Outcome o;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int points = 0;
  for (int m = 5; m <= 40; ++m) {
    const CountReport r = MemoSolve(GenFig2(m), OrderPolicy::EarliestFinish());
    if (r.distinct_subproblems < Choose2(m + 1)) {
      o.pass = false;
      o.detail += "m=" + std::to_string(m) + " below binom(m+1,2); ";
    }
    const double x = std::log(2.0 * m);
    const double y = std::log(static_cast<double>(r.distinct_subproblems));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++points;
  }
  const double slope = (points * sxy - sx * sy) / (points * sxx - sx * sx);
  if (std::abs(slope - 2.0) > 0.2) o.pass = false;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "log-log slope %.4f (want 2.0 +/- 0.2)", slope);
  o.detail += buf;
  return o;
}

Outcome IntervalEquivalence() {
  Outcome o;
  int bad_unit = 0, bad_weighted = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const ISInstance inst = GenRandomIS(static_cast<int>(seed % 17), 2000 + seed, true);
    const ISSolution greedy = GreedyUnit(inst);
    const double dp = DpValue(inst).Opt(1);
    const double brute = BruteForceIS(inst).value;
    if (!IsFeasible(inst, greedy.selected) ||
        static_cast<double>(greedy.selected.size()) != dp || dp != brute) {
      ++bad_unit;
    }
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const ISInstance inst = GenRandomIS(static_cast<int>(seed % 17), 3000 + seed, false);
    const ISOptTable table = DpValue(inst);
    const ISSolution sol = DpRetrieve(inst, table);
    if (table.Opt(1) != BruteForceIS(inst).value || !IsFeasible(inst, sol.selected) ||
        sol.value != table.Opt(1)) {
      ++bad_weighted;
    }
  }
  o.pass = bad_unit == 0 && bad_weighted == 0;
  o.detail = "unit mismatches " + std::to_string(bad_unit) + "/1000, weighted mismatches " +
             std::to_string(bad_weighted) + "/1000";
  return o;
}

// For each suffix start i: j* = arg min next(j) over i..n, smallest index
// on ties; `literal` asks that j* itself have the minimum finish time.
// `attained` asks that the earliest-finish interval reach the same next().
struct IStarCounts {
  int checks = 0;
  int literal_violations = 0;
  int attained_violations = 0;
};

IStarCounts CountIStar() {
  IStarCounts c;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const ISInstance sorted =
        SortByStart(GenRandomIS(1 + static_cast<int>(seed % 16), 4000 + seed, true), nullptr);
    const std::size_t n = sorted.size();
    std::vector<std::size_t> next(n + 1);
    for (std::size_t j = 1; j <= n; ++j) next[j] = NextIndex(sorted, j);
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t arg = i;
      std::size_t earliest = i;
      for (std::size_t j = i; j <= n; ++j) {
        if (next[j] < next[arg]) arg = j;
        if (sorted.intervals[j - 1].finish < sorted.intervals[earliest - 1].finish) earliest = j;
      }
      ++c.checks;
      if (sorted.intervals[arg - 1].finish != sorted.intervals[earliest - 1].finish) {
        ++c.literal_violations;
      }
      if (next[earliest] != next[arg]) ++c.attained_violations;
    }
  }
  return c;
}

Outcome KnapsackEquivalence() {
  Outcome o;
  int bad_dp = 0, bad_greedy = 0, bad_linear = 0, bad_monotone = 0;
  std::mt19937_64 rng(5);
  auto monotone = [](const KSInstance& inst, const KSOptTable& t) {
    for (std::size_t i = 1; i <= inst.size() + 1; ++i) {
      for (std::int64_t w = 0; w <= inst.limit; ++w) {
        if (i <= inst.size() && t.Opt(i, w) < t.Opt(i + 1, w)) return false;
        if (w < inst.limit && t.Opt(i, w) > t.Opt(i, w + 1)) return false;
      }
    }
    return true;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const KSInstance inst = GenRandomKS(static_cast<int>(rng() % 15),
                                        static_cast<std::int64_t>(rng() % 41), rng(), false);
    const KSOptTable table = DpTableKS(inst);
    if (table.Opt(1, inst.limit) != BruteForceKS(inst).total_value) ++bad_dp;
    if (!monotone(inst, table)) ++bad_monotone;
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const KSInstance inst = GenRandomKS(static_cast<int>(rng() % 15),
                                        static_cast<std::int64_t>(rng() % 41), rng(), true);
    const KSOptTable table = DpTableKS(inst);
    const KSSolution greedy = GreedyUnitKS(inst);
    const KSSolution linear = GreedyUnitKSLinear(inst);
    if (!IsFeasible(inst, greedy.selected) ||
        static_cast<double>(greedy.selected.size()) != table.Opt(1, inst.limit)) {
      ++bad_greedy;
    }
    if (!IsFeasible(inst, linear.selected) || linear.selected.size() != greedy.selected.size()) {
      ++bad_linear;
    }
    if (!monotone(inst, table)) ++bad_monotone;
  }
  o.pass = bad_dp + bad_greedy + bad_linear + bad_monotone == 0;
  o.detail = "dp/brute " + std::to_string(bad_dp) + ", greedy/dp " + std::to_string(bad_greedy) +
             ", linear/sort " + std::to_string(bad_linear) + ", monotonicity " +
             std::to_string(bad_monotone) + " mismatches";
  return o;
}

Outcome ShortestPathsDifferential() {
  Outcome o;
  int bad_diff = 0, bad_tree = 0, bad_oracle = 0, neg_inf = 0;
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const int m = static_cast<int>(rng() % 401);
    const Digraph g = GenRandomGraph(n, m, rng(), 0, 20);
    const SSSPResult bf = BellmanFord(g);
    const DijkstraResult dj = Dijkstra(g);
    if (bf.dist != dj.paths.dist) ++bad_diff;
    if (!CheckPredecessorTree(g, bf).empty() || !CheckPredecessorTree(g, dj.paths).empty()) {
      ++bad_tree;
    }
  }
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int m = static_cast<int>(rng() % 20);
    const Digraph g = GenRandomGraph(n, m, rng(), -3, 5);
    const SSSPResult bf = BellmanFord(g);
    if (bf.dist != OracleDistances(g)) ++bad_oracle;
    if (!CheckPredecessorTree(g, bf).empty()) ++bad_tree;
    for (const ExtLength& d : bf.dist) {
      if (d.kind() == ExtLength::Kind::kNegInfinite) {
        ++neg_inf;
        break;
      }
    }
  }
  o.pass = bad_diff + bad_tree + bad_oracle == 0;
  o.detail = "dijkstra/bf " + std::to_string(bad_diff) + "/1000, bf/oracle " +
             std::to_string(bad_oracle) + "/500 (" + std::to_string(neg_inf) +
             " with -inf vertices), tree violations " + std::to_string(bad_tree);
  return o;
}

Outcome DijkstraCounts() {
  Outcome o;
  int bad_counts = 0, bad_order = 0;
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const int m = n + static_cast<int>(rng() % 351);
    const Digraph g = GenStronglyConnectedGraph(n, m, rng(), 0, 20);
    const DijkstraResult r = Dijkstra(g);
    if (r.stats.extractions != static_cast<std::uint64_t>(n) ||
        r.stats.relaxations != static_cast<std::uint64_t>(m)) {
      ++bad_counts;
    }
    const auto& order = r.stats.extraction_order;
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (r.paths.dist[order[k]] < r.paths.dist[order[k - 1]]) {
        ++bad_order;
        break;
      }
    }
  }
  o.pass = bad_counts + bad_order == 0;
  o.detail = "count mismatches " + std::to_string(bad_counts) +
             "/100, decreasing key sequences " + std::to_string(bad_order) + "/100";
  return o;
}

}  // namespace
}  // namespace greedydp

int main() {
  using namespace greedydp;
  Suite suite;
  suite.Run("C1", "fig1 family, index order, distinct >= 2^m (m=2..14)", 30, Fig1LowerBound);
  suite.Run("C2", "earliest start order, distinct <= n+1", 0, SuffixBound);
  suite.Run("C3", "fig2 family, earliest finish order, quadratic growth", 60, Fig2Quadratic);
  suite.Run("C4", "interval scheduling greedy = dp = brute force", 60, IntervalEquivalence);

  const IStarCounts istar = CountIStar();
  suite.Run("C5", "smallest-index arg min next(j) has the minimum finish time", 0, [&] {
    return Outcome{istar.literal_violations == 0,
                   std::to_string(istar.literal_violations) + " violations over " +
                       std::to_string(istar.checks) +
                       " (instance, i) checks; ties in next() let a later-finishing "
                       "interval win, e.g. [0,5),[1,3)"};
  });
  suite.Run("C5b", "earliest-finish interval attains min next(j)", 0, [&] {
    return Outcome{istar.attained_violations == 0,
                   std::to_string(istar.attained_violations) + " violations over " +
                       std::to_string(istar.checks) + " checks"};
  });

  suite.Run("C6", "knapsack dp = brute, greedy = dp, linear = sort, monotone tables", 60,
            KnapsackEquivalence);
  suite.Run("C7", "shortest paths differential and oracle", 90, ShortestPathsDifferential);
  suite.Run("C8", "Dijkstra extractions = n, relaxations = m, keys non-decreasing", 0,
            DijkstraCounts);
  suite.Note("C9", "asymptotic running times are covered by the count criteria C1-C3, C8");

  std::printf("%d criterion(s) failed\n", suite.failures());
  return suite.failures() == 0 ? 0 : 1;
}
