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

#include "greedydp/shortest_paths.h"

#include <cstdint>
#include <limits>
#include <random>

#include "gmock/gmock.h"
#include "greedydp/errors.h"
#include "greedydp/indexed_heap.h"
#include "gtest/gtest.h"

namespace greedydp {
namespace {

using ::testing::ElementsAre;

const ExtLength kNeg = ExtLength::NegInfinite();
const ExtLength kPos = ExtLength::PosInfinite();
ExtLength F(double x) { return ExtLength::Finite(x); }

Digraph Triangle() { return Digraph{3, {{0, 1, 1}, {0, 2, 4}, {1, 2, 2}}, 0}; }

Digraph NegativeCycle() {
  return Digraph{4, {{0, 1, 1}, {1, 2, -2}, {2, 1, -2}}, 0};
}

TEST(ExtLengthTest, OrderAndArithmetic) {
  EXPECT_LT(kNeg, F(-1e300));
  EXPECT_LT(F(-1), F(2));
  EXPECT_LT(F(1e300), kPos);
  EXPECT_EQ(kPos, kPos);
  EXPECT_EQ(F(1) + F(2), F(3));
  EXPECT_EQ(kPos + F(-5), kPos);
  EXPECT_EQ(F(5) + kNeg, kNeg);
  EXPECT_THROW(kPos + kNeg, std::logic_error);
  EXPECT_THROW(kPos.value(), std::logic_error);
  EXPECT_EQ(kNeg.ToString(), "-inf");
  EXPECT_EQ(kPos.ToString(), "inf");
  EXPECT_EQ(F(2.5).ToString(), "2.5");
}

TEST(IndexedMinHeapTest, DecreaseKeyAndTies) {
  IndexedMinHeap heap(5);
  for (int v = 0; v < 5; ++v) heap.Push(v, 10.0 - v);
  heap.DecreaseKey(0, 1.0);
  heap.DecreaseKey(3, 1.0);
  EXPECT_EQ(heap.Pop(), 0);
  EXPECT_EQ(heap.Pop(), 3);
  EXPECT_FALSE(heap.Contains(3));
  EXPECT_EQ(heap.Pop(), 4);
  EXPECT_EQ(heap.size(), 2u);
}

TEST(BellmanFordTest, Triangle) {
  const SSSPResult r = BellmanFord(Triangle());
  EXPECT_THAT(r.dist, ElementsAre(F(0), F(1), F(3)));
  EXPECT_EQ(r.pred[0], std::nullopt);
  EXPECT_EQ(r.pred[1], 0);
  EXPECT_EQ(r.pred[2], 1);
  EXPECT_EQ(OracleDistances(Triangle()), r.dist);
}

TEST(BellmanFordTest, NegativeCycleAndUnreachable) {
  const SSSPResult r = BellmanFord(NegativeCycle());
  EXPECT_THAT(r.dist, ElementsAre(F(0), kNeg, kNeg, kPos));
  EXPECT_EQ(r.pred[1], std::nullopt);
  EXPECT_EQ(r.pred[2], std::nullopt);
  EXPECT_EQ(r.pred[3], std::nullopt);
  EXPECT_EQ(CheckPredecessorTree(NegativeCycle(), r), "");
  EXPECT_EQ(OracleDistances(NegativeCycle()), r.dist);
}

TEST(BellmanFordTest, SingleVertex) {
  const SSSPResult r = BellmanFord(Digraph{1, {}, 0});
  EXPECT_THAT(r.dist, ElementsAre(F(0)));
  EXPECT_EQ(r.pred[0], std::nullopt);
}

TEST(BellmanFordTest, SourceOnNegativeCycle) {
  const Digraph g{3, {{0, 1, 1}, {1, 0, -3}, {2, 2, -1}}, 0};
  const SSSPResult r = BellmanFord(g);
  EXPECT_THAT(r.dist, ElementsAre(kNeg, kNeg, kPos));
  EXPECT_EQ(OracleDistances(g), r.dist);
}

TEST(BellmanFordTest, NegativeSelfLoopDownstream) {
  const Digraph g{3, {{0, 1, 2}, {1, 1, -1}, {1, 2, 0}}, 0};
  EXPECT_THAT(BellmanFord(g).dist, ElementsAre(F(0), kNeg, kNeg));
}

TEST(BellmanFordTest, NegativeEdgesWithoutCycle) {
  const Digraph g{4, {{0, 1, 4}, {0, 2, 1}, {2, 1, -3}, {1, 3, -1}, {3, 2, 5}}, 0};
  const SSSPResult r = BellmanFord(g);
  EXPECT_THAT(r.dist, ElementsAre(F(0), F(-2), F(1), F(-3)));
  EXPECT_EQ(CheckPredecessorTree(g, r), "");
  EXPECT_THAT(RetrievePath(r, 3), ElementsAre(0, 2, 1, 3));
}

TEST(DijkstraTest, TriangleMatchesBellmanFord) {
  const DijkstraResult r = Dijkstra(Triangle());
  const SSSPResult bf = BellmanFord(Triangle());
  EXPECT_EQ(r.paths.dist, bf.dist);
  EXPECT_EQ(r.paths.pred, bf.pred);
  EXPECT_EQ(r.stats.extractions, 3u);
  EXPECT_EQ(r.stats.relaxations, 3u);
  EXPECT_EQ(r.stats.key_decreases, 3u);  // 1, 2 from 0, then 2 again via 1
  EXPECT_THAT(r.stats.extraction_order, ElementsAre(0, 1, 2));
}

TEST(DijkstraTest, StopsAtUnreachable) {
  const Digraph g{4, {{0, 1, 3}, {2, 3, 1}}, 0};
  const DijkstraResult r = Dijkstra(g);
  EXPECT_THAT(r.paths.dist, ElementsAre(F(0), F(3), kPos, kPos));
  EXPECT_EQ(r.stats.extractions, 2u);
  EXPECT_EQ(r.stats.relaxations, 1u);
}

TEST(DijkstraTest, RejectsNegativeEdge) {
  try {
    Dijkstra(Digraph{2, {{0, 1, 1}, {1, 0, -1}}, 0});
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_THAT(e.what(), ::testing::HasSubstr("nonnegative"));
  }
}

TEST(RetrievePathTest, Cases) {
  const SSSPResult r = BellmanFord(Triangle());
  EXPECT_THAT(RetrievePath(r, 0), ElementsAre(0));
  EXPECT_THAT(RetrievePath(r, 2), ElementsAre(0, 1, 2));

  const SSSPResult neg = BellmanFord(NegativeCycle());
  try {
    RetrievePath(neg, 3);
    FAIL();
  } catch (const NoPathError& e) {
    EXPECT_EQ(e.kind(), ExtLength::Kind::kPosInfinite);
  }
  try {
    RetrievePath(neg, 1);
    FAIL();
  } catch (const NoPathError& e) {
    EXPECT_EQ(e.kind(), ExtLength::Kind::kNegInfinite);
  }
}

TEST(OracleDistancesTest, Basics) {
  EXPECT_THAT(OracleDistances(Digraph{3, {}, 0}), ElementsAre(F(0), kPos, kPos));
  Digraph complete{4, {}, 0};
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      if (u != v) complete.edges.push_back({u, v, 1});
    }
  }
  EXPECT_THAT(OracleDistances(complete), ElementsAre(F(0), F(1), F(1), F(1)));
  EXPECT_THROW(OracleDistances(Digraph{11, {}, 0}), CapacityError);
}

TEST(FormatDistancesTest, Lines) {
  EXPECT_EQ(FormatDistances(BellmanFord(NegativeCycle())),
            "0 0 -\n1 -inf -\n2 -inf -\n3 inf -\n");
  EXPECT_EQ(FormatDistances(BellmanFord(Triangle())), "0 0 -\n1 1 0\n2 3 1\n");
}

TEST(ShortestPathsProperty, DijkstraMatchesBellmanFord) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const int m = static_cast<int>(rng() % 401);
    const Digraph g = GenRandomGraph(n, m, rng(), 0, 20);
    const SSSPResult bf = BellmanFord(g);
    const DijkstraResult dj = Dijkstra(g);
    ASSERT_EQ(dj.paths.dist, bf.dist) << SerializeGraph(g);
    ASSERT_EQ(CheckPredecessorTree(g, bf), "");
    ASSERT_EQ(CheckPredecessorTree(g, dj.paths), "");
    ASSERT_LE(dj.stats.key_decreases, dj.stats.relaxations);
    ASSERT_LE(dj.stats.extractions, static_cast<std::uint64_t>(n));
    for (std::size_t k = 1; k < dj.stats.extraction_order.size(); ++k) {
      ASSERT_LE(dj.paths.dist[dj.stats.extraction_order[k - 1]],
                dj.paths.dist[dj.stats.extraction_order[k]]);
    }
  }
}

TEST(ShortestPathsProperty, BellmanFordMatchesOracle) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int m = static_cast<int>(rng() % 20);
    const Digraph g = GenRandomGraph(n, m, rng(), -3, 5);
    const SSSPResult bf = BellmanFord(g);
    ASSERT_EQ(bf.dist, OracleDistances(g)) << SerializeGraph(g);
    ASSERT_EQ(CheckPredecessorTree(g, bf), "");
    for (const Edge& e : g.edges) {
      if (bf.dist[e.tail].is_finite() && bf.dist[e.head].is_finite()) {
        ASSERT_LE(bf.dist[e.head].value(), bf.dist[e.tail].value() + e.length);
      }
    }
    for (int t = 0; t < n; ++t) {
      if (!bf.dist[t].is_finite()) continue;
      const std::vector<int> path = RetrievePath(bf, t);
      double length = 0;
      for (std::size_t k = 1; k < path.size(); ++k) {
        double best = std::numeric_limits<double>::infinity();
        for (const Edge& e : g.edges) {
          if (e.tail == path[k - 1] && e.head == path[k]) best = std::min(best, e.length);
        }
        length += best;
      }
      ASSERT_EQ(length, bf.dist[t].value());
    }
  }
}

TEST(ShortestPathsProperty, StronglyConnectedOperationCounts) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 40);
    const Digraph g = GenStronglyConnectedGraph(n, n + static_cast<int>(seed * 3 % 200), seed, 0, 9);
    const DijkstraResult r = Dijkstra(g);
    ASSERT_EQ(r.stats.extractions, static_cast<std::uint64_t>(n));
    ASSERT_EQ(r.stats.relaxations, g.edges.size());
  }
}

}  // namespace
}  // namespace greedydp
