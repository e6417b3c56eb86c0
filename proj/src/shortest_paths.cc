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

#include <algorithm>
#include <cstdint>
#include <deque>
#include <span>
#include <limits>
#include <string>

#include "greedydp/errors.h"
#include "greedydp/indexed_heap.h"

namespace greedydp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Outgoing edges grouped by tail, each group in edge-list order.
struct Adjacency {
  std::vector<std::size_t> begin;  // size n+1
  std::vector<Edge> out;

  explicit Adjacency(const Digraph& g) : begin(g.vertex_count + 1, 0) {
    for (const Edge& e : g.edges) ++begin[e.tail + 1];
    for (int v = 0; v < g.vertex_count; ++v) begin[v + 1] += begin[v];
    out.resize(g.edges.size());
    std::vector<std::size_t> fill(begin.begin(), begin.end() - 1);
    for (const Edge& e : g.edges) out[fill[e.tail]++] = e;
  }

  auto Of(int v) const {
    return std::span<const Edge>(out.data() + begin[v], begin[v + 1] - begin[v]);
  }
};

void ValidateGraph(const Digraph& g) {
  g.Validate();
  if (g.vertex_count < 1) throw std::invalid_argument("graph has no vertices");
}

}  // namespace

double ExtLength::value() const {
  if (!is_finite()) throw std::logic_error("value() of an infinite length");
  return value_;
}

std::partial_ordering operator<=>(const ExtLength& a, const ExtLength& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  if (a.is_finite()) return a.value_ <=> b.value_;
  return std::partial_ordering::equivalent;
}

ExtLength operator+(const ExtLength& a, const ExtLength& b) {
  using Kind = ExtLength::Kind;
  const bool mixed = (a.kind_ == Kind::kNegInfinite && b.kind_ == Kind::kPosInfinite) ||
                     (a.kind_ == Kind::kPosInfinite && b.kind_ == Kind::kNegInfinite);
  if (mixed) throw std::logic_error("adding -inf and +inf");
  if (a.is_finite() && b.is_finite()) return ExtLength::Finite(a.value_ + b.value_);
  return a.is_finite() ? b : a;
}

std::string ExtLength::ToString() const {
  switch (kind_) {
    case Kind::kNegInfinite:
      return "-inf";
    case Kind::kPosInfinite:
      return "inf";
    case Kind::kFinite:
      break;
  }
  return FormatReal(value_);
}

SSSPResult BellmanFord(const Digraph& g) {
  ValidateGraph(g);
  const int n = g.vertex_count;
  std::vector<double> dist(n, kInf);
  std::vector<std::optional<int>> pred(n);
  dist[g.source] = 0;

  for (int round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (const Edge& e : g.edges) {
      if (dist[e.tail] == kInf) continue;
      const double candidate = dist[e.tail] + e.length;
      if (candidate < dist[e.head]) {
        dist[e.head] = candidate;
        pred[e.head] = e.tail;
        changed = true;
      }
    }
    if (!changed) break;
  }

  // Still improvable after n-1 rounds: on or behind a negative cycle.
  std::vector<bool> negative(n, false);
  std::deque<int> frontier;
  for (const Edge& e : g.edges) {
    if (dist[e.tail] == kInf) continue;
    if (dist[e.tail] + e.length < dist[e.head] && !negative[e.head]) {
      negative[e.head] = true;
      frontier.push_back(e.head);
    }
  }
  const Adjacency adj(g);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop_front();
    for (const Edge& e : adj.Of(u)) {
      if (!negative[e.head]) {
        negative[e.head] = true;
        frontier.push_back(e.head);
      }
    }
  }

  SSSPResult result;
  result.source = g.source;
  result.dist.resize(n);
  result.pred.resize(n);
  for (int v = 0; v < n; ++v) {
    if (negative[v]) {
      result.dist[v] = ExtLength::NegInfinite();
    } else if (dist[v] == kInf) {
      result.dist[v] = ExtLength::PosInfinite();
    } else {
      result.dist[v] = ExtLength::Finite(dist[v]);
      if (v != g.source) result.pred[v] = pred[v];
    }
  }
  return result;
}

DijkstraResult Dijkstra(const Digraph& g) {
  ValidateGraph(g);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (g.edges[i].length < 0) {
      throw PreconditionError("Dijkstra requires nonnegative edge lengths; edge " +
                              std::to_string(i + 1) + " has length " +
                              FormatReal(g.edges[i].length));
    }
  }
  const int n = g.vertex_count;
  const Adjacency adj(g);
  DijkstraResult result;
  SSSPResult& paths = result.paths;
  DijkstraStats& stats = result.stats;
  paths.source = g.source;
  paths.dist.assign(n, ExtLength::PosInfinite());
  paths.pred.assign(n, std::nullopt);

  IndexedMinHeap queue(n);
  for (int v = 0; v < n; ++v) queue.Push(v, v == g.source ? 0.0 : kInf);

  while (!queue.empty() && queue.Key(queue.Top()) < kInf) {
    const double key = queue.Key(queue.Top());
    const int u = queue.Pop();
    ++stats.extractions;
    stats.extraction_order.push_back(u);
    paths.dist[u] = ExtLength::Finite(key);
    for (const Edge& e : adj.Of(u)) {
      ++stats.relaxations;
      if (!queue.Contains(e.head)) continue;
      const double candidate = key + e.length;
      if (candidate < queue.Key(e.head)) {
        queue.DecreaseKey(e.head, candidate);
        paths.pred[e.head] = u;
        ++stats.key_decreases;
      }
    }
  }
  return result;
}

namespace {

std::string NoPathMessage(int target, ExtLength::Kind kind) {
  if (kind == ExtLength::Kind::kNegInfinite) {
    return "no shortest path to " + std::to_string(target) +
           ": distance is -inf (negative cycle)";
  }
  return "no path to " + std::to_string(target) + ": distance is inf (unreachable)";
}

}  // namespace

NoPathError::NoPathError(int target, ExtLength::Kind kind)
    : std::runtime_error(NoPathMessage(target, kind)), target_(target), kind_(kind) {}

std::vector<int> RetrievePath(const SSSPResult& result, int target) {
  const int n = static_cast<int>(result.dist.size());
  if (target < 0 || target >= n) throw std::out_of_range("target vertex out of range");
  if (!result.dist[target].is_finite()) {
    throw NoPathError(target, result.dist[target].kind());
  }
  std::vector<int> path{target};
  int v = target;
  while (v != result.source) {
    if (!result.pred[v] || static_cast<int>(path.size()) > n) {
      throw std::logic_error("predecessors do not lead back to the source");
    }
    v = *result.pred[v];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<ExtLength> OracleDistances(const Digraph& g) {
  ValidateGraph(g);
  const int n = g.vertex_count;
  if (n > kOracleMaxVertices) {
    throw CapacityError("path-enumeration oracle limited to " +
                        std::to_string(kOracleMaxVertices) + " vertices");
  }
  // Cheapest edge per ordered pair; parallel edges never help otherwise.
  std::vector<std::vector<double>> cheapest(n, std::vector<double>(n, kInf));
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges) {
    cheapest[e.tail][e.head] = std::min(cheapest[e.tail][e.head], e.length);
    reach[e.tail][e.head] = true;
  }
  for (int v = 0; v < n; ++v) reach[v][v] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }

  // Minimum over simple paths from the source.
  std::vector<double> best(n, kInf);
  auto walk = [&](auto&& self, int v, std::uint32_t visited, double length) -> void {
    best[v] = std::min(best[v], length);
    for (int w = 0; w < n; ++w) {
      if (cheapest[v][w] == kInf || (visited >> w & 1u)) continue;
      self(self, w, visited | 1u << w, length + cheapest[v][w]);
    }
  };
  walk(walk, g.source, 1u << g.source, 0.0);

  // Vertices lying on some negative simple cycle. Each cycle is enumerated
  // from its smallest vertex.
  std::vector<bool> on_negative_cycle(n, false);
  for (int c = 0; c < n; ++c) {
    auto cycle = [&](auto&& self, int v, std::uint32_t members, double length) -> void {
      if (cheapest[v][c] != kInf && length + cheapest[v][c] < 0) {
        for (int u = 0; u < n; ++u) {
          if (members >> u & 1u) on_negative_cycle[u] = true;
        }
      }
      for (int w = c + 1; w < n; ++w) {
        if (cheapest[v][w] == kInf || (members >> w & 1u)) continue;
        self(self, w, members | 1u << w, length + cheapest[v][w]);
      }
    };
    cycle(cycle, c, 1u << c, 0.0);
  }

  std::vector<ExtLength> dist(n);
  for (int t = 0; t < n; ++t) {
    if (!reach[g.source][t]) {
      dist[t] = ExtLength::PosInfinite();
      continue;
    }
    bool unbounded = false;
    for (int c = 0; c < n && !unbounded; ++c) {
      unbounded = on_negative_cycle[c] && reach[g.source][c] && reach[c][t];
    }
    dist[t] = unbounded ? ExtLength::NegInfinite() : ExtLength::Finite(best[t]);
  }
  return dist;
}

std::string CheckPredecessorTree(const Digraph& g, const SSSPResult& result) {
  const int n = g.vertex_count;
  if (static_cast<int>(result.dist.size()) != n ||
      static_cast<int>(result.pred.size()) != n) {
    return "result size does not match graph";
  }
  if (result.source != g.source) return "wrong source";
  for (int t = 0; t < n; ++t) {
    const bool wants_pred = t != g.source && result.dist[t].is_finite();
    if (wants_pred != result.pred[t].has_value()) {
      return "vertex " + std::to_string(t) +
             (wants_pred ? " is missing a predecessor" : " has a stray predecessor");
    }
    if (!wants_pred) continue;
    const int p = *result.pred[t];
    if (p < 0 || p >= n || !result.dist[p].is_finite()) {
      return "predecessor of " + std::to_string(t) + " has no finite distance";
    }
    const bool tight = std::any_of(g.edges.begin(), g.edges.end(), [&](const Edge& e) {
      return e.tail == p && e.head == t &&
             result.dist[p].value() + e.length == result.dist[t].value();
    });
    if (!tight) {
      return "no tight edge " + std::to_string(p) + "->" + std::to_string(t);
    }
  }
  for (int t = 0; t < n; ++t) {
    if (!result.pred[t]) continue;
    int v = t;
    int steps = 0;
    while (v != g.source && result.pred[v] && steps <= n) {
      v = *result.pred[v];
      ++steps;
    }
    if (v != g.source) {
      return "predecessors of " + std::to_string(t) + " do not reach the source";
    }
  }
  return {};
}

std::string FormatDistances(const SSSPResult& result) {
  std::string out;
  for (std::size_t t = 0; t < result.dist.size(); ++t) {
    out += std::to_string(t) + " " + result.dist[t].ToString() + " " +
           (result.pred[t] ? std::to_string(*result.pred[t]) : std::string("-")) +
           "\n";
  }
  return out;
}

}  // namespace greedydp
