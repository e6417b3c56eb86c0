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

#ifndef GREEDYDP_INSTANCES_H_
#define GREEDYDP_INSTANCES_H_

// Problem instances for interval scheduling, knapsack and single-source
// shortest paths, plus deterministic generators and the plain-text formats.
//
// Component indices exposed to callers (selected sets, permutations) are
// 1-based throughout the library; vertex ids are 0-based.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace greedydp {

// Half-open interval [start, finish), start < finish.
struct Interval {
  double start = 0;
  double finish = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// [a.start, a.finish) and [b.start, b.finish) share a point.
inline bool Overlaps(const Interval& a, const Interval& b) {
  return a.start < b.finish && b.start < a.finish;
}

struct ISInstance {
  std::vector<Interval> intervals;
  std::vector<double> values;

  std::size_t size() const { return intervals.size(); }
  // Throws std::invalid_argument on empty intervals, negative values or
  // mismatched lengths.
  void Validate() const;

  friend bool operator==(const ISInstance&, const ISInstance&) = default;
};

struct KSInstance {
  std::vector<std::int64_t> weights;
  std::vector<double> values;
  std::int64_t limit = 0;

  std::size_t size() const { return weights.size(); }
  void Validate() const;

  friend bool operator==(const KSInstance&, const KSInstance&) = default;
};

struct Edge {
  int tail = 0;
  int head = 0;
  double length = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Parallel edges and self-loops are allowed.
struct Digraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  int source = 0;

  void Validate() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

// Text formats. Parsers throw ParseError carrying the offending line.
//
//   IS:    "n" then n lines "s f v"
//   KS:    "n W" then n lines "w v"
//   graph: "n m s" then m lines "u v len"
ISInstance ParseIS(std::string_view text);
std::string SerializeIS(const ISInstance& inst);
KSInstance ParseKS(std::string_view text);
std::string SerializeKS(const KSInstance& inst);
Digraph ParseGraph(std::string_view text);
std::string SerializeGraph(const Digraph& g);

// Shortest decimal that parses back to exactly `x`.
std::string FormatReal(double x);

// Figure-1 family: I_x = [4x, 4x+2), I_{m+x} = [4x+1, 4x+3) for x in 1..m,
// unit values, emitted in index order 1..2m. Each I_x overlaps only I_{m+x},
// so an arbitrary recursion order can leave any subset of the second half.
ISInstance GenFig1(int m);

// Figure-2 family, emitted earliest finish first: short I_x = [3x, 3x+2) and
// long I_{m+x} = [3x+1, 3m+4+x). Picking I_l removes exactly the long
// intervals I_{m+1}..I_{m+l}.
ISInstance GenFig2(int m);

// Integer-valued times with start in [0, 4n] and length in [1, 10]. Values
// are 1 when `unit_values`, otherwise multiples of 1/8 in [0, 10] so sums
// are exact in binary floating point.
ISInstance GenRandomIS(int n, std::uint64_t seed, bool unit_values);

// Weights uniform in [0, limit]; values as in GenRandomIS.
KSInstance GenRandomKS(int n, std::int64_t limit, std::uint64_t seed,
                       bool unit_values);

// `edges` edges with uniformly random endpoints and integer lengths in
// [min_len, max_len], source 0.
Digraph GenRandomGraph(int n, int edges, std::uint64_t seed,
                       std::int64_t min_len, std::int64_t max_len);

// Like GenRandomGraph but the first n edges form a random Hamiltonian cycle,
// so the result is strongly connected. Requires edges >= n.
Digraph GenStronglyConnectedGraph(int n, int edges, std::uint64_t seed,
                                  std::int64_t min_len, std::int64_t max_len);

}  // namespace greedydp

#endif  // GREEDYDP_INSTANCES_H_
