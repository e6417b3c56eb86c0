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

#ifndef GREEDYDP_SHORTEST_PATHS_H_
#define GREEDYDP_SHORTEST_PATHS_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "greedydp/instances.h"

namespace greedydp {

// Distance domain {-inf} + reals + {+inf}.
class ExtLength {
 public:
  enum class Kind { kNegInfinite, kFinite, kPosInfinite };

  static constexpr ExtLength NegInfinite() { return ExtLength(Kind::kNegInfinite, 0); }
  static constexpr ExtLength Finite(double x) { return ExtLength(Kind::kFinite, x); }
  static constexpr ExtLength PosInfinite() { return ExtLength(Kind::kPosInfinite, 0); }

  constexpr ExtLength() = default;

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  // Throws std::logic_error unless finite.
  double value() const;

  friend std::partial_ordering operator<=>(const ExtLength& a, const ExtLength& b);
  friend bool operator==(const ExtLength& a, const ExtLength& b) {
    return (a <=> b) == std::partial_ordering::equivalent;
  }

  // Opposite infinities never meet; combining them throws std::logic_error.
  friend ExtLength operator+(const ExtLength& a, const ExtLength& b);

  // Decimal, "inf" or "-inf".
  std::string ToString() const;

 private:
  constexpr ExtLength(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_ = Kind::kPosInfinite;
  double value_ = 0;
};

struct SSSPResult {
  int source = 0;
  std::vector<ExtLength> dist;
  // Set exactly on vertices t != source with finite distance.
  std::vector<std::optional<int>> pred;
};

struct DijkstraStats {
  std::uint64_t extractions = 0;
  std::uint64_t relaxations = 0;
  std::uint64_t key_decreases = 0;
  std::vector<int> extraction_order;
};

struct DijkstraResult {
  SSSPResult paths;
  DijkstraStats stats;
};

// n-1 rounds over the edge list (stopping early once stable), then one more
// pass: every vertex that can still improve seeds a forward sweep marking
// -inf. Any real lengths.
SSSPResult BellmanFord(const Digraph& g);

// Indexed binary heap, all vertices inserted up front. Stops once the
// minimum key is +inf. Throws PreconditionError on a negative length.
DijkstraResult Dijkstra(const Digraph& g);

class NoPathError : public std::runtime_error {
 public:
  NoPathError(int target, ExtLength::Kind kind);

  int target() const { return target_; }
  // kPosInfinite: unreachable. kNegInfinite: no shortest path.
  ExtLength::Kind kind() const { return kind_; }

 private:
  int target_;
  ExtLength::Kind kind_;
};

// Vertices source..t following predecessors backwards.
std::vector<int> RetrievePath(const SSSPResult& result, int target);

inline constexpr int kOracleMaxVertices = 10;

// Distances from first principles: minimum over simple paths, -inf when a
// negative simple cycle lies on some source-to-t walk, +inf when t is
// unreachable. Throws CapacityError for more than 10 vertices.
std::vector<ExtLength> OracleDistances(const Digraph& g);

// Empty when `result` satisfies the predecessor-tree contract for `g`,
// otherwise a description of the first violation.
std::string CheckPredecessorTree(const Digraph& g, const SSSPResult& result);

// One line per vertex: "t d p" with p a vertex id or "-".
std::string FormatDistances(const SSSPResult& result);

}  // namespace greedydp

#endif  // GREEDYDP_SHORTEST_PATHS_H_
