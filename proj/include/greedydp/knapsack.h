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

#ifndef GREEDYDP_KNAPSACK_H_
#define GREEDYDP_KNAPSACK_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "greedydp/instances.h"

namespace greedydp {

// OPT(i, w) for items i..n (1-based, row n+1 is the empty suffix) and
// weight limit w in 0..W. All rows are kept so retrieval can revisit them.
class KSOptTable {
 public:
  KSOptTable(std::size_t items, std::int64_t limit);

  std::size_t items() const { return items_; }
  std::int64_t limit() const { return limit_; }

  double Opt(std::size_t i, std::int64_t w) const { return cells_[Offset(i, w)]; }
  double& MutableOpt(std::size_t i, std::int64_t w) { return cells_[Offset(i, w)]; }

 private:
  std::size_t Offset(std::size_t i, std::int64_t w) const;

  std::size_t items_;
  std::int64_t limit_;
  std::vector<double> cells_;
};

struct KSSolution {
  std::vector<std::size_t> selected;  // original 1-based indices, ascending
  std::int64_t total_weight = 0;
  double total_value = 0;
};

inline constexpr std::uint64_t kDefaultKSCellCap = 100'000'000;

// Row-by-row from i = n down to 1. Throws CapacityError when the
// (n+1) x (W+1) table would exceed `cell_cap` cells.
KSOptTable DpTableKS(const KSInstance& inst,
                     std::uint64_t cell_cap = kDefaultKSCellCap);

// From (1, W): skip i when OPT(i, w) == OPT(i+1, w), otherwise take it and
// continue at (i+1, w - w_i).
KSSolution DpRetrieveKS(const KSInstance& inst, const KSOptTable& table);

// Lightest first, longest fitting prefix. Ties by original index. Throws
// PreconditionError unless all values are exactly 1.
KSSolution GreedyUnitKS(const KSInstance& inst);

// Same answer size as GreedyUnitKS in O(n): repeatedly selects the median of
// the remaining candidates and keeps whichever half the budget decides.
KSSolution GreedyUnitKSLinear(const KSInstance& inst);

inline constexpr std::size_t kBruteForceKSMax = 24;

// Exhaustive search; lexicographically least optimal index sequence.
KSSolution BruteForceKS(const KSInstance& inst);

bool IsFeasible(const KSInstance& inst, const std::vector<std::size_t>& selected);

}  // namespace greedydp

#endif  // GREEDYDP_KNAPSACK_H_
