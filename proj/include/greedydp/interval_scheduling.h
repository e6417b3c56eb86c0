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

#ifndef GREEDYDP_INTERVAL_SCHEDULING_H_
#define GREEDYDP_INTERVAL_SCHEDULING_H_

#include <cstddef>
#include <vector>

#include "greedydp/instances.h"

namespace greedydp {

// Bottom-up table for weighted interval scheduling over the components
// sorted earliest start first. Positions are 1-based: position i is the i-th
// component in start order, and position n+1 is the empty suffix.
struct ISOptTable {
  // opt[i - 1] = best value using positions i..n; opt[n] = 0.
  std::vector<double> opt;
  // order[i - 1] = original (1-based) index of the component at position i.
  std::vector<std::size_t> order;
  // next[i - 1] = first position k >= i whose start is >= finish of i,
  // or n+1.
  std::vector<std::size_t> next;

  std::size_t size() const { return order.size(); }
  double Opt(std::size_t i) const { return opt.at(i - 1); }
  std::size_t Next(std::size_t i) const { return next.at(i - 1); }
};

struct ISSolution {
  std::vector<std::size_t> selected;  // original 1-based indices, ascending
  double value = 0;
};

// Sorted copy of `inst` by (start, original index) together with the
// permutation applied; perm[k] is the 1-based original index now at k.
ISInstance SortByStart(const ISInstance& inst, std::vector<std::size_t>* perm);

// Least position k in [i, n+1] with start(k) >= finish(i), by binary search.
// `sorted` must be ordered by non-decreasing start. Throws std::out_of_range
// unless 1 <= i <= n.
std::size_t NextIndex(const ISInstance& sorted, std::size_t i);

ISOptTable DpValue(const ISInstance& inst);

// Walks the table from position 1: skip i when OPT(i) == OPT(i+1), otherwise
// take it and jump to next(i).
ISSolution DpRetrieve(const ISInstance& inst, const ISOptTable& table);

// Earliest finish first sweep. Throws PreconditionError unless every value
// is exactly 1.
ISSolution GreedyUnit(const ISInstance& inst);

// Exhaustive search over independent sets; ties resolved towards the
// lexicographically least index sequence. Throws CapacityError for n > 24.
ISSolution BruteForceIS(const ISInstance& inst);

inline constexpr std::size_t kBruteForceISMax = 24;

// True when the selected components are pairwise disjoint.
bool IsFeasible(const ISInstance& inst, const std::vector<std::size_t>& selected);

}  // namespace greedydp

#endif  // GREEDYDP_INTERVAL_SCHEDULING_H_
