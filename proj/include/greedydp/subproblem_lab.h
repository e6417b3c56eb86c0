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

#ifndef GREEDYDP_SUBPROBLEM_LAB_H_
#define GREEDYDP_SUBPROBLEM_LAB_H_

// Memoized top-down interval scheduling keyed on the exact set of remaining
// components. Reports how many distinct sets the recursion touches under a
// chosen component order.

#include <cstdint>
#include <string>
#include <vector>

#include "greedydp/instances.h"

namespace greedydp {

enum class OrderKind {
  kEarliestStart,   // by (start, original index)
  kEarliestFinish,  // by (finish, original index)
  kIndex,           // original index order, i.e. Given(1..n)
  kGiven,           // explicit permutation
};

struct OrderPolicy {
  OrderKind kind = OrderKind::kEarliestStart;
  // For kGiven: permutation[r] is the 1-based original index placed at rank r.
  std::vector<std::size_t> permutation;

  static OrderPolicy EarliestStart() { return {OrderKind::kEarliestStart, {}}; }
  static OrderPolicy EarliestFinish() { return {OrderKind::kEarliestFinish, {}}; }
  static OrderPolicy Index() { return {OrderKind::kIndex, {}}; }
  static OrderPolicy Given(std::vector<std::size_t> permutation) {
    return {OrderKind::kGiven, std::move(permutation)};
  }
};

// 1-based original indices in recursion order. Throws std::invalid_argument
// if a Given permutation is not a bijection on 1..n.
std::vector<std::size_t> ResolveOrder(const ISInstance& inst,
                                      const OrderPolicy& order);

struct CountReport {
  std::uint64_t distinct_subproblems = 0;  // includes the root and, if hit, {}
  std::uint64_t recursive_calls = 0;       // every invocation, memo hits too
  double optimal_value = 0;
};

struct MemoLimits {
  std::size_t max_components = 4096;
  std::uint64_t max_subproblems = std::uint64_t{1} << 25;
};

// Full memoized evaluation, both branches always explored. If `keys` is
// non-null it receives every distinct subproblem as an ascending list of
// original indices, in first-visit order. Throws CapacityError when a limit
// in `limits` is exceeded.
CountReport MemoSolve(const ISInstance& inst, const OrderPolicy& order,
                      std::vector<std::vector<std::size_t>>* keys = nullptr,
                      const MemoLimits& limits = {});

enum class Family { kFig1, kFig2 };

struct ScalingRow {
  int m = 0;
  std::size_t n = 0;
  std::uint64_t distinct = 0;
  std::uint64_t calls = 0;
};

// One MemoSolve per m on the chosen family. m is capped at 31 for
// Fig1 in index/given order and at 200 otherwise (CapacityError).
std::vector<ScalingRow> CountScaling(Family family, const OrderPolicy& order,
                                     const std::vector<int>& m_values);

// "m,n,distinct,calls" header plus one row per entry.
std::string ScalingCsv(const std::vector<ScalingRow>& rows);

}  // namespace greedydp

#endif  // GREEDYDP_SUBPROBLEM_LAB_H_
