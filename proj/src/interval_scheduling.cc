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

#include "greedydp/interval_scheduling.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "greedydp/errors.h"
#include "lex_order.h"

namespace greedydp {
namespace {

void RequireUnitValues(const ISInstance& inst) {
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (inst.values[i] != 1.0) {
      throw PreconditionError("unit values required: value of interval " +
                              std::to_string(i + 1) + " is not 1");
    }
  }
}

}  // namespace

ISInstance SortByStart(const ISInstance& inst, std::vector<std::size_t>* perm) {
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.intervals[a].start < inst.intervals[b].start;
  });
  ISInstance sorted;
  sorted.intervals.reserve(inst.size());
  sorted.values.reserve(inst.size());
  for (std::size_t k : order) {
    sorted.intervals.push_back(inst.intervals[k]);
    sorted.values.push_back(inst.values[k]);
  }
  if (perm != nullptr) {
    perm->clear();
    for (std::size_t k : order) perm->push_back(k + 1);
  }
  return sorted;
}

std::size_t NextIndex(const ISInstance& sorted, std::size_t i) {
  const std::size_t n = sorted.size();
  if (i < 1 || i > n) {
    throw std::out_of_range("NextIndex: position " + std::to_string(i) +
                            " outside [1, " + std::to_string(n) + "]");
  }
  const double finish = sorted.intervals[i - 1].finish;
  auto first = sorted.intervals.begin() + static_cast<std::ptrdiff_t>(i - 1);
  auto it = std::partition_point(first, sorted.intervals.end(),
                                 [&](const Interval& iv) { return iv.start < finish; });
  return static_cast<std::size_t>(it - sorted.intervals.begin()) + 1;
}

ISOptTable DpValue(const ISInstance& inst) {
  inst.Validate();
  ISOptTable table;
  const ISInstance sorted = SortByStart(inst, &table.order);
  const std::size_t n = sorted.size();
  table.next.resize(n);
  for (std::size_t i = 1; i <= n; ++i) table.next[i - 1] = NextIndex(sorted, i);
  table.opt.assign(n + 1, 0.0);
  for (std::size_t i = n; i >= 1; --i) {
    const double skip = table.opt[i];
    const double take = sorted.values[i - 1] + table.opt[table.next[i - 1] - 1];
    table.opt[i - 1] = std::max(skip, take);
  }
  return table;
}

ISSolution DpRetrieve(const ISInstance& inst, const ISOptTable& table) {
  const std::size_t n = table.size();
  if (inst.size() != n || table.opt.size() != n + 1) {
    throw std::invalid_argument("DpRetrieve: table does not match instance");
  }
  ISSolution sol;
  std::size_t i = 1;
  while (i <= n) {
    if (table.Opt(i) == table.Opt(i + 1)) {
      ++i;
    } else {
      sol.selected.push_back(table.order[i - 1]);
      i = table.Next(i);
    }
  }
  std::sort(sol.selected.begin(), sol.selected.end());
  for (std::size_t k : sol.selected) sol.value += inst.values[k - 1];
  return sol;
}

ISSolution GreedyUnit(const ISInstance& inst) {
  inst.Validate();
  RequireUnitValues(inst);
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.intervals[a].finish < inst.intervals[b].finish;
  });
  ISSolution sol;
  double frontier = -std::numeric_limits<double>::infinity();
  for (std::size_t k : order) {
    if (inst.intervals[k].start >= frontier) {
      sol.selected.push_back(k + 1);
      frontier = inst.intervals[k].finish;
    }
  }
  std::sort(sol.selected.begin(), sol.selected.end());
  sol.value = static_cast<double>(sol.selected.size());
  return sol;
}

ISSolution BruteForceIS(const ISInstance& inst) {
  inst.Validate();
  const std::size_t n = inst.size();
  if (n > kBruteForceISMax) {
    throw CapacityError("brute force limited to " +
                        std::to_string(kBruteForceISMax) + " intervals, got " +
                        std::to_string(n));
  }
  std::vector<std::uint32_t> conflicts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && Overlaps(inst.intervals[i], inst.intervals[j])) {
        conflicts[i] |= 1u << j;
      }
    }
  }

  std::uint32_t best_mask = 0;
  double best_value = 0;
  // Depth-first over independent sets; `value` accumulates in index order.
  auto visit = [&](auto&& self, std::size_t i, std::uint32_t mask,
                   std::uint32_t blocked, double value) -> void {
    if (i == n) {
      if (value > best_value ||
          (value == best_value && mask != best_mask && internal::LexLess(mask, best_mask))) {
        best_value = value;
        best_mask = mask;
      }
      return;
    }
    if (!(blocked >> i & 1u)) {
      self(self, i + 1, mask | 1u << i, blocked | conflicts[i],
           value + inst.values[i]);
    }
    self(self, i + 1, mask, blocked, value);
  };
  visit(visit, 0, 0, 0, 0.0);

  ISSolution sol;
  for (std::size_t i = 0; i < n; ++i) {
    if (best_mask >> i & 1u) sol.selected.push_back(i + 1);
  }
  sol.value = best_value;
  return sol;
}

bool IsFeasible(const ISInstance& inst, const std::vector<std::size_t>& selected) {
  for (std::size_t a = 0; a < selected.size(); ++a) {
    if (selected[a] < 1 || selected[a] > inst.size()) return false;
    for (std::size_t b = a + 1; b < selected.size(); ++b) {
      if (selected[a] == selected[b]) return false;
      if (Overlaps(inst.intervals[selected[a] - 1],
                   inst.intervals[selected[b] - 1])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace greedydp
