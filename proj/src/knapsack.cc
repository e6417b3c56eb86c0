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

#include "greedydp/knapsack.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "greedydp/errors.h"
#include "greedydp/selection.h"
#include "lex_order.h"

namespace greedydp {
namespace {

void RequireUnitValues(const KSInstance& inst) {
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (inst.values[i] != 1.0) {
      throw PreconditionError("unit values required: value of item " +
                              std::to_string(i + 1) + " is not 1");
    }
  }
}

KSSolution MakeSolution(const KSInstance& inst, std::vector<std::size_t> selected) {
  KSSolution sol;
  std::sort(selected.begin(), selected.end());
  for (std::size_t k : selected) {
    sol.total_weight += inst.weights[k - 1];
    sol.total_value += inst.values[k - 1];
  }
  sol.selected = std::move(selected);
  return sol;
}

}  // namespace

KSOptTable::KSOptTable(std::size_t items, std::int64_t limit)
    : items_(items), limit_(limit) {
  cells_.assign((items + 1) * static_cast<std::size_t>(limit + 1), 0.0);
}

std::size_t KSOptTable::Offset(std::size_t i, std::int64_t w) const {
  if (i < 1 || i > items_ + 1 || w < 0 || w > limit_) {
    throw std::out_of_range("KSOptTable: cell (" + std::to_string(i) + ", " +
                            std::to_string(w) + ") out of range");
  }
  return (i - 1) * static_cast<std::size_t>(limit_ + 1) + static_cast<std::size_t>(w);
}

KSOptTable DpTableKS(const KSInstance& inst, std::uint64_t cell_cap) {
  inst.Validate();
  const std::size_t n = inst.size();
  const auto columns = static_cast<std::uint64_t>(inst.limit) + 1;
  if (columns > cell_cap / (n + 1)) {
    throw CapacityError("knapsack table of " + std::to_string(n + 1) + " x " +
                        std::to_string(columns) + " cells exceeds cap " +
                        std::to_string(cell_cap));
  }
  KSOptTable table(n, inst.limit);
  for (std::size_t i = n; i >= 1; --i) {
    const std::int64_t wi = inst.weights[i - 1];
    const double vi = inst.values[i - 1];
    for (std::int64_t w = 0; w <= inst.limit; ++w) {
      double best = table.Opt(i + 1, w);
      if (wi <= w) best = std::max(best, vi + table.Opt(i + 1, w - wi));
      table.MutableOpt(i, w) = best;
    }
  }
  return table;
}

KSSolution DpRetrieveKS(const KSInstance& inst, const KSOptTable& table) {
  if (table.items() != inst.size() || table.limit() != inst.limit) {
    throw std::invalid_argument("DpRetrieveKS: table does not match instance");
  }
  std::vector<std::size_t> selected;
  std::int64_t w = inst.limit;
  for (std::size_t i = 1; i <= inst.size(); ++i) {
    if (table.Opt(i, w) != table.Opt(i + 1, w)) {
      selected.push_back(i);
      w -= inst.weights[i - 1];
    }
  }
  return MakeSolution(inst, std::move(selected));
}

KSSolution GreedyUnitKS(const KSInstance& inst) {
  inst.Validate();
  RequireUnitValues(inst);
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.weights[a - 1] < inst.weights[b - 1];
  });
  std::vector<std::size_t> selected;
  std::int64_t room = inst.limit;
  for (std::size_t k : order) {
    if (inst.weights[k - 1] > room) break;
    room -= inst.weights[k - 1];
    selected.push_back(k);
  }
  return MakeSolution(inst, std::move(selected));
}

KSSolution GreedyUnitKSLinear(const KSInstance& inst) {
  inst.Validate();
  RequireUnitValues(inst);
  // (weight, index) pairs are distinct, so the lightest-first prefix is
  // unique and matches the sort-based greedy exactly.
  std::vector<std::pair<std::int64_t, std::size_t>> candidates;
  candidates.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    candidates.emplace_back(inst.weights[i], i + 1);
  }
  std::vector<std::size_t> selected;
  std::int64_t room = inst.limit;
  std::span<std::pair<std::int64_t, std::size_t>> rest(candidates);
  while (!rest.empty()) {
    if (rest.size() == 1) {
      if (rest[0].first <= room) selected.push_back(rest[0].second);
      break;
    }
    // The lighter half is everything up to the median; it is strictly
    // shorter than `rest` when |rest| >= 2.
    const std::size_t half = (rest.size() + 1) / 2;
    SelectNth(rest, half - 1);
    std::int64_t half_weight = 0;
    bool fits = true;
    for (std::size_t j = 0; j < half && fits; ++j) {
      fits = rest[j].first <= room - half_weight;
      if (fits) half_weight += rest[j].first;
    }
    if (fits) {
      room -= half_weight;
      for (std::size_t j = 0; j < half; ++j) selected.push_back(rest[j].second);
      rest = rest.subspan(half);
    } else {
      rest = rest.first(half);
    }
  }
  return MakeSolution(inst, std::move(selected));
}

KSSolution BruteForceKS(const KSInstance& inst) {
  inst.Validate();
  const std::size_t n = inst.size();
  if (n > kBruteForceKSMax) {
    throw CapacityError("brute force limited to " +
                        std::to_string(kBruteForceKSMax) + " items, got " +
                        std::to_string(n));
  }
  std::uint32_t best_mask = 0;
  double best_value = 0;
  auto visit = [&](auto&& self, std::size_t i, std::uint32_t mask,
                   std::int64_t room, double value) -> void {
    if (i == n) {
      if (value > best_value ||
          (value == best_value && mask != best_mask &&
           internal::LexLess(mask, best_mask))) {
        best_value = value;
        best_mask = mask;
      }
      return;
    }
    if (inst.weights[i] <= room) {
      self(self, i + 1, mask | 1u << i, room - inst.weights[i],
           value + inst.values[i]);
    }
    self(self, i + 1, mask, room, value);
  };
  visit(visit, 0, 0, inst.limit, 0.0);

  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < n; ++i) {
    if (best_mask >> i & 1u) selected.push_back(i + 1);
  }
  return MakeSolution(inst, std::move(selected));
}

bool IsFeasible(const KSInstance& inst, const std::vector<std::size_t>& selected) {
  std::vector<bool> seen(inst.size() + 1, false);
  std::int64_t total = 0;
  for (std::size_t k : selected) {
    if (k < 1 || k > inst.size() || seen[k]) return false;
    seen[k] = true;
    total += inst.weights[k - 1];
  }
  return total <= inst.limit;
}

}  // namespace greedydp
