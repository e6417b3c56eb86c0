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

#include "greedydp/subproblem_lab.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "greedydp/errors.h"

namespace greedydp {
namespace {

// Set of ranks as a little-endian word vector.
using RankSet = std::vector<std::uint64_t>;

struct RankSetHash {
  std::size_t operator()(const RankSet& set) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : set) {
      std::uint64_t z = w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      h ^= z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
  }
};

bool Empty(const RankSet& set) {
  return std::all_of(set.begin(), set.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t LowestRank(const RankSet& set) {
  for (std::size_t w = 0; w < set.size(); ++w) {
    if (set[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(set[w]));
  }
  return set.size() * 64;
}

class MemoEngine {
 public:
  MemoEngine(const ISInstance& inst, std::vector<std::size_t> order,
             std::vector<std::vector<std::size_t>>* keys, const MemoLimits& limits)
      : order_(std::move(order)),
        words_((order_.size() + 63) / 64),
        keys_(keys),
        limits_(limits) {
    const std::size_t n = order_.size();
    values_.resize(n);
    removes_.assign(n, RankSet(words_, 0));
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t a = order_[r] - 1;
      values_[r] = inst.values[a];
      for (std::size_t q = 0; q < n; ++q) {
        const std::size_t b = order_[q] - 1;
        if (q == r || Overlaps(inst.intervals[a], inst.intervals[b])) {
          removes_[r][q / 64] |= std::uint64_t{1} << (q % 64);
        }
      }
    }
  }

  CountReport Run() {
    RankSet all(words_, 0);
    for (std::size_t r = 0; r < order_.size(); ++r) {
      all[r / 64] |= std::uint64_t{1} << (r % 64);
    }
    CountReport report;
    report.optimal_value = Solve(all);
    report.distinct_subproblems = memo_.size();
    report.recursive_calls = calls_;
    return report;
  }

 private:
  double Solve(const RankSet& remaining) {
    ++calls_;
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    if (memo_.size() >= limits_.max_subproblems) {
      throw CapacityError("more than " + std::to_string(limits_.max_subproblems) +
                          " distinct subproblems");
    }
    if (keys_ != nullptr) keys_->push_back(Members(remaining));
    double best = 0;
    if (!Empty(remaining)) {
      const std::size_t r = LowestRank(remaining);
      RankSet rest = remaining;
      rest[r / 64] &= ~(std::uint64_t{1} << (r % 64));
      const double skip = Solve(rest);
      for (std::size_t w = 0; w < words_; ++w) rest[w] = remaining[w] & ~removes_[r][w];
      const double take = values_[r] + Solve(rest);
      best = std::max(skip, take);
    }
    memo_.emplace(remaining, best);
    return best;
  }

  std::vector<std::size_t> Members(const RankSet& set) const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < order_.size(); ++r) {
      if (set[r / 64] >> (r % 64) & 1u) out.push_back(order_[r]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::size_t> order_;
  std::size_t words_;
  std::vector<std::vector<std::size_t>>* keys_;
  MemoLimits limits_;
  std::vector<double> values_;
  // removes_[r]: ranks dropped when rank r is taken (r and its overlaps).
  std::vector<RankSet> removes_;
  std::unordered_map<RankSet, double, RankSetHash> memo_;
  std::uint64_t calls_ = 0;
};

}  // namespace

std::vector<std::size_t> ResolveOrder(const ISInstance& inst,
                                      const OrderPolicy& order) {
  const std::size_t n = inst.size();
  std::vector<std::size_t> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 1);
  switch (order.kind) {
    case OrderKind::kEarliestStart:
      std::stable_sort(ranks.begin(), ranks.end(), [&](std::size_t a, std::size_t b) {
        return inst.intervals[a - 1].start < inst.intervals[b - 1].start;
      });
      break;
    case OrderKind::kEarliestFinish:
      std::stable_sort(ranks.begin(), ranks.end(), [&](std::size_t a, std::size_t b) {
        return inst.intervals[a - 1].finish < inst.intervals[b - 1].finish;
      });
      break;
    case OrderKind::kIndex:
      break;
    case OrderKind::kGiven: {
      if (order.permutation.size() != n) {
        throw std::invalid_argument("order permutation has wrong length");
      }
      std::vector<bool> seen(n + 1, false);
      for (std::size_t k : order.permutation) {
        if (k < 1 || k > n || seen[k]) {
          throw std::invalid_argument("order is not a permutation of 1..n");
        }
        seen[k] = true;
      }
      ranks = order.permutation;
      break;
    }
  }
  return ranks;
}

CountReport MemoSolve(const ISInstance& inst, const OrderPolicy& order,
                      std::vector<std::vector<std::size_t>>* keys,
                      const MemoLimits& limits) {
  inst.Validate();
  if (inst.size() > limits.max_components) {
    throw CapacityError("memoized recursion limited to " +
                        std::to_string(limits.max_components) + " components");
  }
  if (keys != nullptr) keys->clear();
  MemoEngine engine(inst, ResolveOrder(inst, order), keys, limits);
  return engine.Run();
}

std::vector<ScalingRow> CountScaling(Family family, const OrderPolicy& order,
                                     const std::vector<int>& m_values) {
  const bool exponential = family == Family::kFig1 &&
                           (order.kind == OrderKind::kIndex ||
                            order.kind == OrderKind::kGiven);
  const int cap = exponential ? 31 : 200;
  std::vector<ScalingRow> rows;
  for (int m : m_values) {
    if (m > cap) {
      throw CapacityError("m = " + std::to_string(m) + " exceeds cap " +
                          std::to_string(cap) + " for this family and order");
    }
    const ISInstance inst = family == Family::kFig1 ? GenFig1(m) : GenFig2(m);
    const CountReport report = MemoSolve(inst, order);
    rows.push_back({m, inst.size(), report.distinct_subproblems,
                    report.recursive_calls});
  }
  return rows;
}

std::string ScalingCsv(const std::vector<ScalingRow>& rows) {
  std::string out = "m,n,distinct,calls\n";
  for (const ScalingRow& row : rows) {
    out += std::to_string(row.m) + "," + std::to_string(row.n) + "," +
           std::to_string(row.distinct) + "," + std::to_string(row.calls) + "\n";
  }
  return out;
}

}  // namespace greedydp
