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

#ifndef GREEDYDP_SELECTION_H_
#define GREEDYDP_SELECTION_H_

// Deterministic linear-time selection (median of medians, groups of five).

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>

namespace greedydp {
namespace selection_internal {

template <typename T, typename Less>
void InsertionSort(std::span<T> a, Less& less) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    for (std::size_t j = i; j > 0 && less(a[j], a[j - 1]); --j) {
      std::swap(a[j], a[j - 1]);
    }
  }
}

}  // namespace selection_internal

// Rearranges `a` so that a[k] is the element that would be there after a
// full sort, everything before it is not greater and everything after it is
// not less. Worst-case O(|a|) comparisons.
template <typename T, typename Less>
void SelectNth(std::span<T> a, std::size_t k, Less less) {
  if (k >= a.size()) throw std::out_of_range("SelectNth: rank out of range");
  while (true) {
    if (a.size() <= 10) {
      selection_internal::InsertionSort(a, less);
      return;
    }
    // Median of each group of five, gathered at the front.
    const std::size_t groups = (a.size() + 4) / 5;
    for (std::size_t g = 0; g < groups; ++g) {
      const std::size_t lo = g * 5;
      const std::size_t len = std::min<std::size_t>(5, a.size() - lo);
      auto group = a.subspan(lo, len);
      selection_internal::InsertionSort(group, less);
      std::swap(a[g], group[len / 2]);
    }
    SelectNth(a.first(groups), groups / 2, less);
    const T pivot = a[groups / 2];

    // Three-way partition: [0, lt) < pivot, [lt, gt) == pivot, [gt, n) > pivot.
    std::size_t lt = 0, i = 0, gt = a.size();
    while (i < gt) {
      if (less(a[i], pivot)) {
        std::swap(a[lt++], a[i++]);
      } else if (less(pivot, a[i])) {
        std::swap(a[i], a[--gt]);
      } else {
        ++i;
      }
    }
    if (k < lt) {
      a = a.first(lt);
    } else if (k < gt) {
      return;
    } else {
      a = a.subspan(gt);
      k -= gt;
    }
  }
}

template <typename T>
void SelectNth(std::span<T> a, std::size_t k) {
  SelectNth(a, k, [](const T& x, const T& y) { return x < y; });
}

}  // namespace greedydp

#endif  // GREEDYDP_SELECTION_H_
