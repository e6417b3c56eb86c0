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

#ifndef GREEDYDP_INDEXED_HEAP_H_
#define GREEDYDP_INDEXED_HEAP_H_

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace greedydp {

// Binary min-heap over ids 0..capacity-1 with a position index per id, so
// keys can be lowered in O(log n). Equal keys pop in ascending id order.
class IndexedMinHeap {
 public:
  explicit IndexedMinHeap(int capacity)
      : keys_(capacity, 0.0), position_(capacity, kAbsent) {}

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  bool Contains(int id) const { return position_[id] != kAbsent; }
  double Key(int id) const { return keys_[id]; }

  void Push(int id, double key) {
    assert(!Contains(id));
    keys_[id] = key;
    position_[id] = static_cast<int>(heap_.size());
    heap_.push_back(id);
    SiftUp(heap_.size() - 1);
  }

  // Requires Contains(id) and key <= Key(id).
  void DecreaseKey(int id, double key) {
    assert(Contains(id) && !(Key(id) < key));
    keys_[id] = key;
    SiftUp(static_cast<std::size_t>(position_[id]));
  }

  int Top() const { return heap_.front(); }

  int Pop() {
    const int top = heap_.front();
    Swap(0, heap_.size() - 1);
    heap_.pop_back();
    position_[top] = kAbsent;
    if (!heap_.empty()) SiftDown(0);
    return top;
  }

 private:
  static constexpr int kAbsent = -1;

  bool Before(int a, int b) const {
    return keys_[a] < keys_[b] || (keys_[a] == keys_[b] && a < b);
  }

  void Swap(std::size_t i, std::size_t j) {
    std::swap(heap_[i], heap_[j]);
    position_[heap_[i]] = static_cast<int>(i);
    position_[heap_[j]] = static_cast<int>(j);
  }

  void SiftUp(std::size_t i) {
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!Before(heap_[i], heap_[parent])) break;
      Swap(i, parent);
      i = parent;
    }
  }

  void SiftDown(std::size_t i) {
    while (true) {
      std::size_t best = i;
      const std::size_t left = 2 * i + 1;
      const std::size_t right = left + 1;
      if (left < heap_.size() && Before(heap_[left], heap_[best])) best = left;
      if (right < heap_.size() && Before(heap_[right], heap_[best])) best = right;
      if (best == i) return;
      Swap(i, best);
      i = best;
    }
  }

  std::vector<double> keys_;
  std::vector<int> position_;
  std::vector<int> heap_;
};

}  // namespace greedydp

#endif  // GREEDYDP_INDEXED_HEAP_H_
