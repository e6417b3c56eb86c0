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

#ifndef GREEDYDP_SRC_LEX_ORDER_H_
#define GREEDYDP_SRC_LEX_ORDER_H_

#include <bit>
#include <cstdint>

namespace greedydp::internal {

// Lexicographic comparison of the ascending index sequences encoded by two
// distinct bit masks.
inline bool LexLess(std::uint32_t a, std::uint32_t b) {
  const int low = std::countr_zero(a ^ b);
  if (a >> low & 1u) {
    // `a` holds the first differing element; it wins unless `b` stops here.
    return (b >> low) != 0;
  }
  return (a >> low) == 0;
}

}  // namespace greedydp::internal

#endif  // GREEDYDP_SRC_LEX_ORDER_H_
