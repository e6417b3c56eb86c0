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

#ifndef GREEDYDP_ERRORS_H_
#define GREEDYDP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greedydp {

// Malformed instance text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The input is legal but outside the domain of the requested algorithm
// (e.g. a greedy that needs unit values, Dijkstra with a negative edge).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive or pseudo-polynomial work would exceed the configured cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace greedydp

#endif  // GREEDYDP_ERRORS_H_
