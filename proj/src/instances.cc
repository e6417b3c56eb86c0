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

#include "greedydp/instances.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <system_error>

#include "greedydp/errors.h"

namespace greedydp {
namespace {

// Splits text into lines, dropping '\r' and trailing blank lines.
std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  while (!lines.empty() &&
         lines.back().find_first_not_of(" \t") == std::string_view::npos) {
    lines.pop_back();
  }
  return lines;
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : lines_(SplitLines(text)) {}

  // Tokens of the next line, which must have exactly `count` fields.
  std::vector<std::string_view> Next(std::size_t count) {
    if (index_ >= lines_.size()) {
      throw ParseError(index_ + 1, "unexpected end of input");
    }
    auto tokens = Tokens(lines_[index_++]);
    if (tokens.size() != count) {
      Fail("expected " + std::to_string(count) + " fields, got " +
           std::to_string(tokens.size()));
    }
    return tokens;
  }

  void ExpectEnd() const {
    if (index_ < lines_.size()) {
      throw ParseError(index_ + 1, "unexpected trailing content");
    }
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(index_, what);
  }

  double Real(std::string_view token) const {
    double x = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        !std::isfinite(x)) {
      Fail("invalid number '" + std::string(token) + "'");
    }
    return x;
  }

  std::int64_t Integer(std::string_view token) const {
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      Fail("invalid integer '" + std::string(token) + "'");
    }
    return x;
  }

  std::int64_t Count(std::string_view token, const char* what) const {
    std::int64_t x = Integer(token);
    if (x < 0) Fail(std::string(what) + " must be nonnegative");
    return x;
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t index_ = 0;
};

double RandomValue(std::mt19937_64& rng, bool unit_values) {
  if (unit_values) return 1.0;
  return std::uniform_int_distribution<int>(0, 80)(rng) / 8.0;
}

}  // namespace

void ISInstance::Validate() const {
  if (intervals.size() != values.size()) {
    throw std::invalid_argument("interval and value counts differ");
  }
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (!(intervals[i].start < intervals[i].finish)) {
      throw std::invalid_argument("interval " + std::to_string(i + 1) +
                                  " is empty");
    }
    if (!(values[i] >= 0)) {
      throw std::invalid_argument("value " + std::to_string(i + 1) +
                                  " is negative");
    }
  }
}

void KSInstance::Validate() const {
  if (weights.size() != values.size()) {
    throw std::invalid_argument("weight and value counts differ");
  }
  if (limit < 0) throw std::invalid_argument("weight limit is negative");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0 || !(values[i] >= 0)) {
      throw std::invalid_argument("item " + std::to_string(i + 1) +
                                  " has a negative weight or value");
    }
  }
}

void Digraph::Validate() const {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (vertex_count > 0 && (source < 0 || source >= vertex_count)) {
    throw std::invalid_argument("source out of range");
  }
  for (const Edge& e : edges) {
    if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 ||
        e.head >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

std::string FormatReal(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

ISInstance ParseIS(std::string_view text) {
  LineReader reader(text);
  auto header = reader.Next(1);
  std::int64_t n = reader.Count(header[0], "interval count");
  ISInstance inst;
  for (std::int64_t i = 0; i < n; ++i) {
    auto f = reader.Next(3);
    Interval iv{reader.Real(f[0]), reader.Real(f[1])};
    double v = reader.Real(f[2]);
    if (!(iv.start < iv.finish)) reader.Fail("empty interval (start >= finish)");
    if (v < 0) reader.Fail("negative value");
    inst.intervals.push_back(iv);
    inst.values.push_back(v);
  }
  reader.ExpectEnd();
  return inst;
}

std::string SerializeIS(const ISInstance& inst) {
  std::string out = std::to_string(inst.size()) + "\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    out += FormatReal(inst.intervals[i].start) + " " +
           FormatReal(inst.intervals[i].finish) + " " +
           FormatReal(inst.values[i]) + "\n";
  }
  return out;
}

KSInstance ParseKS(std::string_view text) {
  LineReader reader(text);
  auto header = reader.Next(2);
  std::int64_t n = reader.Count(header[0], "item count");
  KSInstance inst;
  inst.limit = reader.Count(header[1], "weight limit");
  for (std::int64_t i = 0; i < n; ++i) {
    auto f = reader.Next(2);
    inst.weights.push_back(reader.Count(f[0], "weight"));
    double v = reader.Real(f[1]);
    if (v < 0) reader.Fail("negative value");
    inst.values.push_back(v);
  }
  reader.ExpectEnd();
  return inst;
}

std::string SerializeKS(const KSInstance& inst) {
  std::string out =
      std::to_string(inst.size()) + " " + std::to_string(inst.limit) + "\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    out += std::to_string(inst.weights[i]) + " " + FormatReal(inst.values[i]) +
           "\n";
  }
  return out;
}

Digraph ParseGraph(std::string_view text) {
  LineReader reader(text);
  auto header = reader.Next(3);
  Digraph g;
  std::int64_t n = reader.Count(header[0], "vertex count");
  std::int64_t m = reader.Count(header[1], "edge count");
  std::int64_t s = reader.Integer(header[2]);
  if (n < 1) reader.Fail("graph needs at least one vertex");
  if (n > std::numeric_limits<int>::max()) reader.Fail("too many vertices");
  if (s < 0 || s >= n) reader.Fail("source vertex out of range");
  g.vertex_count = static_cast<int>(n);
  g.source = static_cast<int>(s);
  for (std::int64_t i = 0; i < m; ++i) {
    auto f = reader.Next(3);
    std::int64_t u = reader.Integer(f[0]);
    std::int64_t v = reader.Integer(f[1]);
    if (u < 0 || u >= n || v < 0 || v >= n) reader.Fail("vertex id out of range");
    g.edges.push_back({static_cast<int>(u), static_cast<int>(v), reader.Real(f[2])});
  }
  reader.ExpectEnd();
  return g;
}

std::string SerializeGraph(const Digraph& g) {
  std::string out = std::to_string(g.vertex_count) + " " +
                    std::to_string(g.edges.size()) + " " +
                    std::to_string(g.source) + "\n";
  for (const Edge& e : g.edges) {
    out += std::to_string(e.tail) + " " + std::to_string(e.head) + " " +
           FormatReal(e.length) + "\n";
  }
  return out;
}

ISInstance GenFig1(int m) {
  if (m < 1) throw std::invalid_argument("fig1 needs m >= 1");
  ISInstance inst;
  for (int x = 1; x <= m; ++x) inst.intervals.push_back({4.0 * x, 4.0 * x + 2});
  for (int x = 1; x <= m; ++x) {
    inst.intervals.push_back({4.0 * x + 1, 4.0 * x + 3});
  }
  inst.values.assign(inst.intervals.size(), 1.0);
  return inst;
}

ISInstance GenFig2(int m) {
  if (m < 1) throw std::invalid_argument("fig2 needs m >= 1");
  // Long intervals all finish after the last short one (3m+2).
  const double anchor = 3.0 * m + 3;
  ISInstance inst;
  for (int x = 1; x <= m; ++x) inst.intervals.push_back({3.0 * x, 3.0 * x + 2});
  for (int x = 1; x <= m; ++x) {
    inst.intervals.push_back({3.0 * x + 1, anchor + 1 + x});
  }
  inst.values.assign(inst.intervals.size(), 1.0);
  return inst;
}

ISInstance GenRandomIS(int n, std::uint64_t seed, bool unit_values) {
  if (n < 0) throw std::invalid_argument("negative instance size");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> start(0, 4 * n);
  std::uniform_int_distribution<int> length(1, 10);
  ISInstance inst;
  for (int i = 0; i < n; ++i) {
    double s = start(rng);
    inst.intervals.push_back({s, s + length(rng)});
    inst.values.push_back(RandomValue(rng, unit_values));
  }
  return inst;
}

KSInstance GenRandomKS(int n, std::int64_t limit, std::uint64_t seed,
                       bool unit_values) {
  if (n < 0 || limit < 0) throw std::invalid_argument("negative size or limit");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> weight(0, limit);
  KSInstance inst;
  inst.limit = limit;
  for (int i = 0; i < n; ++i) {
    inst.weights.push_back(weight(rng));
    inst.values.push_back(RandomValue(rng, unit_values));
  }
  return inst;
}

namespace {

void CheckGraphParams(int n, int edges, std::int64_t min_len,
                      std::int64_t max_len) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (edges < 0) throw std::invalid_argument("negative edge count");
  if (min_len > max_len) throw std::invalid_argument("min_len > max_len");
}

}  // namespace

Digraph GenRandomGraph(int n, int edges, std::uint64_t seed,
                       std::int64_t min_len, std::int64_t max_len) {
  CheckGraphParams(n, edges, min_len, max_len);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::uniform_int_distribution<std::int64_t> length(min_len, max_len);
  Digraph g;
  g.vertex_count = n;
  for (int i = 0; i < edges; ++i) {
    int u = vertex(rng);
    int v = vertex(rng);
    g.edges.push_back({u, v, static_cast<double>(length(rng))});
  }
  return g;
}

Digraph GenStronglyConnectedGraph(int n, int edges, std::uint64_t seed,
                                  std::int64_t min_len, std::int64_t max_len) {
  CheckGraphParams(n, edges, min_len, max_len);
  if (edges < n) throw std::invalid_argument("need at least n edges");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::uniform_int_distribution<std::int64_t> length(min_len, max_len);
  std::vector<int> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  std::shuffle(cycle.begin(), cycle.end(), rng);
  Digraph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i) {
    g.edges.push_back({cycle[i], cycle[(i + 1) % n],
                       static_cast<double>(length(rng))});
  }
  for (int i = n; i < edges; ++i) {
    int u = vertex(rng);
    int v = vertex(rng);
    g.edges.push_back({u, v, static_cast<double>(length(rng))});
  }
  return g;
}

}  // namespace greedydp
