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

// Command-line front end: solve, compare, gen, count, bench.
//
// Exit codes: 0 ok, 1 algorithms disagree, 2 unreadable or malformed input,
// 3 algorithm precondition violated, 4 capacity exceeded, 64 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "greedydp/errors.h"
#include "greedydp/instances.h"
#include "greedydp/interval_scheduling.h"
#include "greedydp/knapsack.h"
#include "greedydp/shortest_paths.h"
#include "greedydp/subproblem_lab.h"

namespace greedydp {
namespace {

constexpr int kExitDisagree = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitUsage = 64;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

std::string JoinIndices(const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t k : indices) out += " " + std::to_string(k);
  return out;
}

std::string JoinDistances(const std::vector<ExtLength>& dist) {
  std::string out;
  for (std::size_t t = 0; t < dist.size(); ++t) {
    if (t > 0) out += ",";
    out += dist[t].ToString();
  }
  return out;
}

bool AllUnit(const std::vector<double>& values) {
  for (double v : values) {
    if (v != 1.0) return false;
  }
  return true;
}

OrderPolicy ParseOrder(const std::string& name, const std::string& permutation) {
  if (name == "start") return OrderPolicy::EarliestStart();
  if (name == "finish") return OrderPolicy::EarliestFinish();
  if (name == "index") return OrderPolicy::Index();
  std::vector<std::size_t> perm;
  std::stringstream in(permutation);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      perm.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw UsageError("bad permutation entry '" + item + "'");
    }
  }
  return OrderPolicy::Given(std::move(perm));
}

// "a..b" or a comma-separated list.
std::vector<int> ParseRange(const std::string& spec) {
  std::vector<int> out;
  try {
    if (auto dots = spec.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(spec.substr(0, dots));
      const int hi = std::stoi(spec.substr(dots + 2));
      for (int m = lo; m <= hi; ++m) out.push_back(m);
    } else {
      std::stringstream in(spec);
      std::string item;
      while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    throw UsageError("bad m range '" + spec + "'");
  }
  if (out.empty()) throw UsageError("empty m range '" + spec + "'");
  for (int m : out) {
    if (m < 1) throw UsageError("m must be positive");
  }
  return out;
}

struct SolveArgs {
  std::string problem;
  std::string algo;
  std::string input;
  bool stats = false;
};

int RunSolve(const SolveArgs& args) {
  const std::string text = ReadInput(args.input);
  std::ostringstream out;
  if (args.problem == "is") {
    const ISInstance inst = ParseIS(text);
    ISSolution sol;
    if (args.algo == "dp") {
      sol = DpRetrieve(inst, DpValue(inst));
    } else if (args.algo == "greedy") {
      sol = GreedyUnit(inst);
    } else if (args.algo == "brute") {
      sol = BruteForceIS(inst);
    } else {
      throw UsageError("algorithm '" + args.algo + "' is not available for is");
    }
    out << "value " << FormatReal(sol.value) << "\n";
    out << "selected" << JoinIndices(sol.selected) << "\n";
  } else if (args.problem == "ks") {
    const KSInstance inst = ParseKS(text);
    KSSolution sol;
    if (args.algo == "dp") {
      sol = DpRetrieveKS(inst, DpTableKS(inst));
    } else if (args.algo == "greedy") {
      sol = GreedyUnitKS(inst);
    } else if (args.algo == "greedy-linear") {
      sol = GreedyUnitKSLinear(inst);
    } else if (args.algo == "brute") {
      sol = BruteForceKS(inst);
    } else {
      throw UsageError("algorithm '" + args.algo + "' is not available for ks");
    }
    out << "value " << FormatReal(sol.total_value) << "\n";
    out << "weight " << sol.total_weight << "\n";
    out << "selected" << JoinIndices(sol.selected) << "\n";
  } else {
    const Digraph g = ParseGraph(text);
    if (args.algo == "bf") {
      out << FormatDistances(BellmanFord(g));
    } else if (args.algo == "dijkstra") {
      const DijkstraResult r = Dijkstra(g);
      out << FormatDistances(r.paths);
      if (args.stats) {
        out << "stats extractions=" << r.stats.extractions
            << " relaxations=" << r.stats.relaxations
            << " key_decreases=" << r.stats.key_decreases << "\n";
      }
    } else if (args.algo == "brute") {
      const std::vector<ExtLength> dist = OracleDistances(g);
      for (std::size_t t = 0; t < dist.size(); ++t) {
        out << t << " " << dist[t].ToString() << " -\n";
      }
    } else {
      throw UsageError("algorithm '" + args.algo + "' is not available for sp");
    }
  }
  std::cout << out.str();
  return 0;
}

struct Verdict {
  std::vector<std::string> lines;
  bool agree = true;

  void Add(const std::string& line) { lines.push_back(line); }
  void Check(bool ok, const std::string& what) {
    if (!ok) {
      agree = false;
      lines.push_back("MISMATCH " + what);
    }
  }
};

int RunCompare(const std::string& problem, const std::string& input) {
  const std::string text = ReadInput(input);
  Verdict v;
  if (problem == "is") {
    const ISInstance inst = ParseIS(text);
    const ISOptTable table = DpValue(inst);
    const ISSolution dp = DpRetrieve(inst, table);
    const double best = table.Opt(1);
    v.Add("dp value=" + FormatReal(best) + " selected=" + JoinIndices(dp.selected));
    v.Check(IsFeasible(inst, dp.selected) && dp.value == best, "dp witness");
    if (inst.size() <= kBruteForceISMax) {
      const ISSolution brute = BruteForceIS(inst);
      v.Add("brute value=" + FormatReal(brute.value));
      v.Check(brute.value == best, "brute vs dp");
    } else {
      v.Add("brute skipped: more than " + std::to_string(kBruteForceISMax) + " intervals");
    }
    if (AllUnit(inst.values)) {
      const ISSolution greedy = GreedyUnit(inst);
      v.Add("greedy value=" + FormatReal(greedy.value));
      v.Check(IsFeasible(inst, greedy.selected) && greedy.value == best, "greedy vs dp");
    } else {
      v.Add("greedy skipped: values are not all 1");
    }
  } else if (problem == "ks") {
    const KSInstance inst = ParseKS(text);
    const KSOptTable table = DpTableKS(inst);
    const double best = table.Opt(1, inst.limit);
    const KSSolution dp = DpRetrieveKS(inst, table);
    v.Add("dp value=" + FormatReal(best) + " selected=" + JoinIndices(dp.selected));
    v.Check(IsFeasible(inst, dp.selected) && dp.total_value == best, "dp witness");
    if (inst.size() <= kBruteForceKSMax) {
      const KSSolution brute = BruteForceKS(inst);
      v.Add("brute value=" + FormatReal(brute.total_value));
      v.Check(brute.total_value == best, "brute vs dp");
    } else {
      v.Add("brute skipped: more than " + std::to_string(kBruteForceKSMax) + " items");
    }
    if (AllUnit(inst.values)) {
      const KSSolution greedy = GreedyUnitKS(inst);
      const KSSolution linear = GreedyUnitKSLinear(inst);
      v.Add("greedy value=" + FormatReal(greedy.total_value));
      v.Add("greedy-linear value=" + FormatReal(linear.total_value));
      v.Check(IsFeasible(inst, greedy.selected) && greedy.total_value == best,
              "greedy vs dp");
      v.Check(IsFeasible(inst, linear.selected) && linear.total_value == best,
              "greedy-linear vs dp");
    } else {
      v.Add("greedy skipped: values are not all 1");
    }
  } else {
    const Digraph g = ParseGraph(text);
    const SSSPResult bf = BellmanFord(g);
    v.Add("bf dist=" + JoinDistances(bf.dist));
    const std::string bf_tree = CheckPredecessorTree(g, bf);
    v.Check(bf_tree.empty(), "bf predecessors: " + bf_tree);
    if (g.vertex_count <= kOracleMaxVertices) {
      const std::vector<ExtLength> oracle = OracleDistances(g);
      v.Add("brute dist=" + JoinDistances(oracle));
      v.Check(oracle == bf.dist, "brute vs bf");
    } else {
      v.Add("brute skipped: more than " + std::to_string(kOracleMaxVertices) + " vertices");
    }
    const bool nonnegative =
        std::all_of(g.edges.begin(), g.edges.end(), [](const Edge& e) { return e.length >= 0; });
    if (nonnegative) {
      const DijkstraResult dj = Dijkstra(g);
      v.Add("dijkstra dist=" + JoinDistances(dj.paths.dist));
      v.Check(dj.paths.dist == bf.dist, "dijkstra vs bf");
      const std::string dj_tree = CheckPredecessorTree(g, dj.paths);
      v.Check(dj_tree.empty(), "dijkstra predecessors: " + dj_tree);
    } else {
      v.Add("dijkstra skipped: negative edge lengths");
    }
  }
  for (const std::string& line : v.lines) std::cout << line << "\n";
  std::cout << (v.agree ? "agree" : "DISAGREE") << "\n";
  return v.agree ? 0 : kExitDisagree;
}

struct GenArgs {
  std::string family;
  int m = 1;
  int n = 0;
  int edges = 0;
  std::int64_t limit = 0;
  std::uint64_t seed = 0;
  bool unit = false;
  bool strongly_connected = false;
  std::int64_t min_len = 0;
  std::int64_t max_len = 10;
  std::string output;
};

int RunGenerate(const GenArgs& a) {
  std::string text;
  if (a.family == "fig1") {
    text = SerializeIS(GenFig1(a.m));
  } else if (a.family == "fig2") {
    text = SerializeIS(GenFig2(a.m));
  } else if (a.family == "random-is") {
    text = SerializeIS(GenRandomIS(a.n, a.seed, a.unit));
  } else if (a.family == "random-ks") {
    text = SerializeKS(GenRandomKS(a.n, a.limit, a.seed, a.unit));
  } else if (a.family == "random-graph") {
    if (a.n < 1) throw UsageError("random-graph needs --n >= 1");
    if (a.min_len > a.max_len) throw UsageError("--min-len exceeds --max-len");
    if (a.strongly_connected && a.edges < a.n) {
      throw UsageError("--strongly-connected needs --edges >= --n");
    }
    text = SerializeGraph(a.strongly_connected
                              ? GenStronglyConnectedGraph(a.n, a.edges, a.seed,
                                                          a.min_len, a.max_len)
                              : GenRandomGraph(a.n, a.edges, a.seed, a.min_len,
                                               a.max_len));
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  WriteOutput(a.output, text);
  return 0;
}

int RunCount(const std::string& order, const std::string& permutation,
             const std::string& input, const std::string& format) {
  const ISInstance inst = ParseIS(ReadInput(input));
  OrderPolicy policy = ParseOrder(order, permutation);
  CountReport report;
  try {
    report = MemoSolve(inst, policy);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (format == "csv") {
    std::cout << "n,distinct,calls,value\n"
              << inst.size() << "," << report.distinct_subproblems << ","
              << report.recursive_calls << "," << FormatReal(report.optimal_value) << "\n";
  } else {
    std::cout << "distinct=" << report.distinct_subproblems
              << " calls=" << report.recursive_calls
              << " value=" << FormatReal(report.optimal_value) << "\n";
  }
  return 0;
}

int RunBench(const std::string& family, const std::string& order,
             const std::string& m_range, const std::string& format,
             const std::string& output) {
  Family fam;
  if (family == "fig1") {
    fam = Family::kFig1;
  } else if (family == "fig2") {
    fam = Family::kFig2;
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  if (order != "start" && order != "finish" && order != "index") {
    throw UsageError("bench order must be start, finish or index");
  }
  const std::vector<ScalingRow> rows =
      CountScaling(fam, ParseOrder(order, ""), ParseRange(m_range));
  const std::string csv = ScalingCsv(rows);
  if (!output.empty()) WriteOutput(output, csv);
  if (format == "csv") {
    if (output.empty()) std::cout << csv;
  } else {
    for (const ScalingRow& row : rows) {
      std::cout << "m=" << row.m << " n=" << row.n << " distinct=" << row.distinct
                << " calls=" << row.calls << "\n";
    }
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Dynamic programs, derived greedy algorithms and subproblem counting"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve an instance with one algorithm");
  solve->add_option("problem", solve_args.problem, "is | ks | sp")
      ->required()
      ->check(CLI::IsMember({"is", "ks", "sp"}));
  solve->add_option("--algo", solve_args.algo,
                    "is: dp|greedy|brute  ks: dp|greedy|greedy-linear|brute  "
                    "sp: bf|dijkstra|brute")
      ->required();
  solve->add_option("--input", solve_args.input, "Instance file, - for stdin")->required();
  solve->add_flag("--stats", solve_args.stats, "Print Dijkstra operation counts");

  std::string compare_problem, compare_input;
  auto* compare = app.add_subcommand("compare", "Run every applicable algorithm and compare");
  compare->add_option("problem", compare_problem, "is | ks | sp")
      ->required()
      ->check(CLI::IsMember({"is", "ks", "sp"}));
  compare->add_option("--input", compare_input, "Instance file, - for stdin")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("family", gen_args.family,
                  "fig1 | fig2 | random-is | random-ks | random-graph")
      ->required();
  gen->add_option("--m", gen_args.m, "Family parameter for fig1/fig2")
      ->check(CLI::PositiveNumber);
  gen->add_option("--n", gen_args.n, "Number of components or vertices")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--edges", gen_args.edges, "Number of edges")->check(CLI::NonNegativeNumber);
  gen->add_option("--limit", gen_args.limit, "Knapsack weight limit W")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_args.seed, "Random seed");
  gen->add_flag("--unit", gen_args.unit, "Unit values");
  gen->add_flag("--strongly-connected", gen_args.strongly_connected,
                "Start the edge list with a Hamiltonian cycle");
  gen->add_option("--min-len", gen_args.min_len, "Minimum edge length");
  gen->add_option("--max-len", gen_args.max_len, "Maximum edge length");
  gen->add_option("--output", gen_args.output, "Output file (default stdout)");

  std::string count_order = "start", count_perm, count_input, count_format = "text";
  auto* count = app.add_subcommand("count", "Count distinct memoized subproblems");
  count->add_option("--order", count_order, "start | finish | index | given")
      ->check(CLI::IsMember({"start", "finish", "index", "given"}));
  count->add_option("--permutation", count_perm,
                    "Comma-separated 1-based indices for --order given");
  count->add_option("--input", count_input, "Interval instance file")->required();
  count->add_option("--format", count_format, "text | csv")
      ->check(CLI::IsMember({"text", "csv"}));

  std::string bench_family, bench_order = "start", bench_m, bench_format = "text",
                            bench_output;
  auto* bench = app.add_subcommand("bench", "Subproblem counts over a family");
  bench->add_option("--family", bench_family, "fig1 | fig2")->required();
  bench->add_option("--order", bench_order, "start | finish | index");
  bench->add_option("--m", bench_m, "Range a..b or list a,b,c")->required();
  bench->add_option("--format", bench_format, "text | csv")
      ->check(CLI::IsMember({"text", "csv"}));
  bench->add_option("--output", bench_output, "CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) return RunSolve(solve_args);
    if (*compare) return RunCompare(compare_problem, compare_input);
    if (*gen) return RunGenerate(gen_args);
    if (*count) {
      if (count_order == "given" && count_perm.empty()) {
        throw UsageError("--order given needs --permutation");
      }
      return RunCount(count_order, count_perm, count_input, count_format);
    }
    if (*bench) return RunBench(bench_family, bench_order, bench_m, bench_format, bench_output);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace greedydp

int main(int argc, char** argv) { return greedydp::Main(argc, argv); }
