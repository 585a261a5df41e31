// Copyright 2026 The gcanon Authors
//
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

// gcanon: line-oriented Graph6/Sparse6 tool.
//
//   gcanon gen 5 --connected            all connected graphs on 5 vertices
//   gcanon rand 10 100 0.3 --seed 1     G(n, p) samples
//   gcanon label < in.g6                canonical form of every line
//   gcanon short < in.g6                drop isomorphs, keep first occurrence
//   gcanon pick --filter NumCycles=0    keep lines passing a filter
//   gcanon count --filter NumCycles=0   number of lines passing a filter
//   gcanon iso Dhc DhS                  exit 0 if isomorphic, 1 if not
//   gcanon repro a000088 --max-n 9      census tables
//
// Exit status: 0 success (or "true" for iso), 1 "false" for iso, 2 on usage
// or data errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

#include "CLI11.hpp"
#include "gcanon/gcanon.hpp"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

class LineError : public gcanon::Error {
 public:
  LineError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what) {}
};

// Calls fn(text, graph, line_number) for every graph line of stdin.
template <typename Fn>
void for_each_graph_line(Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(std::cin, line)) {
    ++number;
    std::string_view text(line);
    if (number == 1) {
      for (std::string_view header : {">>graph6<<", ">>sparse6<<"}) {
        if (text.starts_with(header)) text.remove_prefix(header.size());
      }
      if (text.empty() && text.size() != line.size()) continue;
    }
    gcanon::Graph g;
    try {
      g = gcanon::decode(text);
    } catch (const gcanon::Error& e) {
      throw LineError(number, e.what());
    }
    fn(text, g, number);
  }
}

int run_gen(int n, const gcanon::GenOptions& opts) {
  for (const std::string& s : gcanon::generate_graphs(n, opts)) std::cout << s << '\n';
  return 0;
}

int run_rand(const gcanon::RandomModel& model) {
  for (const gcanon::Graph& g : gcanon::generate_random_graphs(model)) {
    std::cout << gcanon::encode_graph6(g) << '\n';
  }
  return 0;
}

int run_label() {
  for_each_graph_line([](std::string_view, const gcanon::Graph& g, std::size_t) {
    std::cout << gcanon::canonical_string(g) << '\n';
  });
  return 0;
}

int run_short() {
  std::unordered_set<std::string> seen;
  for_each_graph_line([&](std::string_view text, const gcanon::Graph& g, std::size_t) {
    if (seen.insert(gcanon::canonical_string(g)).second) std::cout << text << '\n';
  });
  return 0;
}

int run_filter(const std::string& spec, bool count_only) {
  const gcanon::GraphFilter filter = gcanon::parse_filter_spec(spec);
  long long count = 0;
  for_each_graph_line([&](std::string_view text, const gcanon::Graph& g, std::size_t line) {
    bool keep = false;
    try {
      keep = filter(g);
    } catch (const gcanon::Error& e) {
      throw LineError(line, e.what());
    }
    if (!keep) return;
    ++count;
    if (!count_only) std::cout << text << '\n';
  });
  if (count_only) std::cout << count << '\n';
  return 0;
}

int run_iso(const std::string& a, const std::string& b) {
  const gcanon::Graph g = gcanon::decode(a);
  const gcanon::Graph h = gcanon::decode(b);
  const bool same = gcanon::are_isomorphic(g, h);
  std::cout << (same ? "true" : "false") << '\n';
  return same ? 0 : kExitFalse;
}

int run_repro(const std::string& name, std::optional<int> max_n, std::size_t trials,
              std::uint64_t seed) {
  if (name == "a000088") {
    std::cout << gcanon::format_tuple(gcanon::graph_census(max_n.value_or(9))) << '\n';
  } else if (name == "a005195") {
    std::cout << gcanon::format_tuple(gcanon::forest_census(max_n.value_or(10))) << '\n';
  } else if (name == "a000055") {
    std::cout << gcanon::format_tuple(gcanon::tree_census(max_n.value_or(10))) << '\n';
  } else if (name == "er-connectivity") {
    const auto table = gcanon::er_connectivity(max_n.value_or(30), trials, seed);
    std::cout << "n:                " << gcanon::format_tuple(table.orders) << '\n';
    std::cout << "p = 2*log(n)/n:   " << gcanon::format_tuple(table.high) << '\n';
    std::cout << "p = log(n)/(2*n): " << gcanon::format_tuple(table.low) << '\n';
  } else {
    std::cerr << "gcanon: unknown experiment '" << name
              << "' (expected a000088, a005195, a000055 or er-connectivity)\n";
    return kExitError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical labelling, generation and filtering of Graph6/Sparse6 streams"};
  app.require_subcommand(1);

  int gen_n = 0;
  gcanon::GenOptions gen_opts;
  int min_edges = -1;
  int max_edges = -1;
  auto* gen = app.add_subcommand("gen", "All non-isomorphic graphs on n vertices");
  gen->add_option("n", gen_n, "Number of vertices")->required();
  gen->add_flag("--connected", gen_opts.only_connected, "Connected graphs only");
  gen->add_flag("--bipartite", gen_opts.only_bipartite, "Bipartite graphs only");
  gen->add_option("--min-edges", min_edges, "Minimum number of edges")->check(CLI::NonNegativeNumber);
  gen->add_option("--max-edges", max_edges, "Maximum number of edges")->check(CLI::NonNegativeNumber);

  gcanon::RandomModel model;
  auto* rand = app.add_subcommand("rand", "Random G(n, p) graphs");
  rand->add_option("n", model.n, "Number of vertices")->required();
  rand->add_option("count", model.count, "Number of graphs")->required();
  rand->add_option("p", model.p, "Edge probability")->required();
  rand->add_option("--seed", model.seed, "RNG seed (default 0)");

  auto* label = app.add_subcommand("label", "Replace each graph by its canonical form");
  auto* shrt = app.add_subcommand("short", "Remove isomorphs, keeping first occurrences");

  std::string filter_spec;
  auto* pick = app.add_subcommand("pick", "Write graphs that pass a filter");
  pick->add_option("--filter", filter_spec, "Filter, e.g. NumCycles=0,!Connectivity=0")
      ->required();
  auto* count = app.add_subcommand("count", "Count graphs that pass a filter");
  count->add_option("--filter", filter_spec, "Filter, e.g. NumCycles=0,!Connectivity=0")
      ->required();

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
  iso->add_option("first", iso_a, "First graph (Graph6/Sparse6)")->required();
  iso->add_option("second", iso_b, "Second graph (Graph6/Sparse6)")->required();

  std::string experiment;
  std::optional<int> repro_max_n;
  std::size_t trials = 100;
  std::uint64_t repro_seed = 0;
  auto* repro = app.add_subcommand("repro", "Census tables");
  repro->add_option("experiment", experiment, "a000088 | a005195 | a000055 | er-connectivity")
      ->required();
  repro->add_option("--max-n", repro_max_n, "Largest order");
  repro->add_option("--trials", trials, "Samples per order (er-connectivity)");
  repro->add_option("--seed", repro_seed, "RNG seed (er-connectivity)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  std::ios::sync_with_stdio(false);
  try {
    if (*gen) {
      if (min_edges >= 0) gen_opts.min_edges = min_edges;
      if (max_edges >= 0) gen_opts.max_edges = max_edges;
      return run_gen(gen_n, gen_opts);
    }
    if (*rand) return run_rand(model);
    if (*label) return run_label();
    if (*shrt) return run_short();
    if (*pick) return run_filter(filter_spec, false);
    if (*count) return run_filter(filter_spec, true);
    if (*iso) return run_iso(iso_a, iso_b);
    if (*repro) return run_repro(experiment, repro_max_n, trials, repro_seed);
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "gcanon: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
