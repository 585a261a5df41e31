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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gcanon/canon.hpp"
#include "gcanon/generate.hpp"
#include "gcanon/properties.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gcanon {
namespace {

Graph FiveCycle() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
Graph RelabelledFiveCycle() {
  return Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
}

std::vector<std::vector<int>> Images(const std::vector<Permutation>& gens) {
  std::vector<std::vector<int>> out;
  for (const auto& g : gens) out.push_back(g.image());
  return out;
}

// Checks every documented postcondition of one canonical_label call.
void ExpectValidResult(const Graph& g, const Colouring& pi, const CanonResult& r) {
  EXPECT_EQ(r.canonical_graph, apply_to_graph(g, r.labelling));
  EXPECT_EQ(apply_to_colouring(r.labelling, pi), normal_colouring(pi));
  for (const Permutation& a : r.automorphism_generators) {
    EXPECT_EQ(apply_to_graph(g, a), g);
    EXPECT_TRUE(is_colour_preserving(a, pi));
  }
  EXPECT_GE(r.leaves_explored, 1u);
}

TEST(CanonTest, CompleteGraph) {
  CanonResult r = canonical_label(Graph::complete(5));
  EXPECT_EQ(r.canonical_graph, Graph::complete(5));
  EXPECT_EQ(testing::group_order(5, Images(r.automorphism_generators)), 120u);
  ExpectValidResult(Graph::complete(5), Colouring::unit(5), r);
}

TEST(CanonTest, FiveCycleAndRelabelling) {
  EXPECT_EQ(canonical_label(FiveCycle()).canonical_graph,
            canonical_label(RelabelledFiveCycle()).canonical_graph);
}

TEST(CanonTest, ZeroVertexAndSizeMismatch) {
  EXPECT_THROW(canonical_label(Graph(0)), ZeroVertexError);
  EXPECT_THROW(canonical_label(Graph(3), Colouring::unit(4)), SizeMismatchError);
}

TEST(CanonTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 9;
    Graph g = testing::random_graph(rng, n, density(rng));
    Permutation s(testing::random_permutation(rng, n));
    Graph h = apply_to_graph(g, s);
    CanonResult rg = canonical_label(g);
    CanonResult rh = canonical_label(h);
    ASSERT_EQ(rg.canonical_graph, rh.canonical_graph) << encode_graph6(g);
    ExpectValidResult(g, Colouring::unit(n), rg);
  }
}

TEST(CanonTest, ColouredInvariance) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 8;
    Graph g = testing::random_graph(rng, n, 0.5);
    Colouring pi(testing::random_cells(rng, n, 3));
    Permutation s(testing::random_permutation(rng, n));
    CanonResult a = canonical_label(g, pi);
    CanonResult b = canonical_label(apply_to_graph(g, s), apply_to_colouring(s, pi));
    ASSERT_EQ(a.canonical_graph, b.canonical_graph);
    ExpectValidResult(g, pi, a);
  }
}

TEST(CanonTest, HardRegularGraphs) {
  // Vertex-transitive and strongly regular inputs where refinement does
  // nothing at the root.
  Graph::Builder petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  Graph p = std::move(petersen).build();
  Graph::Builder cube(8);
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (v < (v ^ (1 << bit))) cube.add_edge(v, v ^ (1 << bit));
  Graph q = std::move(cube).build();

  std::mt19937_64 rng(43);
  for (const Graph& g : {p, q, Graph::cycle(12), Graph(9)}) {
    CanonResult base = canonical_label(g);
    ExpectValidResult(g, Colouring::unit(g.order()), base);
    for (int t = 0; t < 20; ++t) {
      Permutation s(testing::random_permutation(rng, g.order()));
      EXPECT_EQ(canonical_label(apply_to_graph(g, s)).canonical_graph, base.canonical_graph);
    }
  }
  EXPECT_EQ(testing::group_order(10, Images(automorphism_generators(p))), 120u);
  EXPECT_EQ(testing::group_order(8, Images(automorphism_generators(q))), 48u);
}

TEST(CanonTest, PruningDoesNotChangeTheResult) {
  std::mt19937_64 rng(44);
  CanonOptions no_prune;
  no_prune.prune_automorphisms = false;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    Graph g = testing::random_graph(rng, n, trial % 3 == 0 ? 0.1 : 0.5);
    Colouring pi(testing::random_cells(rng, n, 2));
    CanonResult pruned = canonical_label(g, pi);
    CanonResult full = canonical_label(g, pi, no_prune);
    ASSERT_EQ(encode_graph6(pruned.canonical_graph), encode_graph6(full.canonical_graph));
    EXPECT_LE(pruned.leaves_explored, full.leaves_explored);
  }
  EXPECT_EQ(canonical_label(Graph(6), Colouring::unit(6), no_prune).leaves_explored, 720u);
}

TEST(CanonTest, CustomInvariantKeepsCanonicity) {
  CanonOptions opts;
  opts.invariant = [](const Graph& g, const Colouring&, Vertex v) -> std::int64_t {
    std::int64_t triangles = 0;
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = a + 1; b < g.order(); ++b)
        triangles += g.adjacent(v, a) && g.adjacent(v, b) && g.adjacent(a, b);
    return triangles;
  };
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 9;
    Graph g = testing::random_graph(rng, n, 0.5);
    Permutation s(testing::random_permutation(rng, n));
    CanonResult a = canonical_label(g, Colouring::unit(n), opts);
    CanonResult b = canonical_label(apply_to_graph(g, s), Colouring::unit(n), opts);
    ASSERT_EQ(a.canonical_graph, b.canonical_graph);
    ExpectValidResult(g, Colouring::unit(n), a);
  }
}

TEST(IsomorphismTest, CycleAndCompleteExamples) {
  EXPECT_TRUE(are_isomorphic(FiveCycle(), RelabelledFiveCycle()));
  EXPECT_FALSE(are_isomorphic(FiveCycle(), Graph::complete(5)));
  EXPECT_FALSE(are_isomorphic(FiveCycle(), Graph::cycle(6)));
  EXPECT_THROW(are_isomorphic(Graph(0), Graph(1)), ZeroVertexError);
}

TEST(IsomorphismTest, UnequalCellSizesAreNotIsomorphic) {
  Graph g(4);
  EXPECT_FALSE(are_isomorphic(g, g, Colouring({{0}, {1, 2, 3}}), Colouring({{0, 1}, {2, 3}})));
  EXPECT_TRUE(are_isomorphic(g, g, Colouring({{0}, {1, 2, 3}}), Colouring({{3}, {1, 2, 0}})));
}

TEST(IsomorphismTest, ClassesMatchBruteForceUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, std::string> brute_to_ours;
    std::map<std::string, std::string> ours_to_brute;
    for (const Graph& g : testing::all_labelled_graphs(n)) {
      const std::string brute = testing::brute_canonical_bits(g);
      const std::string ours = encode_graph6(canonical_label(g).canonical_graph);
      auto [a, fresh_a] = brute_to_ours.try_emplace(brute, ours);
      auto [b, fresh_b] = ours_to_brute.try_emplace(ours, brute);
      ASSERT_EQ(a->second, ours);
      ASSERT_EQ(b->second, brute);
    }
    EXPECT_EQ(brute_to_ours.size(), generate_graphs(n).size());
  }
}

TEST(IsomorphismTest, RandomPairsAtSevenMatchBruteForce) {
  std::mt19937_64 rng(46);
  std::vector<Graph> graphs;
  for (int i = 0; i < 25; ++i) graphs.push_back(testing::random_graph(rng, 7, 0.5));
  for (int i = 0; i < 25; ++i) {
    graphs.push_back(apply_to_graph(graphs[i], Permutation(testing::random_permutation(rng, 7))));
  }
  int agreements = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      ASSERT_EQ(are_isomorphic(graphs[i], graphs[j]),
                testing::brute_isomorphic(graphs[i], graphs[j]));
      ++agreements;
    }
  }
  EXPECT_EQ(agreements, 50 * 51 / 2);
}

TEST(IsomorphismTest, ColouredTheoremBothDirections) {
  std::mt19937_64 rng(47);
  int positives = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + trial % 6;
    Graph g = testing::random_graph(rng, n, 0.5);
    Colouring pi(testing::random_cells(rng, n, 3));
    Graph h;
    Colouring rho;
    if (trial % 2 == 0) {
      Permutation s(testing::random_permutation(rng, n));
      h = apply_to_graph(g, s);
      rho = apply_to_colouring(s, pi);
      if (trial % 4 == 0) {
        // Same cell sizes, vertices shuffled between cells.
        auto shuffled = testing::random_permutation(rng, n);
        std::vector<Colouring::Cell> cells;
        std::size_t k = 0;
        for (int size : pi.cell_sizes()) {
          cells.emplace_back(shuffled.begin() + k, shuffled.begin() + k + size);
          k += size;
        }
        rho = Colouring(cells);
      }
    } else {
      h = testing::random_graph(rng, n, 0.5);
      rho = Colouring(testing::random_cells(rng, n, 3));
    }
    const bool expected = pi.cell_sizes() == rho.cell_sizes() &&
                          testing::brute_isomorphic(g, h, pi.cell_index(), rho.cell_index());
    ASSERT_EQ(are_isomorphic(g, h, pi, rho), expected);
    positives += expected;
  }
  EXPECT_GT(positives, 100);
}

TEST(AutomorphismTest, SmallGroups) {
  EXPECT_EQ(testing::group_order(3, Images(automorphism_generators(Graph::complete(3)))), 6u);
  auto path = automorphism_generators(Graph::path(3));
  ASSERT_EQ(path.size(), 1u);
  EXPECT_EQ(path[0], Permutation({2, 1, 0}));

  auto c5 = automorphism_generators(FiveCycle());
  const std::size_t order = testing::group_order(5, Images(c5));
  EXPECT_EQ(10u % order, 0u);
  EXPECT_EQ(static_cast<long long>(order), testing::brute_automorphism_count(FiveCycle()));
  for (const auto& a : c5) EXPECT_EQ(apply_to_graph(FiveCycle(), a), FiveCycle());
}

TEST(AutomorphismTest, GeneratedGroupDividesFullGroupUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (const std::string& s : generate_graphs(n)) {
      Graph g = decode(s);
      const auto gens = automorphism_generators(g);
      const auto order = static_cast<long long>(testing::group_order(n, Images(gens)));
      const long long full = testing::brute_automorphism_count(g);
      ASSERT_EQ(full % order, 0) << s;
      // Holds for this search on every small graph, though not promised.
      EXPECT_EQ(order, full) << s;
    }
  }
}

TEST(RemoveIsomorphsTest, AllRelabellingsOfFiveCycle) {
  std::vector<std::string> strings;
  std::vector<int> p{0, 1, 2, 3, 4};
  do {
    Graph::Builder b(5);
    for (int i = 0; i < 5; ++i) b.add_edge(p[i], p[(i + 1) % 5]);
    strings.push_back(encode_graph6(std::move(b).build()));
  } while (std::next_permutation(p.begin(), p.end()));
  ASSERT_EQ(strings.size(), 120u);
  auto kept = remove_isomorphs(std::span<const std::string>(strings));
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0], strings[0]);
  EXPECT_TRUE(are_isomorphic(decode(kept[0]), FiveCycle()));
}

TEST(RemoveIsomorphsTest, EmptyAndDuplicatedCensus) {
  EXPECT_TRUE(remove_isomorphs(std::span<const std::string>()).empty());
  EXPECT_TRUE(remove_isomorphs(std::span<const Graph>()).empty());
  auto five = generate_graphs(5);
  std::vector<std::string> doubled = five;
  doubled.insert(doubled.end(), five.rbegin(), five.rend());
  EXPECT_EQ(remove_isomorphs(std::span<const std::string>(doubled)), five);
}

TEST(RemoveIsomorphsTest, GraphOverloadKeepsFirstOccurrence) {
  std::vector<Graph> graphs{RelabelledFiveCycle(), Graph::complete(3), FiveCycle(), Graph(3)};
  auto kept = remove_isomorphs(std::span<const Graph>(graphs));
  ASSERT_EQ(kept.size(), 3u);
  EXPECT_EQ(kept[0], RelabelledFiveCycle());
  EXPECT_EQ(kept[2], Graph(3));
}

TEST(RemoveIsomorphsTest, ReportsItemIndex) {
  std::vector<std::string> items{"Dhc", "D~{", "Dh"};
  try {
    remove_isomorphs(std::span<const std::string>(items));
    FAIL() << "expected an ItemError";
  } catch (const ItemError& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

}  // namespace
}  // namespace gcanon
