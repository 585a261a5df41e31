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
#include <random>
#include <set>
#include <vector>

#include "gcanon/refine.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gcanon {
namespace {

bool IsEquitable(const Graph& g, const Colouring& c) {
  for (const auto& x : c.cells()) {
    for (const auto& y : c.cells()) {
      std::set<int> counts;
      for (Vertex v : x) {
        int k = 0;
        for (Vertex w : y) k += g.adjacent(v, w);
        counts.insert(k);
      }
      if (counts.size() > 1) return false;
    }
  }
  return true;
}

bool IsFinerThan(const Colouring& fine, const Colouring& coarse) {
  const auto idx = coarse.cell_index();
  for (const auto& cell : fine.cells())
    for (Vertex v : cell)
      if (idx[v] != idx[cell.front()]) return false;
  return true;
}

// Classic colour refinement on unordered classes: recolour by (colour,
// sorted neighbour colours) until the number of classes stops growing.
std::set<std::set<int>> OracleRefinement(const Graph& g, const Colouring& pi) {
  const int n = g.order();
  std::vector<int> colour = pi.cell_index();
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (g.adjacent(v, w)) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      auto key = std::make_pair(colour[v], nb);
      auto it = ids.try_emplace(key, static_cast<int>(ids.size())).first;
      next[v] = it->second;
    }
    const auto classes = [&](const std::vector<int>& c) {
      return std::set<int>(c.begin(), c.end()).size();
    };
    const bool stable = classes(next) == classes(colour);
    colour = next;
    if (stable) break;
  }
  std::map<int, std::set<int>> cells;
  for (int v = 0; v < n; ++v) cells[colour[v]].insert(v);
  std::set<std::set<int>> out;
  for (auto& [k, c] : cells) out.insert(c);
  return out;
}

std::set<std::set<int>> AsSetPartition(const Colouring& c) {
  std::set<std::set<int>> out;
  for (const auto& cell : c.cells()) out.insert(std::set<int>(cell.begin(), cell.end()));
  return out;
}

TEST(RefineTest, RegularGraphsStayUnit) {
  for (const Graph& g : {Graph::cycle(5), Graph::complete(4), Graph(6), Graph::cycle(8)}) {
    EXPECT_EQ(refine(g, Colouring::unit(g.order())), Colouring::unit(g.order()));
  }
}

TEST(RefineTest, PathSplitsByDegreeAscending) {
  EXPECT_EQ(refine(Graph::path(3), Colouring::unit(3)), Colouring({{0, 2}, {1}}));
  // Path on 5 vertices: the centre sees no leaf, so it precedes {1, 3}.
  EXPECT_EQ(refine(Graph::path(5), Colouring::unit(5)), Colouring({{0, 4}, {2}, {1, 3}}));
}

TEST(RefineTest, SizeMismatch) {
  EXPECT_THROW(refine(Graph(3), Colouring::unit(4)), SizeMismatchError);
}

TEST(RefineTest, EquitableCoarsestAndMonotone) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 7;
    Graph g = testing::random_graph(rng, n, 0.45);
    Colouring pi(testing::random_cells(rng, n, 3));
    Colouring r = refine(g, pi);
    ASSERT_TRUE(IsEquitable(g, r));
    ASSERT_TRUE(IsFinerThan(r, pi));
    ASSERT_EQ(refine(g, r), r);
    ASSERT_EQ(AsSetPartition(r), OracleRefinement(g, pi));

    // No merge of two cells that stays within pi is equitable.
    for (std::size_t i = 0; i < r.num_cells(); ++i) {
      for (std::size_t j = i + 1; j < r.num_cells(); ++j) {
        std::vector<Colouring::Cell> cells;
        Colouring::Cell merged = r.cell(i);
        merged.insert(merged.end(), r.cell(j).begin(), r.cell(j).end());
        cells.push_back(merged);
        for (std::size_t k = 0; k < r.num_cells(); ++k)
          if (k != i && k != j) cells.push_back(r.cell(k));
        Colouring coarser(cells);
        ASSERT_FALSE(IsEquitable(g, coarser) && IsFinerThan(coarser, pi));
      }
    }
  }
}

TEST(RefineTest, CommutesWithRelabelling) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 9;
    Graph g = testing::random_graph(rng, n, 0.5);
    Colouring pi(testing::random_cells(rng, n, 3));
    Permutation s(testing::random_permutation(rng, n));
    EXPECT_EQ(refine(apply_to_graph(g, s), apply_to_colouring(s, pi)),
              apply_to_colouring(s, refine(g, pi)));
  }
}

}  // namespace
}  // namespace gcanon
