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

// Exhaustive generation of non-isomorphic graphs and G(n, p) sampling.

#ifndef GCANON_GENERATE_HPP_
#define GCANON_GENERATE_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcanon/canon.hpp"
#include "gcanon/codec.hpp"
#include "gcanon/graph.hpp"
#include "gcanon/properties.hpp"

namespace gcanon {

struct GenOptions {
  bool only_connected = false;
  bool only_bipartite = false;
  std::optional<int> min_edges;
  std::optional<int> max_edges;

  void validate() const {
    if ((min_edges && *min_edges < 0) || (max_edges && *max_edges < 0)) {
      throw Error("edge bounds must be non-negative");
    }
    if (min_edges && max_edges && *min_edges > *max_edges) {
      throw Error("min_edges exceeds max_edges");
    }
  }

  bool accepts_final(const Graph& g) const {
    const int m = num_edges(g);
    if (min_edges && m < *min_edges) return false;
    if (max_edges && m > *max_edges) return false;
    if (only_connected && !is_connected(g)) return false;
    return true;
  }
};

namespace detail {

// Canonical graphs of one order, keyed by their Graph6 string.
using Level = std::unordered_map<std::string, Graph>;

// Adds vertex m to every parent with each of the 2^m neighbourhoods and
// keeps one canonical representative per class. Only prunes that are
// inherited by induced subgraphs (bipartite, edge cap) are applied here.
inline Level augment(const Level& parents, int m, const GenOptions& opts) {
  if (m >= 31) throw CapacityError("exhaustive generation is limited to n <= 31");
  Level next;
  for (const auto& [key, parent] : parents) {
    const std::vector<Edge> base = parent.edges();
    const int base_edges = static_cast<int>(base.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
      if (opts.max_edges && base_edges + std::popcount(mask) > *opts.max_edges) continue;
      Graph::Builder b(m + 1);
      for (const Edge& e : base) b.add_edge(e.u, e.v);
      for (Vertex u = 0; u < m; ++u)
        if ((mask >> u) & 1U) b.add_edge(u, m);
      Graph child = std::move(b).build();
      if (opts.only_bipartite && !is_bipartite(child)) continue;
      Graph canon = canonical_label(child).canonical_graph;
      std::string s = encode_graph6(canon);
      next.try_emplace(std::move(s), std::move(canon));
    }
  }
  return next;
}

inline Level first_level() {
  Level level;
  level.emplace(encode_graph6(Graph(1)), Graph(1));
  return level;
}

inline std::vector<std::string> finish(const Level& level, const GenOptions& opts) {
  std::vector<std::string> out;
  for (const auto& [key, g] : level)
    if (opts.accepts_final(g)) out.push_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

inline void check_generation_order(int n) {
  if (n == 0) throw ZeroVertexError();
  if (n < 0) throw Error("vertex count must be positive");
  check_order(n);
}

}  // namespace detail

// Classes on n = 1..max_n vertices; element n-1 holds the sorted Graph6
// strings for order n. Intermediate orders are shared, so this is cheaper
// than calling generate_graphs() per order.
inline std::vector<std::vector<std::string>> generate_graph_levels(int max_n,
                                                                   const GenOptions& opts = {}) {
  detail::check_generation_order(max_n);
  opts.validate();
  std::vector<std::vector<std::string>> levels;
  detail::Level level = detail::first_level();
  levels.push_back(detail::finish(level, opts));
  for (int m = 1; m < max_n; ++m) {
    level = detail::augment(level, m, opts);
    levels.push_back(detail::finish(level, opts));
  }
  return levels;
}

// One canonical Graph6 string per isomorphism class on n vertices that
// satisfies opts, ascending in byte order.
inline std::vector<std::string> generate_graphs(int n, const GenOptions& opts = {}) {
  detail::check_generation_order(n);
  opts.validate();
  detail::Level level = detail::first_level();
  for (int m = 1; m < n; ++m) level = detail::augment(level, m, opts);
  return detail::finish(level, opts);
}

// Erdos-Renyi G(n, p) sampler.
struct RandomModel {
  int n = 1;
  std::size_t count = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// Samples are drawn from one std::mt19937_64 seeded with model.seed. Each
// sample visits the pairs in Graph6 column order, (0,1), (0,2), (1,2), ...,
// and includes a pair when u < p, u = (draw >> 11) * 2^-53. The stream is
// fully specified, so output is identical across platforms.
inline std::vector<Graph> generate_random_graphs(const RandomModel& model) {
  if (model.n == 0) throw ZeroVertexError();
  if (model.n < 0) throw Error("vertex count must be positive");
  if (!(model.p >= 0.0 && model.p <= 1.0)) {
    throw Error("edge probability must lie in [0, 1]");
  }
  check_order(model.n);
  std::mt19937_64 rng(model.seed);
  std::vector<Graph> out;
  out.reserve(model.count);
  for (std::size_t s = 0; s < model.count; ++s) {
    Graph::Builder b(model.n);
    for (Vertex v = 1; v < model.n; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (draw < model.p) b.add_edge(u, v);
      }
    }
    out.push_back(std::move(b).build());
  }
  return out;
}

}  // namespace gcanon

#endif  // GCANON_GENERATE_HPP_
