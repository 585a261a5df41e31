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

// Elementary graph invariants used by filters and generation.

#ifndef GCANON_PROPERTIES_HPP_
#define GCANON_PROPERTIES_HPP_

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "gcanon/graph.hpp"

namespace gcanon {

inline int num_edges(const Graph& g) {
  int twice = 0;
  for (Vertex v = 0; v < g.order(); ++v) twice += g.degree(v);
  return twice / 2;
}

// Degrees in ascending order.
inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

inline int min_degree(const Graph& g) {
  int m = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) m = std::min(m, g.degree(v));
  return g.order() == 0 ? 0 : m;
}

inline int max_degree(const Graph& g) {
  int m = 0;
  for (Vertex v = 0; v < g.order(); ++v) m = std::max(m, g.degree(v));
  return m;
}

inline bool is_regular(const Graph& g) {
  return g.order() == 0 || min_degree(g) == max_degree(g);
}

namespace detail {

// Component label per vertex, restricted to vertices with alive[v] set.
// Returns the number of components among alive vertices.
inline int label_components(const Graph& g, const std::vector<bool>& alive,
                            std::vector<int>& label) {
  const int n = g.order();
  label.assign(static_cast<std::size_t>(n), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (!alive[s] || label[s] >= 0) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w = 0; w < n; ++w) {
        if (alive[w] && label[w] < 0 && g.adjacent(v, w)) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

// Maximum number of internally vertex-disjoint s-t paths, s and t
// non-adjacent. Unit-capacity max flow on the vertex-split network.
inline int local_connectivity(const Graph& g, Vertex s, Vertex t) {
  const int n = g.order();
  // Node 2v is v_in, 2v+1 is v_out.
  const int m = 2 * n;
  std::vector<int> cap(static_cast<std::size_t>(m) * m, 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * m + b]; };
  const int inf = n + 1;
  for (Vertex v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = (v == s || v == t) ? inf : 1;
    for (Vertex w = 0; w < n; ++w)
      if (g.adjacent(v, w)) at(2 * v + 1, 2 * w) = inf;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(m));
  while (true) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < m; ++b) {
        if (parent[b] < 0 && at(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[sink] < 0) return flow;
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++flow;
  }
}

}  // namespace detail

inline int connected_components(const Graph& g) {
  std::vector<int> label;
  return detail::label_components(g, std::vector<bool>(g.order(), true), label);
}

inline bool is_connected(const Graph& g) { return connected_components(g) == 1; }

// Proper 2-colouring (0/1 per vertex) if one exists.
inline std::optional<std::vector<int>> two_colouring(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w = 0; w < n; ++w) {
        if (!g.adjacent(v, w)) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) { return two_colouring(g).has_value(); }

// Cyclomatic number |E| - |V| + c; zero exactly for forests.
inline int circuit_rank(const Graph& g) {
  return num_edges(g) - g.order() + connected_components(g);
}

// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (2 * dist[v] + 1 >= best) break;
      for (Vertex w = 0; w < n; ++w) {
        if (!g.adjacent(v, w) || w == parent[v]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

// Vertex connectivity with exact-k semantics: 0 for a disconnected graph,
// otherwise the least number of vertices whose deletion disconnects G.
// Complete graphs K_n (n >= 2) get n - 1; the single vertex is connected
// and gets 1.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw ZeroVertexError();
  if (n == 1) return 1;
  if (!is_connected(g)) return 0;
  if (num_edges(g) == n * (n - 1) / 2) return n - 1;

  // Some vertex with index <= kappa lies outside a minimum separator, and a
  // vertex of larger index lies in another component after the deletion.
  int best = min_degree(g);
  for (Vertex i = 0; i <= best && i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, detail::local_connectivity(g, i, j));
    }
  }
  return best;
}

}  // namespace gcanon

#endif  // GCANON_PROPERTIES_HPP_
