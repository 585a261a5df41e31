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

// Value types shared by every module: a dense simple undirected graph, a
// vertex permutation and an ordered vertex partition ("colouring").
//
// Vertices are 0-based. Adjacency is stored as one bit row per vertex, so
// graphs are meant for small orders; max_vertices() bounds n.

#ifndef GCANON_GRAPH_HPP_
#define GCANON_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcanon/error.hpp"

namespace gcanon {

using Vertex = int;
using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

inline constexpr int kDefaultMaxVertices = 64;
// Largest order expressible by the 4-byte Graph6 header.
inline constexpr int kHardMaxVertices = 258047;

// Vertex-count cap. Defaults to 64 and may be raised or lowered through the
// GCANON_MAX_N environment variable (read once per process).
inline int max_vertices() {
  static const int cap = [] {
    const char* env = std::getenv("GCANON_MAX_N");
    if (env == nullptr || *env == '\0') return kDefaultMaxVertices;
    std::string_view text(env);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
      return kDefaultMaxVertices;
    }
    return std::min(value, kHardMaxVertices);
  }();
  return cap;
}

inline void check_order(int n) {
  if (n < 0) throw SizeMismatchError("negative vertex count");
  if (n > max_vertices()) {
    throw CapacityError("graph order " + std::to_string(n) +
                        " exceeds the vertex cap of " +
                        std::to_string(max_vertices()));
  }
}

inline int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  class Builder;

  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n), words_(words_for(n)) {
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  }

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int order() const { return n_; }
  int row_words() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (row(u)[static_cast<std::size_t>(v / kWordBits)] >> (v % kWordBits)) & 1U;
  }

  std::span<const Word> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  int degree(Vertex v) const {
    int d = 0;
    for (Word w : row(v)) d += std::popcount(w);
    return d;
  }

  // Edges {u, v} with u < v, sorted by (v, u): the Graph6 column order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex v = 1; v < n_; ++v)
      for (Vertex u = 0; u < v; ++u)
        if (adjacent(u, v)) out.push_back({u, v});
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
      throw SizeMismatchError("vertex " + std::to_string(v) +
                              " out of range for order " + std::to_string(n_));
    }
  }

  void set(Vertex u, Vertex v) {
    rows_[static_cast<std::size_t>(u) * words_ + v / kWordBits] |=
        Word{1} << (v % kWordBits);
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<Word> rows_;
};

// Incremental construction; the finished Graph is immutable.
class Graph::Builder {
 public:
  explicit Builder(int n) : g_(n) {}

  Builder& add_edge(Vertex u, Vertex v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    g_.set(u, v);
    g_.set(v, u);
    return *this;
  }

  bool has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

inline Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Builder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

inline Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph Graph::complete(int n) {
  Builder b(n);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph Graph::cycle(int n) {
  Builder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

inline Graph Graph::path(int n) {
  Builder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

// A bijection on 0..n-1; image()[v] is the image of v.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (Vertex v : image_) {
      if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[v]) {
        throw Error("permutation image is not a bijection");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<Vertex> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[i] = i;
    return Permutation(std::move(image), Unchecked{});
  }

  int size() const { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  const std::vector<Vertex>& image() const { return image_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<Vertex> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv), Unchecked{});
  }

  // (after ∘ *this): v -> after(this(v)).
  Permutation then(const Permutation& after) const {
    if (after.size() != size()) throw SizeMismatchError("permutation sizes differ");
    std::vector<Vertex> out(image_.size());
    for (int i = 0; i < size(); ++i) out[i] = after.image_[image_[i]];
    return Permutation(std::move(out), Unchecked{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Vertex> image, Unchecked) : image_(std::move(image)) {}

  std::vector<Vertex> image_;
};

// Ordered partition (V1, ..., Vm) of 0..n-1. Each cell is kept sorted, so
// equality compares cells as sets in sequence.
class Colouring {
 public:
  using Cell = std::vector<Vertex>;

  Colouring() = default;

  explicit Colouring(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::size_t n = 0;
    for (Cell& c : cells_) {
      if (c.empty()) throw Error("colouring has an empty cell");
      std::sort(c.begin(), c.end());
      n += c.size();
    }
    std::vector<bool> seen(n, false);
    for (const Cell& c : cells_) {
      for (Vertex v : c) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) {
          throw Error("colouring cells are not a partition of 0..n-1");
        }
        seen[v] = true;
      }
    }
    n_ = static_cast<int>(n);
  }

  // Single cell holding every vertex; the empty colouring when n == 0.
  static Colouring unit(int n) {
    if (n == 0) return Colouring();
    Cell all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[i] = i;
    return Colouring(std::vector<Cell>{std::move(all)});
  }

  int order() const { return n_; }
  std::size_t num_cells() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(std::size_t i) const { return cells_[i]; }
  bool is_discrete() const { return cells_.size() == static_cast<std::size_t>(n_); }

  std::vector<int> cell_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(cells_.size());
    for (const Cell& c : cells_) sizes.push_back(static_cast<int>(c.size()));
    return sizes;
  }

  // cell_index()[v] is the position of the cell containing v.
  std::vector<int> cell_index() const {
    std::vector<int> idx(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells_.size(); ++i)
      for (Vertex v : cells_[i]) idx[v] = static_cast<int>(i);
    return idx;
  }

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::vector<Cell> cells_;
  int n_ = 0;
};

// sigma(G): edge {sigma(u), sigma(v)} for every edge {u, v} of G.
inline Graph apply_to_graph(const Graph& g, const Permutation& sigma) {
  if (sigma.size() != g.order()) {
    throw SizeMismatchError("permutation of length " + std::to_string(sigma.size()) +
                            " applied to a graph of order " + std::to_string(g.order()));
  }
  Graph::Builder b(g.order());
  for (Vertex v = 1; v < g.order(); ++v)
    for (Vertex u = 0; u < v; ++u)
      if (g.adjacent(u, v)) b.add_edge(sigma(u), sigma(v));
  return std::move(b).build();
}

// sigma(pi): cell i becomes {sigma(v) | v in V_i}; cell order is kept.
inline Colouring apply_to_colouring(const Permutation& sigma, const Colouring& pi) {
  if (sigma.size() != pi.order()) {
    throw SizeMismatchError("permutation of length " + std::to_string(sigma.size()) +
                            " applied to a colouring of " + std::to_string(pi.order()) +
                            " vertices");
  }
  std::vector<Colouring::Cell> cells;
  cells.reserve(pi.num_cells());
  for (const auto& c : pi.cells()) {
    Colouring::Cell image;
    image.reserve(c.size());
    for (Vertex v : c) image.push_back(sigma(v));
    cells.push_back(std::move(image));
  }
  return Colouring(std::move(cells));
}

inline bool is_colour_preserving(const Permutation& sigma, const Colouring& pi) {
  return apply_to_colouring(sigma, pi) == pi;
}

// c(pi): consecutive integer blocks with the cell sizes of pi.
inline Colouring normal_colouring(const Colouring& pi) {
  std::vector<Colouring::Cell> cells;
  Vertex next = 0;
  for (int size : pi.cell_sizes()) {
    Colouring::Cell block(static_cast<std::size_t>(size));
    for (Vertex& v : block) v = next++;
    cells.push_back(std::move(block));
  }
  return Colouring(std::move(cells));
}

}  // namespace gcanon

#endif  // GCANON_GRAPH_HPP_
