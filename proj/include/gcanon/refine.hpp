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

// Equitable partition refinement.
//
// A colouring is equitable when, for every pair of cells (X, Y), all
// vertices of X have the same number of neighbours in Y. refine() computes
// the coarsest equitable colouring finer than its input. Splitting is
// label-independent: cells are scanned left to right and a cell that splits
// is replaced in place by its fragments, ordered by ascending neighbour
// count. Two colourings related by a permutation therefore refine to
// colourings related by the same permutation.

#ifndef GCANON_REFINE_HPP_
#define GCANON_REFINE_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "gcanon/graph.hpp"

namespace gcanon {

// Optional extra vertex invariant for the canonical search. It must depend
// only on the isomorphism type of (graph, colouring, vertex).
using VertexInvariant =
    std::function<std::int64_t(const Graph&, const Colouring&, Vertex)>;

namespace detail {

// Ordered partition as a vertex array cut into consecutive cells. Cells are
// named by their start index into lab.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<int> cell_of;    // vertex -> start of its cell
  std::vector<int> cell_size;  // meaningful at cell starts only
  int num_cells = 0;

  static Partition from_colouring(const Colouring& pi) {
    Partition p;
    const int n = pi.order();
    p.lab.reserve(static_cast<std::size_t>(n));
    p.cell_of.assign(static_cast<std::size_t>(n), 0);
    p.cell_size.assign(static_cast<std::size_t>(n), 0);
    for (const auto& cell : pi.cells()) {
      const int start = static_cast<int>(p.lab.size());
      p.cell_size[start] = static_cast<int>(cell.size());
      for (Vertex v : cell) {
        p.cell_of[v] = start;
        p.lab.push_back(v);
      }
      ++p.num_cells;
    }
    return p;
  }

  int order() const { return static_cast<int>(lab.size()); }
  bool discrete() const { return num_cells == order(); }

  std::vector<int> cell_starts() const {
    std::vector<int> starts;
    starts.reserve(static_cast<std::size_t>(num_cells));
    for (int c = 0; c < order(); c += cell_size[c]) starts.push_back(c);
    return starts;
  }

  Colouring to_colouring() const {
    std::vector<Colouring::Cell> cells;
    cells.reserve(static_cast<std::size_t>(num_cells));
    for (int c = 0; c < order(); c += cell_size[c]) {
      cells.emplace_back(lab.begin() + c, lab.begin() + c + cell_size[c]);
    }
    return Colouring(std::move(cells));
  }

  // Splits v off the front of its cell; returns the start of the singleton.
  int individualize(Vertex v) {
    const int start = cell_of[v];
    const int size = cell_size[start];
    auto it = std::find(lab.begin() + start, lab.begin() + start + size, v);
    std::iter_swap(lab.begin() + start, it);
    cell_size[start] = 1;
    cell_size[start + 1] = size - 1;
    for (int i = start + 1; i < start + size; ++i) cell_of[lab[i]] = start + 1;
    ++num_cells;
    return start;
  }
};

// Reusable scratch space for refining partitions of one graph.
class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g),
        mask_(static_cast<std::size_t>(g.row_words())),
        count_(static_cast<std::size_t>(g.order())),
        queued_(static_cast<std::size_t>(g.order())) {}

  // Refines p to the coarsest equitable partition, assuming p is already
  // equitable with respect to every cell not listed in splitters (and not
  // created during this call).
  void refine(Partition& p, const std::vector<int>& splitters) {
    const int n = p.order();
    queue_.clear();
    std::fill(queued_.begin(), queued_.end(), 0);
    for (int s : splitters) push(s);

    for (std::size_t head = 0; head < queue_.size() && !p.discrete(); ++head) {
      const int s = queue_[head];
      queued_[s] = 0;
      std::fill(mask_.begin(), mask_.end(), 0);
      for (int i = s; i < s + p.cell_size[s]; ++i) {
        const Vertex v = p.lab[i];
        mask_[v / kWordBits] |= Word{1} << (v % kWordBits);
      }
      for (int c = 0; c < n;) {
        const int end = c + p.cell_size[c];
        if (end - c > 1) split(p, c, end);
        c = end;
      }
    }
  }

  // Splits every non-singleton cell by the invariant; returns the starts of
  // all new fragments (empty when nothing split).
  std::vector<int> split_by_invariant(Partition& p, const VertexInvariant& inv) {
    const Colouring col = p.to_colouring();
    std::vector<std::int64_t> key(static_cast<std::size_t>(p.order()));
    std::vector<int> created;
    for (int c = 0; c < p.order();) {
      const int end = c + p.cell_size[c];
      if (end - c > 1) {
        for (int i = c; i < end; ++i) key[p.lab[i]] = inv(g_, col, p.lab[i]);
        std::sort(p.lab.begin() + c, p.lab.begin() + end,
                  [&](Vertex a, Vertex b) { return key[a] < key[b]; });
        std::vector<int> fragments;
        int fs = c;
        for (int i = c + 1; i <= end; ++i) {
          if (i == end || key[p.lab[i]] != key[p.lab[fs]]) {
            p.cell_size[fs] = i - fs;
            for (int j = fs; j < i; ++j) p.cell_of[p.lab[j]] = fs;
            fragments.push_back(fs);
            fs = i;
          }
        }
        if (fragments.size() > 1) {
          p.num_cells += static_cast<int>(fragments.size()) - 1;
          created.insert(created.end(), fragments.begin(), fragments.end());
        }
      }
      c = end;
    }
    return created;
  }

 private:
  void push(int s) {
    if (!queued_[s]) {
      queued_[s] = 1;
      queue_.push_back(s);
    }
  }

  int neighbours_in_mask(Vertex v) const {
    const auto row = g_.row(v);
    int total = 0;
    for (std::size_t w = 0; w < row.size(); ++w) total += std::popcount(row[w] & mask_[w]);
    return total;
  }

  void split(Partition& p, int start, int end) {
    bool uniform = true;
    const int first = count_[p.lab[start]] = neighbours_in_mask(p.lab[start]);
    for (int i = start + 1; i < end; ++i) {
      const int k = count_[p.lab[i]] = neighbours_in_mask(p.lab[i]);
      uniform = uniform && k == first;
    }
    if (uniform) return;

    std::sort(p.lab.begin() + start, p.lab.begin() + end,
              [&](Vertex a, Vertex b) { return count_[a] < count_[b]; });
    int fs = start;
    for (int i = start + 1; i <= end; ++i) {
      if (i == end || count_[p.lab[i]] != count_[p.lab[fs]]) {
        p.cell_size[fs] = i - fs;
        for (int j = fs; j < i; ++j) p.cell_of[p.lab[j]] = fs;
        if (fs != start) ++p.num_cells;
        push(fs);
        fs = i;
      }
    }
  }

  const Graph& g_;
  std::vector<Word> mask_;
  std::vector<int> count_;
  std::vector<char> queued_;
  std::vector<int> queue_;
};

}  // namespace detail

// Coarsest equitable colouring finer than pi, using neighbour counts.
inline Colouring refine(const Graph& g, const Colouring& pi) {
  if (pi.order() != g.order()) {
    throw SizeMismatchError("colouring of " + std::to_string(pi.order()) +
                            " vertices for a graph of order " + std::to_string(g.order()));
  }
  if (g.order() == 0) return pi;
  auto p = detail::Partition::from_colouring(pi);
  detail::Refiner refiner(g);
  refiner.refine(p, p.cell_starts());
  return p.to_colouring();
}

}  // namespace gcanon

#endif  // GCANON_REFINE_HPP_
