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

// Canonical labelling by individualization-refinement.
//
// The search tree is built from label-independent steps only: refine to an
// equitable colouring, pick the leftmost smallest non-singleton cell, and
// branch on individualizing each of its vertices. Every discrete leaf gives a
// labelling tau (position in the leaf order) and the relabelled graph
// tau(G). The canonical graph is the leaf graph with the lexicographically
// greatest upper-triangle bit string (Graph6 column order).
//
// Two leaves with equal graphs yield an automorphism. Automorphisms prune
// the tree in two ways, neither of which changes the canonical graph:
//  - siblings in the same orbit of the automorphisms fixing the current
//    prefix are skipped;
//  - a leaf equal to the first or best leaf ends its whole subtree up to the
//    point where its path left that leaf's path.

#ifndef GCANON_CANON_HPP_
#define GCANON_CANON_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gcanon/codec.hpp"
#include "gcanon/error.hpp"
#include "gcanon/graph.hpp"
#include "gcanon/refine.hpp"

namespace gcanon {

struct CanonOptions {
  // Orbit pruning and subtree skipping via discovered automorphisms.
  bool prune_automorphisms = true;
  // Extra invariant applied after each refinement; empty means neighbour
  // counts only.
  VertexInvariant invariant;
};

struct CanonResult {
  Graph canonical_graph;
  // tau with canonical_graph = tau(G) and tau(pi) = c(pi).
  Permutation labelling;
  std::vector<Permutation> automorphism_generators;
  std::size_t leaves_explored = 0;
};

namespace detail {

class CanonSearch {
 public:
  CanonSearch(const Graph& g, const CanonOptions& opts)
      : g_(g),
        opts_(opts),
        n_(g.order()),
        cert_words_((static_cast<std::size_t>(n_) * (n_ - 1) / 2 + kWordBits - 1) / kWordBits),
        refiner_(g),
        cert_(cert_words_) {}

  CanonResult run(const Colouring& pi) {
    Partition root = Partition::from_colouring(pi);
    search(root, root.cell_starts());

    std::vector<Vertex> tau(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) tau[best_lab_[i]] = i;
    Permutation labelling(std::move(tau));
    CanonResult result{apply_to_graph(g_, labelling), std::move(labelling),
                       std::move(generators_), leaves_};
    return result;
  }

 private:
  static constexpr int kNoJump = -1;

  void refine_node(Partition& p, std::vector<int> splitters) {
    while (true) {
      refiner_.refine(p, splitters);
      if (!opts_.invariant || p.discrete()) return;
      splitters = refiner_.split_by_invariant(p, opts_.invariant);
      if (splitters.empty()) return;
    }
  }

  // Returns the depth a backjump should resume at, or kNoJump.
  int search(Partition& p, std::vector<int> splitters) {
    refine_node(p, std::move(splitters));
    if (p.discrete()) return leaf(p);

    const int depth = static_cast<int>(path_.size());
    int target = -1;
    for (int c = 0; c < n_; c += p.cell_size[c]) {
      if (p.cell_size[c] > 1 && (target < 0 || p.cell_size[c] < p.cell_size[target])) {
        target = c;
      }
    }
    std::vector<Vertex> candidates(p.lab.begin() + target,
                                   p.lab.begin() + target + p.cell_size[target]);
    std::sort(candidates.begin(), candidates.end());

    std::vector<Vertex> explored;
    std::vector<int> orbit;
    std::size_t orbit_gens = static_cast<std::size_t>(-1);
    for (Vertex w : candidates) {
      if (opts_.prune_automorphisms && !explored.empty()) {
        if (orbit_gens != generators_.size()) {
          compute_orbits(orbit);
          orbit_gens = generators_.size();
        }
        const bool seen = std::any_of(explored.begin(), explored.end(),
                                      [&](Vertex e) { return orbit[e] == orbit[w]; });
        if (seen) continue;
      }
      Partition child = p;
      const int single = child.individualize(w);
      path_.push_back(w);
      const int jump = search(child, {single, single + 1});
      path_.pop_back();
      if (jump != kNoJump && jump < depth) return jump;
      explored.push_back(w);
    }
    return kNoJump;
  }

  // Orbits of the group generated by the automorphisms fixing path_.
  void compute_orbits(std::vector<int>& orbit) const {
    orbit.resize(static_cast<std::size_t>(n_));
    std::iota(orbit.begin(), orbit.end(), 0);
    auto find = [&](int v) {
      while (orbit[v] != v) v = orbit[v] = orbit[orbit[v]];
      return v;
    };
    for (const Permutation& gen : generators_) {
      const bool fixes = std::all_of(path_.begin(), path_.end(),
                                     [&](Vertex v) { return gen(v) == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(gen(v));
        if (a != b) orbit[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) orbit[v] = find(v);
  }

  // Upper triangle of the leaf's relabelled graph, column order, MSB first.
  void certificate(const Partition& p) {
    std::fill(cert_.begin(), cert_.end(), 0);
    std::size_t bit = 0;
    for (int j = 1; j < n_; ++j) {
      const auto row = g_.row(p.lab[j]);
      for (int i = 0; i < j; ++i, ++bit) {
        const Vertex u = p.lab[i];
        if ((row[u / kWordBits] >> (u % kWordBits)) & 1U) {
          cert_[bit / kWordBits] |= Word{1} << (kWordBits - 1 - bit % kWordBits);
        }
      }
    }
  }

  static int common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    const auto stop = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return static_cast<int>(stop.first - a.begin());
  }

  // from_lab[i] -> to_lab[i] for every position i.
  Permutation automorphism(const std::vector<Vertex>& from_lab,
                           const std::vector<Vertex>& to_lab) const {
    std::vector<Vertex> image(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) image[from_lab[i]] = to_lab[i];
    return Permutation(std::move(image));
  }

  void record(Permutation gen) {
    if (gen.is_identity()) return;
    if (std::find(generators_.begin(), generators_.end(), gen) == generators_.end()) {
      generators_.push_back(std::move(gen));
    }
  }

  int leaf(const Partition& p) {
    ++leaves_;
    certificate(p);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = p.lab;
      first_cert_ = best_cert_ = cert_;
      first_path_ = best_path_ = path_;
      return kNoJump;
    }
    if (cert_ == first_cert_) {
      record(automorphism(first_lab_, p.lab));
      return opts_.prune_automorphisms ? common_prefix(path_, first_path_) : kNoJump;
    }
    if (cert_ == best_cert_) {
      record(automorphism(best_lab_, p.lab));
      return opts_.prune_automorphisms ? common_prefix(path_, best_path_) : kNoJump;
    }
    if (cert_ > best_cert_) {
      best_lab_ = p.lab;
      best_cert_ = cert_;
      best_path_ = path_;
    }
    return kNoJump;
  }

  const Graph& g_;
  const CanonOptions& opts_;
  const int n_;
  const std::size_t cert_words_;
  Refiner refiner_;

  std::vector<Word> cert_;
  std::vector<Vertex> path_;
  std::vector<Vertex> first_lab_, best_lab_;
  std::vector<Word> first_cert_, best_cert_;
  std::vector<Vertex> first_path_, best_path_;
  std::vector<Permutation> generators_;
  std::size_t leaves_ = 0;
};

}  // namespace detail

inline CanonResult canonical_label(const Graph& g, const Colouring& pi,
                                   const CanonOptions& opts = {}) {
  if (g.order() == 0) throw ZeroVertexError();
  if (pi.order() != g.order()) {
    throw SizeMismatchError("colouring of " + std::to_string(pi.order()) +
                            " vertices for a graph of order " + std::to_string(g.order()));
  }
  return detail::CanonSearch(g, opts).run(pi);
}

inline CanonResult canonical_label(const Graph& g) {
  return canonical_label(g, Colouring::unit(g.order()));
}

// Graph6 string of the canonical graph under the unit colouring.
inline std::string canonical_string(const Graph& g) {
  return encode_graph6(canonical_label(g).canonical_graph);
}

// True iff sigma(G) = H for some colour-preserving sigma (pi onto rho). Cell
// size sequences that differ, or different orders, give false.
inline bool are_isomorphic(const Graph& g, const Graph& h, const Colouring& pi,
                           const Colouring& rho) {
  if (g.order() == 0 || h.order() == 0) throw ZeroVertexError();
  if (g.order() != h.order()) return false;
  if (pi.cell_sizes() != rho.cell_sizes()) return false;
  return canonical_label(g, pi).canonical_graph == canonical_label(h, rho).canonical_graph;
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw ZeroVertexError();
  return are_isomorphic(g, h, Colouring::unit(g.order()), Colouring::unit(h.order()));
}

// Automorphisms found during the canonical search. They generate a subgroup
// of Aut(G, pi); completeness is not promised.
inline std::vector<Permutation> automorphism_generators(const Graph& g, const Colouring& pi) {
  return canonical_label(g, pi).automorphism_generators;
}

inline std::vector<Permutation> automorphism_generators(const Graph& g) {
  return automorphism_generators(g, Colouring::unit(g.order()));
}

// First representative of each isomorphism class, in input order.
inline std::vector<Graph> remove_isomorphs(std::span<const Graph> graphs) {
  std::unordered_set<std::string> seen;
  std::vector<Graph> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    try {
      if (seen.insert(canonical_string(graphs[i])).second) out.push_back(graphs[i]);
    } catch (const Error& e) {
      throw ItemError(i, e.what());
    }
  }
  return out;
}

// String variant: items are Graph6/Sparse6; survivors are returned verbatim.
inline std::vector<std::string> remove_isomorphs(std::span<const std::string> strings) {
  std::unordered_set<std::string> seen;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    try {
      if (seen.insert(canonical_string(decode(strings[i]))).second) out.push_back(strings[i]);
    } catch (const Error& e) {
      throw ItemError(i, e.what());
    }
  }
  return out;
}

}  // namespace gcanon

#endif  // GCANON_CANON_HPP_
