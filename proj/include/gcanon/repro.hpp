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

// Census experiments: graph counts per order, forest and tree counts via
// bipartite generation plus filtering, and connectivity of G(n, p) around
// the ln(n)/n threshold.

#ifndef GCANON_REPRO_HPP_
#define GCANON_REPRO_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gcanon/filter.hpp"
#include "gcanon/generate.hpp"

namespace gcanon {

// "(a, b, c)"
template <typename Int>
std::string format_tuple(const std::vector<Int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

// Number of graphs on n = 1..max_n vertices.
inline std::vector<long long> graph_census(int max_n) {
  std::vector<long long> counts;
  for (const auto& level : generate_graph_levels(max_n)) {
    counts.push_back(static_cast<long long>(level.size()));
  }
  return counts;
}

// Bipartite classes for n = 1..max_n, counted after the given filter.
inline std::vector<long long> filtered_bipartite_census(int max_n, const GraphFilter& f) {
  GenOptions opts;
  opts.only_bipartite = true;
  std::vector<long long> counts;
  for (const auto& level : generate_graph_levels(max_n, opts)) {
    counts.push_back(static_cast<long long>(
        filter_graphs(std::span<const std::string>(level), f).size()));
  }
  return counts;
}

inline GraphFilter forest_filter() { return build_graph_filter({{"NumCycles", 0}}); }

inline GraphFilter tree_filter() {
  return build_graph_filter(
      {{"NumCycles", 0}, {"Connectivity", 0}, {"NegateConnectivity", true}});
}

inline GraphFilter connected_filter() {
  return build_graph_filter({{"Connectivity", 0}, {"NegateConnectivity", true}});
}

inline std::vector<long long> forest_census(int max_n) {
  return filtered_bipartite_census(max_n, forest_filter());
}

inline std::vector<long long> tree_census(int max_n) {
  return filtered_bipartite_census(max_n, tree_filter());
}

// Edge probabilities (1 + eps) ln(n)/n with eps = 1 and eps = 1/2, as
// 2 ln(n)/n and ln(n)/(2n).
inline double er_high_probability(int n) { return 2.0 * std::log(n) / n; }
inline double er_low_probability(int n) { return std::log(n) / (2.0 * n); }

// Seed of the sample batch for order n; band 0 is the high probability,
// band 1 the low one. SplitMix64 finalizer over seed + 2n + band.
inline std::uint64_t er_batch_seed(std::uint64_t seed, int n, int band) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(2 * n + band + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct ErConnectivityTable {
  std::vector<int> orders;
  std::vector<long long> high;  // connected counts at 2 ln(n)/n
  std::vector<long long> low;   // connected counts at ln(n)/(2n)
};

// For n = 2..max_n, how many of `trials` G(n, p) samples are connected.
inline ErConnectivityTable er_connectivity(int max_n, std::size_t trials, std::uint64_t seed) {
  const GraphFilter connected = connected_filter();
  ErConnectivityTable table;
  for (int n = 2; n <= max_n; ++n) {
    table.orders.push_back(n);
    for (int band = 0; band < 2; ++band) {
      RandomModel model{n, trials, band == 0 ? er_high_probability(n) : er_low_probability(n),
                        er_batch_seed(seed, n, band)};
      const auto samples = generate_random_graphs(model);
      const auto kept = filter_graphs(std::span<const Graph>(samples), connected);
      (band == 0 ? table.high : table.low).push_back(static_cast<long long>(kept.size()));
    }
  }
  return table;
}

}  // namespace gcanon

#endif  // GCANON_REPRO_HPP_
