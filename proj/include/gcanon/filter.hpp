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

// Property filters over graphs: a conjunction of constraints, each on one
// named property, with an optional negation flag.
//
//   auto trees = build_graph_filter({{"NumCycles", 0},
//                                    {"Connectivity", 0},
//                                    {"NegateConnectivity", true}});
//
// Connectivity uses exact-k semantics (see vertex_connectivity()), NumCycles
// is the circuit rank, and the girth of a forest matches no value.

#ifndef GCANON_FILTER_HPP_
#define GCANON_FILTER_HPP_

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gcanon/codec.hpp"
#include "gcanon/error.hpp"
#include "gcanon/graph.hpp"
#include "gcanon/properties.hpp"

namespace gcanon {

enum class Property {
  kNumVertices,
  kNumEdges,
  kMinDegree,
  kMaxDegree,
  kConnectivity,
  kNumCycles,
  kGirth,
  kBipartite,
  kRegular,
  kConnected,
};

inline constexpr std::array<std::pair<Property, std::string_view>, 10> kPropertyNames{{
    {Property::kNumVertices, "NumVertices"},
    {Property::kNumEdges, "NumEdges"},
    {Property::kMinDegree, "MinDegree"},
    {Property::kMaxDegree, "MaxDegree"},
    {Property::kConnectivity, "Connectivity"},
    {Property::kNumCycles, "NumCycles"},
    {Property::kGirth, "Girth"},
    {Property::kBipartite, "Bipartite"},
    {Property::kRegular, "Regular"},
    {Property::kConnected, "Connected"},
}};

inline std::string_view property_name(Property p) {
  for (const auto& [prop, name] : kPropertyNames)
    if (prop == p) return name;
  return "?";
}

inline std::optional<Property> property_from_name(std::string_view name) {
  for (const auto& [prop, n] : kPropertyNames)
    if (n == name) return prop;
  return std::nullopt;
}

inline bool is_boolean_property(Property p) {
  return p == Property::kBipartite || p == Property::kRegular || p == Property::kConnected;
}

// Inclusive integer range.
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const Range&, const Range&) = default;
};

using ConstraintValue = std::variant<bool, std::int64_t, Range>;

struct PropertyConstraint {
  Property property;
  ConstraintValue value;
  bool negate = false;

  // Clause value before negation.
  bool holds(const Graph& g) const {
    if (is_boolean_property(property)) {
      bool actual = false;
      switch (property) {
        case Property::kBipartite: actual = is_bipartite(g); break;
        case Property::kRegular: actual = is_regular(g); break;
        default: actual = is_connected(g); break;
      }
      return actual == std::get<bool>(value);
    }
    std::optional<std::int64_t> actual;
    switch (property) {
      case Property::kNumVertices: actual = g.order(); break;
      case Property::kNumEdges: actual = num_edges(g); break;
      case Property::kMinDegree: actual = min_degree(g); break;
      case Property::kMaxDegree: actual = max_degree(g); break;
      case Property::kConnectivity: actual = vertex_connectivity(g); break;
      case Property::kNumCycles: actual = circuit_rank(g); break;
      case Property::kGirth:
        if (auto c = girth(g)) actual = *c;
        break;
      default: break;
    }
    if (!actual) return false;
    if (const auto* exact = std::get_if<std::int64_t>(&value)) return *actual == *exact;
    const Range& r = std::get<Range>(value);
    return r.lo <= *actual && *actual <= r.hi;
  }

  bool matches(const Graph& g) const { return holds(g) != negate; }
};

class GraphFilter {
 public:
  // Accepts every graph.
  GraphFilter() = default;

  explicit GraphFilter(std::vector<PropertyConstraint> constraints)
      : constraints_(std::move(constraints)) {}

  const std::vector<PropertyConstraint>& constraints() const { return constraints_; }

  bool operator()(const Graph& g) const {
    if (g.order() == 0) throw ZeroVertexError();
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const PropertyConstraint& c) { return c.matches(g); });
  }

 private:
  std::vector<PropertyConstraint> constraints_;
};

struct FilterEntry {
  std::string key;
  ConstraintValue value;

  FilterEntry(std::string k, ConstraintValue v) : key(std::move(k)), value(v) {}
  FilterEntry(std::string k, int v) : key(std::move(k)), value(std::int64_t{v}) {}
  FilterEntry(std::string k, bool v) : key(std::move(k)), value(v) {}
  FilterEntry(std::string k, Range v) : key(std::move(k)), value(v) {}
};

// Keys are property names or "Negate" + name; a Negate key takes a boolean
// and requires its base key.
inline GraphFilter build_graph_filter(std::span<const FilterEntry> spec) {
  constexpr std::string_view kNegate = "Negate";
  std::vector<PropertyConstraint> constraints;
  std::vector<std::pair<Property, bool>> negations;
  std::vector<std::string_view> keys;

  for (const FilterEntry& e : spec) {
    if (std::find(keys.begin(), keys.end(), e.key) != keys.end()) {
      throw FilterSpecError("duplicate filter key '" + e.key + "'");
    }
    keys.push_back(e.key);

    std::string_view key = e.key;
    if (auto prop = property_from_name(key)) {
      if (is_boolean_property(*prop) != std::holds_alternative<bool>(e.value)) {
        throw FilterSpecError("key '" + e.key + "' expects " +
                              (is_boolean_property(*prop) ? "a boolean" : "an integer or range"));
      }
      if (const auto* r = std::get_if<Range>(&e.value); r && r->lo > r->hi) {
        throw FilterSpecError("key '" + e.key + "' has an empty range");
      }
      constraints.push_back({*prop, e.value, false});
      continue;
    }
    if (key.starts_with(kNegate)) {
      if (auto prop = property_from_name(key.substr(kNegate.size()))) {
        if (!std::holds_alternative<bool>(e.value)) {
          throw FilterSpecError("key '" + e.key + "' expects a boolean");
        }
        negations.emplace_back(*prop, std::get<bool>(e.value));
        continue;
      }
    }
    throw FilterSpecError("unknown filter key '" + e.key + "'");
  }

  for (const auto& [prop, flag] : negations) {
    auto it = std::find_if(constraints.begin(), constraints.end(),
                           [&](const PropertyConstraint& c) { return c.property == prop; });
    if (it == constraints.end()) {
      throw FilterSpecError("Negate" + std::string(property_name(prop)) + " without " +
                            std::string(property_name(prop)));
    }
    it->negate = flag;
  }
  return GraphFilter(std::move(constraints));
}

inline GraphFilter build_graph_filter(std::initializer_list<FilterEntry> spec) {
  return build_graph_filter(std::span<const FilterEntry>(spec.begin(), spec.size()));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline ConstraintValue parse_value(std::string_view text, std::string_view item) {
  auto fail = [&](const std::string& why) -> FilterSpecError {
    return FilterSpecError("filter item '" + std::string(item) + "': " + why);
  };
  if (text == "true") return true;
  if (text == "false") return false;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    auto lo = parse_int(text.substr(0, dots));
    auto hi = parse_int(text.substr(dots + 2));
    if (!lo || !hi) throw fail("malformed range '" + std::string(text) + "'");
    return Range{*lo, *hi};
  }
  if (auto v = parse_int(text)) return *v;
  throw fail("malformed value '" + std::string(text) + "'");
}

}  // namespace detail

// CLI grammar: comma-separated Name=value items; value is an integer, an
// inclusive range lo..hi, true or false; a leading '!' negates the item.
// An empty spec accepts everything.
inline GraphFilter parse_filter_spec(std::string_view spec) {
  std::vector<FilterEntry> entries;
  if (detail::trim(spec).empty()) return GraphFilter();
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view item = detail::trim(spec.substr(start, comma - start));
    start = comma + 1;

    std::string_view body = item;
    const bool negate = !body.empty() && body.front() == '!';
    if (negate) body.remove_prefix(1);
    const std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw FilterSpecError("filter item '" + std::string(item) + "': expected Name=value");
    }
    const std::string name(detail::trim(body.substr(0, eq)));
    if (!property_from_name(name) && !name.starts_with("Negate")) {
      throw FilterSpecError("filter item '" + std::string(item) + "': unknown property '" +
                            name + "'");
    }
    entries.emplace_back(name, detail::parse_value(detail::trim(body.substr(eq + 1)), item));
    if (negate) entries.emplace_back("Negate" + name, ConstraintValue{true});
  }
  try {
    return build_graph_filter(entries);
  } catch (const FilterSpecError& e) {
    throw FilterSpecError(std::string("filter '") + std::string(spec) + "': " + e.what());
  }
}

inline bool evaluate(const GraphFilter& f, const Graph& g) { return f(g); }

// Items passing the filter, in input order.
inline std::vector<Graph> filter_graphs(std::span<const Graph> graphs, const GraphFilter& f) {
  std::vector<Graph> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    try {
      if (f(graphs[i])) out.push_back(graphs[i]);
    } catch (const Error& e) {
      throw ItemError(i, e.what());
    }
  }
  return out;
}

// String variant; survivors are returned verbatim.
inline std::vector<std::string> filter_graphs(std::span<const std::string> strings,
                                              const GraphFilter& f) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    try {
      if (f(decode(strings[i]))) out.push_back(strings[i]);
    } catch (const Error& e) {
      throw ItemError(i, e.what());
    }
  }
  return out;
}

}  // namespace gcanon

#endif  // GCANON_FILTER_HPP_
