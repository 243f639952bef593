// Copyright 2026 The Authors.
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

// Small-graph canonical labelling and exhaustive generation of connected
// graphs. Meant for n <= 8; the canonical form enumerates every ordering
// that respects a degree-based vertex partition.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "csa/common.hpp"
#include "csa/graph.hpp"

namespace csa {

inline constexpr int kMaxCanonicalVertices = 11;

struct CanonicalForm {
  int n = 0;
  std::uint64_t code = 0;
  std::vector<int> order;  // order[pos] = original vertex placed at position pos+1

  bool operator==(const CanonicalForm& o) const { return n == o.n && code == o.code; }
  bool operator<(const CanonicalForm& o) const { return std::tie(n, code) < std::tie(o.n, o.code); }
};

namespace detail {

inline std::uint64_t adjacency_code(const Graph& g, const std::vector<int>& order) {
  std::uint64_t code = 0;
  const int n = g.n();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      code = (code << 1) | (g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? 1U : 0U);
    }
  }
  return code;
}

}  // namespace detail

/// Canonical labelling: the lexicographically largest adjacency code over all
/// vertex orders that sort vertices by (degree, neighbour degree multiset).
inline CanonicalForm canonical_form(const Graph& g) {
  const int n = g.n();
  if (n > kMaxCanonicalVertices) throw Error(ErrorCode::kResourceCap, "canonical form limited to 11 vertices");
  using Key = std::pair<int, std::vector<int>>;
  std::vector<std::pair<Key, int>> keyed;
  for (int v = 1; v <= n; ++v) {
    std::vector<int> nd;
    for (int w : set_elements(g.neighbors(v))) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    keyed.push_back({{g.degree(v), nd}, v});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<int>> cells;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) cells.emplace_back();
    cells.back().push_back(keyed[i].second);
  }
  CanonicalForm best;
  best.n = n;
  bool have = false;
  // Odometer over per-cell permutations.
  while (true) {
    std::vector<int> order;
    for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
    std::uint64_t code = detail::adjacency_code(g, order);
    if (!have || code > best.code) {
      best.code = code;
      best.order = order;
      have = true;
    }
    std::size_t c = 0;
    while (c < cells.size() && !std::next_permutation(cells[c].begin(), cells[c].end())) ++c;
    if (c == cells.size()) break;
  }
  return best;
}

/// Relabels g into its canonical labelling.
inline Graph canonical_graph(const Graph& g) {
  CanonicalForm cf = canonical_form(g);
  std::vector<int> perm(static_cast<std::size_t>(g.n()));
  for (std::size_t pos = 0; pos < cf.order.size(); ++pos) perm[static_cast<std::size_t>(cf.order[pos] - 1)] = static_cast<int>(pos) + 1;
  return relabel(g, perm);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

/// All connected graphs with 1..max_n vertices up to isomorphism, each in
/// canonical labelling, ordered by (vertex count, canonical code descending).
/// Built by canonical augmentation: every connected graph arises from a
/// connected graph with one vertex fewer by adding a vertex with a nonempty
/// neighbourhood (delete a leaf of a spanning tree to see this).
inline std::vector<Graph> connected_graphs_up_to(int max_n) {
  if (max_n > 8) throw Error(ErrorCode::kResourceCap, "graph generation is limited to 8 vertices");
  std::vector<Graph> all;
  if (max_n < 1) return all;
  std::vector<Graph> level{Graph(1)};
  all.push_back(level.front());
  for (int n = 2; n <= max_n; ++n) {
    std::map<std::uint64_t, Graph, std::greater<>> seen;
    for (const Graph& base : level) {
      for (VertexSet nb = 1; nb <= full_set(n - 1); ++nb) {
        Graph g(n);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int w : set_elements(nb)) g.add_edge(w, n);
        CanonicalForm cf = canonical_form(g);
        if (seen.count(cf.code) != 0) continue;
        seen.emplace(cf.code, canonical_graph(g));
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(g);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

}  // namespace csa
