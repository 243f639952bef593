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

#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "csa/common.hpp"

namespace csa {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n, stored as adjacency bit masks.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) throw Error(ErrorCode::kOutOfRange, "vertex count " + std::to_string(n));
  }

  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int n() const { return n_; }
  VertexSet vertices() const { return full_set(n_); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u - 1)] |= vertex_bit(v);
    adj_[static_cast<std::size_t>(v - 1)] |= vertex_bit(u);
  }

  bool has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    return (adj_[static_cast<std::size_t>(u - 1)] & vertex_bit(v)) != 0;
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v - 1)];
  }

  VertexSet neighbors_of_set(VertexSet s) const {
    VertexSet out = 0;
    for (VertexSet t = s; t != 0; t &= t - 1) out |= adj_[static_cast<std::size_t>(std::countr_zero(t))];
    return out & ~s;
  }

  int degree(int v) const { return set_size(neighbors(v)); }

  int max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  int edge_count() const {
    int m = 0;
    for (VertexSet a : adj_) m += set_size(a);
    return m / 2;
  }

  /// Sorted list of edges (u, v) with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u) {
      for (int v : set_elements(adj_[static_cast<std::size_t>(u - 1)])) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// Whether the induced subgraph on s is connected (s nonempty).
  bool is_connected(VertexSet s) const {
    if (s == 0) return false;
    VertexSet reached = s & (~s + 1);
    VertexSet frontier = reached;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet t = frontier; t != 0; t &= t - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(t))];
      next &= s & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached == s;
  }

  bool is_connected() const { return n_ == 0 || is_connected(vertices()); }

  /// Vertex sets of the connected components, ordered by smallest vertex.
  std::vector<VertexSet> components() const {
    std::vector<VertexSet> out;
    VertexSet left = vertices();
    while (left != 0) {
      VertexSet comp = left & (~left + 1);
      VertexSet frontier = comp;
      while (frontier != 0) {
        VertexSet next = 0;
        for (VertexSet t = frontier; t != 0; t &= t - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(t))];
        next &= ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  bool operator==(const Graph& o) const = default;

  /// "1-2,2-3" style edge list.
  std::string edge_string() const {
    std::string out;
    for (auto [u, v] : edges()) {
      if (!out.empty()) out += ",";
      out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
  }

 private:
  void check_vertex(int v) const {
    if (v < 1 || v > n_) throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// All nonempty vertex sets inducing a connected subgraph, sorted by size and
/// then lexicographically. Each set is produced once by growing it from its
/// minimum vertex through exclusive neighbourhoods.
inline std::vector<VertexSet> connected_subsets(const Graph& g) {
  std::vector<VertexSet> out;
  const int n = g.n();
  struct Frame {
    VertexSet current;
    VertexSet extension;
  };
  for (int v = 1; v <= n; ++v) {
    const VertexSet above = full_set(n) & ~full_set(v);
    std::vector<Frame> stack{{vertex_bit(v), g.neighbors(v) & above}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      out.push_back(f.current);
      VertexSet ext = f.extension;
      const VertexSet closed = f.current | g.neighbors_of_set(f.current);
      while (ext != 0) {
        int w = lowest_vertex(ext);
        ext &= ext - 1;
        VertexSet exclusive = g.neighbors(w) & ~closed & above;
        stack.push_back({f.current | vertex_bit(w), ext | exclusive});
      }
    }
  }
  std::sort(out.begin(), out.end(), subset_order_less);
  return out;
}

/// Induced subgraph on s, relabelled 1..|s| in increasing order of s.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s == 0) throw Error(ErrorCode::kEmptySubset, "induced_subgraph needs a nonempty vertex set");
  if ((s & ~g.vertices()) != 0) throw Error(ErrorCode::kOutOfRange, "subset " + set_to_string(s) + " not within the graph");
  std::vector<int> keep = set_elements(s);
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (g.has_edge(keep[a], keep[b])) h.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    }
  }
  return h;
}

/// Contracts edge {u, v}: the merged vertex keeps the smaller label and the
/// larger label is removed, shifting higher labels down by one. Loops and
/// parallel edges are discarded.
inline Graph contract_edge(const Graph& g, Edge e) {
  auto [u, v] = e;
  if (u > v) std::swap(u, v);
  if (!g.has_edge(u, v)) {
    throw Error(ErrorCode::kNotAnEdge, "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  }
  auto relabel = [v](int x) { return x == v ? -1 : (x > v ? x - 1 : x); };
  Graph h(g.n() - 1);
  for (auto [a, b] : g.edges()) {
    int x = a == v ? u : a;
    int y = b == v ? u : b;
    if (x == y) continue;
    int rx = relabel(x);
    int ry = relabel(y);
    if (!h.has_edge(rx, ry)) h.add_edge(rx, ry);
  }
  return h;
}

/// Deletes vertex v and joins all of its former neighbours pairwise.
/// Labels above v shift down by one.
inline Graph restrict_vertex(const Graph& g, int v) {
  if (v < 1 || v > g.n()) throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(v));
  auto relabel = [v](int x) { return x > v ? x - 1 : x; };
  Graph h(g.n() - 1);
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    h.add_edge(relabel(a), relabel(b));
  }
  std::vector<int> nb = set_elements(g.neighbors(v));
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      int a = relabel(nb[i]);
      int b = relabel(nb[j]);
      if (!h.has_edge(a, b)) h.add_edge(a, b);
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Named graphs

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// Cycle on n >= 3 vertices; n = 2 degenerates to a single edge.
inline Graph cycle_graph(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "cycle needs n >= 2");
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n, 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  }
  return g;
}

/// Path 1..n plus vertex n+1 joined to k (1 < k < n).
inline Graph almost_path_graph(int n, int k) {
  if (!(1 < k && k < n)) throw Error(ErrorCode::kInvalidArgument, "almost path needs 1 < k < n");
  Graph g(n + 1);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(k, n + 1);
  return g;
}

/// Path 1..n plus vertex n+1 joined to k and k+1 (1 <= k < n).
inline Graph path_triangle_graph(int n, int k) {
  if (!(1 <= k && k < n)) throw Error(ErrorCode::kInvalidArgument, "path-with-triangle needs 1 <= k < n");
  Graph g(n + 1);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(k, n + 1);
  g.add_edge(k + 1, n + 1);
  return g;
}

/// Star with centre 1 and `leaves` leaves.
inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 2; i <= leaves + 1; ++i) g.add_edge(1, i);
  return g;
}

/// Three (or more) paths of the given lengths glued at centre vertex 1.
inline Graph spider_graph(const std::vector<int>& legs) {
  int n = 1;
  for (int l : legs) n += l;
  Graph g(n);
  int next = 2;
  for (int l : legs) {
    int prev = 1;
    for (int i = 0; i < l; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

/// Disjoint union; vertices of b are shifted by a.n().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.n(), v + a.n());
  return g;
}

/// Graph with vertex i of g renamed to perm[i-1] (perm is a permutation of 1..n).
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n());
  for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]);
  return h;
}

// ---------------------------------------------------------------------------
// Family recognition

struct GraphFamily {
  enum class Kind { kPath, kCycle, kAlmostPath, kPathTriangle, kTriangle, kOther };
  Kind kind = Kind::kOther;
  int n = 0;  // Path/Cycle: vertex count; AlmostPath/PathTriangle: length of the path part
  int k = 0;

  static GraphFamily path(int n) { return {Kind::kPath, n, 0}; }
  static GraphFamily cycle(int n) { return {Kind::kCycle, n, 0}; }
  static GraphFamily triangle() { return {Kind::kTriangle, 2, 1}; }
  static GraphFamily other() { return {Kind::kOther, 0, 0}; }

  /// Canonical parameters: k <= ceil((n+1)/2) via k -> n+1-k.
  static GraphFamily almost_path(int n, int k) {
    if (!(1 < k && k < n)) throw Error(ErrorCode::kInvalidArgument, "almost path needs 1 < k < n");
    return {Kind::kAlmostPath, n, std::min(k, n + 1 - k)};
  }

  /// Canonical parameters: k <= n/2 via k -> n-k; (2,1) is the triangle.
  static GraphFamily path_triangle(int n, int k) {
    if (!(1 <= k && k < n)) throw Error(ErrorCode::kInvalidArgument, "path-with-triangle needs 1 <= k < n");
    if (n == 2) return triangle();
    return {Kind::kPathTriangle, n, std::min(k, n - k)};
  }

  bool operator==(const GraphFamily&) const = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::kPath: return "Path(" + std::to_string(n) + ")";
      case Kind::kCycle: return "Cycle(" + std::to_string(n) + ")";
      case Kind::kAlmostPath: return "AlmostPath(" + std::to_string(n) + "," + std::to_string(k) + ")";
      case Kind::kPathTriangle: return "PathTriangle(" + std::to_string(n) + "," + std::to_string(k) + ")";
      case Kind::kTriangle: return "Triangle";
      case Kind::kOther: return "Other";
    }
    return "Other";
  }
};

inline Graph family_graph(const GraphFamily& f) {
  switch (f.kind) {
    case GraphFamily::Kind::kPath: return path_graph(f.n);
    case GraphFamily::Kind::kCycle: return cycle_graph(f.n);
    case GraphFamily::Kind::kAlmostPath: return almost_path_graph(f.n, f.k);
    case GraphFamily::Kind::kPathTriangle: return path_triangle_graph(f.n, f.k);
    case GraphFamily::Kind::kTriangle: return cycle_graph(3);
    case GraphFamily::Kind::kOther: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "no graph for family Other");
}

namespace detail {

/// Length of the pendant path starting at `from` and leaving `root`; every
/// vertex on it must have degree <= 2. Returns -1 otherwise.
inline int pendant_path_length(const Graph& g, int root, int from) {
  int length = 0;
  int prev = root;
  int cur = from;
  while (true) {
    ++length;
    VertexSet rest = g.neighbors(cur) & ~vertex_bit(prev);
    int d = set_size(rest);
    if (d == 0) return length;
    if (d > 1) return -1;
    prev = cur;
    cur = lowest_vertex(rest);
  }
}

}  // namespace detail

/// Recognises paths, cycles, almost paths and path-with-triangle graphs.
inline GraphFamily recognize_family(const Graph& g) {
  if (g.n() == 0 || !g.is_connected()) throw Error(ErrorCode::kDisconnected, "recognize_family needs a connected graph");
  const int n = g.n();
  const int m = g.edge_count();
  const int maxdeg = g.max_degree();
  if (m == n - 1) {
    if (maxdeg <= 2) return GraphFamily::path(n);
    if (maxdeg > 3) return GraphFamily::other();
    int centre = 0;
    for (int v = 1; v <= n; ++v) {
      if (g.degree(v) == 3) {
        if (centre != 0) return GraphFamily::other();
        centre = v;
      }
    }
    std::vector<int> legs;
    for (int w : set_elements(g.neighbors(centre))) legs.push_back(detail::pendant_path_length(g, centre, w));
    std::sort(legs.begin(), legs.end());
    if (legs[0] != 1) return GraphFamily::other();
    // Path part runs through the two other legs; the short leg is vertex n+1.
    int path_len = legs[1] + legs[2] + 1;
    return GraphFamily::almost_path(path_len, legs[1] + 1);
  }
  if (m == n) {
    if (maxdeg == 2) return n == 3 ? GraphFamily::triangle() : GraphFamily::cycle(n);
    if (maxdeg > 3) return GraphFamily::other();
    // Unicyclic with a triangle and pendant paths on at most two triangle vertices.
    for (int a = 1; a <= n; ++a) {
      for (int b : set_elements(g.neighbors(a))) {
        if (b <= a) continue;
        VertexSet common = g.neighbors(a) & g.neighbors(b);
        for (int c : set_elements(common)) {
          if (c <= b) continue;
          std::array<int, 3> tri{a, b, c};
          std::vector<int> hang;
          int bare = 0;
          for (int x : tri) {
            VertexSet out = g.neighbors(x) & ~(vertex_bit(a) | vertex_bit(b) | vertex_bit(c));
            if (out == 0) {
              ++bare;
              continue;
            }
            int len = detail::pendant_path_length(g, x, lowest_vertex(out));
            if (len < 0) return GraphFamily::other();
            hang.push_back(len);
          }
          if (bare == 0) return GraphFamily::other();
          while (hang.size() < 2) hang.push_back(0);
          int path_len = hang[0] + hang[1] + 2;
          return GraphFamily::path_triangle(path_len, std::min(hang[0], hang[1]) + 1);
        }
      }
    }
    return GraphFamily::other();
  }
  return GraphFamily::other();
}

}  // namespace csa
