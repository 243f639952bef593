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

// Graph text formats: graph6, "1-2,2-3" edge lists and family shorthands
// such as "cycle:5" or "almostpath:5:3".

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "csa/common.hpp"
#include "csa/graph.hpp"
#include "csa/obstruction.hpp"

namespace csa {

namespace detail {

inline int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "bad integer '" + std::string(s) + "' in " + std::string(what));
  }
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int bits = 0;
  int acc = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  s = detail::trim(s);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty graph6 string");
  for (char c : s) {
    if (c < 63 || c > 126) throw Error(ErrorCode::kParse, "invalid graph6 character");
  }
  int n = 0;
  std::size_t pos = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw Error(ErrorCode::kParse, "unsupported graph6 size header");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw Error(ErrorCode::kParse, "graph6 graph has more than 63 vertices");
  const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
  if (s.size() - pos != (nbits + 5) / 6) throw Error(ErrorCode::kParse, "graph6 length does not match vertex count");
  Graph g(n);
  std::size_t k = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

/// Edge list "1-2,2-3"; the vertex count is the largest label unless given.
inline Graph parse_edge_list(std::string_view s, int n = 0) {
  s = detail::trim(s);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty edge list");
  std::vector<Edge> edges;
  int max_label = 0;
  for (auto item : detail::split(s, ',')) {
    item = detail::trim(item);
    auto ends = detail::split(item, '-');
    if (ends.size() != 2) throw Error(ErrorCode::kParse, "edge '" + std::string(item) + "' is not of the form i-j");
    int u = detail::parse_int(detail::trim(ends[0]), "edge list");
    int v = detail::parse_int(detail::trim(ends[1]), "edge list");
    if (u < 1 || v < 1) throw Error(ErrorCode::kParse, "vertex labels start at 1");
    if (u == v) throw Error(ErrorCode::kParse, "loop at vertex " + std::to_string(u));
    max_label = std::max({max_label, u, v});
    edges.emplace_back(u, v);
  }
  if (n == 0) n = max_label;
  if (max_label > n || n > kMaxVertices) throw Error(ErrorCode::kParse, "vertex label out of range");
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// Family shorthand (path:n, cycle:n, complete:n, almostpath:n:k,
/// triangle-path:n:k, star:m, spider:a,b,c, obstruction:i), an edge list
/// containing '-', or otherwise graph6.
inline Graph parse_graph_spec(std::string_view spec) {
  spec = detail::trim(spec);
  if (spec.empty()) throw Error(ErrorCode::kParse, "empty graph specification");
  auto colon = spec.find(':');
  if (colon != std::string_view::npos && std::isalpha(static_cast<unsigned char>(spec[0]))) {
    auto parts = detail::split(spec, ':');
    std::string_view name = parts[0];
    auto arg = [&](std::size_t i) {
      if (i >= parts.size()) throw Error(ErrorCode::kParse, "missing parameter in '" + std::string(spec) + "'");
      return detail::parse_int(parts[i], spec);
    };
    auto expect = [&](std::size_t count) {
      if (parts.size() != count) throw Error(ErrorCode::kParse, "wrong number of parameters in '" + std::string(spec) + "'");
    };
    try {
      if (name == "path") {
        expect(2);
        int n = arg(1);
        if (n < 1) throw Error(ErrorCode::kParse, "path needs n >= 1");
        return path_graph(n);
      }
      if (name == "cycle") {
        expect(2);
        int n = arg(1);
        if (n < 2) throw Error(ErrorCode::kParse, "cycle needs n >= 2");
        return cycle_graph(n);
      }
      if (name == "complete") {
        expect(2);
        int n = arg(1);
        if (n < 1) throw Error(ErrorCode::kParse, "complete graph needs n >= 1");
        return complete_graph(n);
      }
      if (name == "almostpath") {
        expect(3);
        return almost_path_graph(arg(1), arg(2));
      }
      if (name == "triangle-path") {
        expect(3);
        return path_triangle_graph(arg(1), arg(2));
      }
      if (name == "star") {
        expect(2);
        return star_graph(arg(1));
      }
      if (name == "spider") {
        expect(2);
        std::vector<int> legs;
        for (auto l : detail::split(parts[1], ',')) legs.push_back(detail::parse_int(l, spec));
        return spider_graph(legs);
      }
      if (name == "obstruction") {
        expect(2);
        return obstruction_graph(arg(1));
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kParse) throw;
      throw Error(ErrorCode::kParse, std::string(spec) + ": " + e.what());
    }
    throw Error(ErrorCode::kParse, "unknown graph family '" + std::string(name) + "'");
  }
  if (spec.find('-') != std::string_view::npos) return parse_edge_list(spec);
  return from_graph6(spec);
}

}  // namespace csa
