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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "csa/graph.hpp"
#include "csa/graph_gen.hpp"
#include "csa/graph_io.hpp"
#include "oracles.hpp"

namespace {

using namespace csa;

oracle::EdgeList edges_of(const Graph& g) {
  oracle::EdgeList out;
  for (auto e : g.edges()) out.push_back(e);
  return out;
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(Graph, BasicAccessors) {
  Graph g(4, {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_EQ(g.degree(2), 2);
  EXPECT_TRUE(g.is_connected());
  EXPECT_EQ(g.edge_string(), "1-2,2-3,3-4");
}

TEST(Graph, RejectsLoopsAndBadVertices) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), Error);
  EXPECT_THROW(g.add_edge(0, 2), Error);
  EXPECT_THROW(g.add_edge(1, 4), Error);
  EXPECT_THROW(Graph(64), Error);
}

TEST(Graph, ComponentsOfDisjointUnion) {
  Graph g = disjoint_union(path_graph(2), cycle_graph(3));
  auto comps = g.components();
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], make_set({1, 2}));
  EXPECT_EQ(comps[1], make_set({3, 4, 5}));
  EXPECT_FALSE(g.is_connected());
}

TEST(Graph, ConnectedSubsetsMatchBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs_up_to(n)) {
      auto got = connected_subsets(g);
      auto want = oracle::connected_subsets(g.n(), edges_of(g));
      std::sort(got.begin(), got.end());
      ASSERT_EQ(got, want) << g.edge_string();
    }
  }
}

TEST(Graph, ConnectedSubsetCountsOfFamilies) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(connected_subsets(path_graph(n)).size(), static_cast<std::size_t>(n * (n + 1) / 2));
    EXPECT_EQ(connected_subsets(complete_graph(n)).size(), static_cast<std::size_t>((1 << n) - 1));
  }
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(connected_subsets(cycle_graph(n)).size(), static_cast<std::size_t>(n * (n - 1) + 1));
  }
}

TEST(Graph, InducedSubgraphRelabelsInOrder) {
  Graph g = cycle_graph(5);
  Graph h = induced_subgraph(g, make_set({2, 3, 5}));
  EXPECT_EQ(h.n(), 3);
  EXPECT_EQ(h.edge_string(), "1-2");
  EXPECT_THROW(induced_subgraph(g, make_set({6})), Error);
}

TEST(Graph, ContractEdgeKeepsSmallerLabel) {
  Graph g = cycle_graph(4);
  Graph h = contract_edge(g, {2, 3});
  EXPECT_TRUE(isomorphic(h, cycle_graph(3)));
  EXPECT_THROW(contract_edge(g, {1, 3}), Error);
  Graph star = contract_edge(path_graph(4), {3, 4});
  EXPECT_TRUE(isomorphic(star, path_graph(3)));
}

TEST(Graph, RestrictVertexJoinsNeighbours) {
  Graph g = almost_path_graph(4, 2);  // path 1..4, vertex 5 on 2
  Graph h = restrict_vertex(g, 2);
  EXPECT_EQ(h.n(), 4);
  EXPECT_TRUE(h.has_edge(1, 2));
  EXPECT_TRUE(h.has_edge(1, 4));
  EXPECT_TRUE(h.has_edge(2, 4));
}

TEST(Graph, NamedFamilies) {
  EXPECT_EQ(cycle_graph(2).edge_count(), 1);
  EXPECT_EQ(almost_path_graph(5, 3).edge_count(), 5);
  EXPECT_TRUE(almost_path_graph(5, 3).has_edge(3, 6));
  Graph d = path_triangle_graph(6, 3);
  EXPECT_TRUE(d.has_edge(3, 7));
  EXPECT_TRUE(d.has_edge(4, 7));
  EXPECT_EQ(d.edge_count(), 7);
  EXPECT_THROW(almost_path_graph(4, 1), Error);
  EXPECT_THROW(path_triangle_graph(4, 4), Error);
  EXPECT_EQ(star_graph(3).max_degree(), 3);
  EXPECT_EQ(spider_graph({2, 2, 2}).n(), 7);
}

TEST(GraphGen, ClassCountsMatchBruteForce) {
  std::map<int, std::size_t> per_n;
  for (const Graph& g : connected_graphs_up_to(6)) ++per_n[g.n()];
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(per_n[n], oracle::connected_class_count(n)) << "n=" << n;
}

TEST(GraphGen, SevenVertexCount) {
  std::size_t seven = 0;
  for (const Graph& g : connected_graphs_up_to(7)) seven += g.n() == 7 ? 1 : 0;
  EXPECT_EQ(seven, 853U);  // connected graphs on 7 unlabelled vertices
}

TEST(GraphGen, GeneratedGraphsArePairwiseNonIsomorphic) {
  auto graphs = connected_graphs_up_to(6);
  std::set<std::string> codes;
  for (const Graph& g : graphs) {
    ASSERT_TRUE(g.is_connected());
    codes.insert(to_graph6(canonical_graph(g)));
  }
  EXPECT_EQ(codes.size(), graphs.size());
}

TEST(GraphGen, CanonicalFormIsLabelInvariant) {
  std::mt19937 rng(7);
  for (const Graph& g : connected_graphs_up_to(6)) {
    Graph h = relabel(g, random_permutation(g.n(), rng));
    ASSERT_EQ(canonical_graph(g), canonical_graph(h));
    ASSERT_TRUE(isomorphic(g, h));
  }
  EXPECT_FALSE(isomorphic(cycle_graph(4), star_graph(3)));
  EXPECT_THROW(connected_graphs_up_to(9), Error);
}

TEST(GraphIo, Graph6KnownStrings) {
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(path_graph(4)), "Ch");
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(from_graph6("Ch"), path_graph(4));
  EXPECT_EQ(from_graph6(">>graph6<<C~"), complete_graph(4));
}

TEST(GraphIo, Graph6RoundTrip) {
  for (const Graph& g : connected_graphs_up_to(6)) ASSERT_EQ(from_graph6(to_graph6(g)), g);
  Graph big = path_graph(63);
  EXPECT_EQ(from_graph6(to_graph6(big)), big);
}

TEST(GraphIo, Graph6Errors) {
  EXPECT_THROW(from_graph6(""), Error);
  EXPECT_THROW(from_graph6("C"), Error);
  EXPECT_THROW(from_graph6("C~~"), Error);
  EXPECT_THROW(from_graph6("C\x01"), Error);
}

TEST(GraphIo, EdgeLists) {
  EXPECT_EQ(parse_edge_list("1-2, 2-3"), path_graph(3));
  EXPECT_EQ(parse_edge_list("1-2", 4).n(), 4);
  for (const char* bad : {"", "1-1", "1-2-3", "a-b", "0-1", "1-2,"}) {
    try {
      parse_edge_list(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(GraphIo, FamilyShorthands) {
  EXPECT_EQ(parse_graph_spec("path:4"), path_graph(4));
  EXPECT_EQ(parse_graph_spec("cycle:5"), cycle_graph(5));
  EXPECT_EQ(parse_graph_spec("complete:3"), complete_graph(3));
  EXPECT_EQ(parse_graph_spec("almostpath:5:3"), almost_path_graph(5, 3));
  EXPECT_EQ(parse_graph_spec("triangle-path:4:1"), path_triangle_graph(4, 1));
  EXPECT_EQ(parse_graph_spec("star:3"), star_graph(3));
  EXPECT_EQ(parse_graph_spec("spider:2,2,2"), spider_graph({2, 2, 2}));
  EXPECT_EQ(parse_graph_spec("1-2,2-3"), path_graph(3));
  EXPECT_EQ(parse_graph_spec("C~"), complete_graph(4));
  for (const char* bad : {"path:0", "cycle:1", "almostpath:4:1", "triangle-path:3", "wheel:5", "path:4:1", "obstruction:9"}) {
    try {
      parse_graph_spec(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(Family, RecognisesEveryFamilyUnderRelabelling) {
  std::mt19937 rng(11);
  std::vector<std::pair<Graph, GraphFamily>> cases;
  for (int n = 1; n <= 8; ++n) cases.emplace_back(path_graph(n), GraphFamily::path(n));
  for (int n = 4; n <= 8; ++n) cases.emplace_back(cycle_graph(n), GraphFamily::cycle(n));
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k < n; ++k) cases.emplace_back(almost_path_graph(n, k), GraphFamily::almost_path(n, k));
  }
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) cases.emplace_back(path_triangle_graph(n, k), GraphFamily::path_triangle(n, k));
  }
  for (const auto& [g, f] : cases) {
    for (int rep = 0; rep < 3; ++rep) {
      Graph h = relabel(g, random_permutation(g.n(), rng));
      ASSERT_EQ(recognize_family(h), f) << g.edge_string();
    }
    ASSERT_TRUE(isomorphic(family_graph(f), g)) << f.to_string();
  }
}

TEST(Family, SymmetricParametersCoincide) {
  EXPECT_EQ(GraphFamily::almost_path(6, 5), GraphFamily::almost_path(6, 2));
  EXPECT_EQ(GraphFamily::path_triangle(5, 4), GraphFamily::path_triangle(5, 1));
  EXPECT_EQ(recognize_family(cycle_graph(3)).kind, GraphFamily::Kind::kTriangle);
  EXPECT_EQ(recognize_family(star_graph(3)), GraphFamily::almost_path(3, 2));
}

TEST(Family, OthersAreRecognisedAsOther) {
  EXPECT_EQ(recognize_family(complete_graph(4)).kind, GraphFamily::Kind::kOther);
  EXPECT_EQ(recognize_family(star_graph(4)).kind, GraphFamily::Kind::kOther);
  EXPECT_EQ(recognize_family(spider_graph({2, 2, 2})).kind, GraphFamily::Kind::kOther);
}

TEST(Family, DisconnectedInputIsRejected) {
  try {
    recognize_family(disjoint_union(path_graph(2), path_graph(2)));
    ADD_FAILURE() << "accepted a disconnected graph";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

TEST(Family, FamilyMembersAmongAllSmallGraphs) {
  // Paths, cycles, almost paths and path-with-triangle graphs on n vertices.
  auto expected = [](int n) {
    std::set<std::string> s;
    s.insert(to_graph6(canonical_graph(path_graph(n))));
    if (n >= 3) s.insert(to_graph6(canonical_graph(cycle_graph(n))));
    for (int k = 2; k < n - 1; ++k) s.insert(to_graph6(canonical_graph(almost_path_graph(n - 1, k))));
    for (int k = 1; k < n - 1; ++k) s.insert(to_graph6(canonical_graph(path_triangle_graph(n - 1, k))));
    return s;
  };
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> got;
    for (const Graph& g : connected_graphs_up_to(n)) {
      if (g.n() == n && recognize_family(g).kind != GraphFamily::Kind::kOther) got.insert(to_graph6(canonical_graph(g)));
    }
    EXPECT_EQ(got, expected(n)) << "n=" << n;
  }
}

}  // namespace
