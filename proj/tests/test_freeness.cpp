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

#include "csa/freeness.hpp"
#include "csa/graph_gen.hpp"
#include "csa/obstruction.hpp"
#include "oracles.hpp"

namespace {

using namespace csa;

Exponents range(std::int64_t lo, std::int64_t hi) {
  Exponents r;
  for (std::int64_t i = lo; i <= hi; ++i) r.push_back(i);
  return r;
}

Exponents concat(std::vector<Exponents> parts) {
  Exponents out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

TEST(Obstructions, TableRows) {
  for (int id = 1; id <= kObstructionCount; ++id) {
    Graph g = obstruction_graph(id);
    IntPolynomial chi = charpoly_delres(csa_from_graph(g));
    EXPECT_EQ(chi, obstruction_charpoly(id)) << "G_" << id << ": " << chi;
    EXPECT_GT(obstruction_remainder(id).degree(), 0) << id;
    EXPECT_EQ(recognize_family(g).kind, GraphFamily::Kind::kOther) << id;
    EXPECT_EQ(chi.degree(), g.n());
  }
  EXPECT_THROW(obstruction_graph(0), Error);
  EXPECT_THROW(obstruction_charpoly(9), Error);
}

TEST(Obstructions, EachRowMatchesExactlyOneGraph) {
  std::vector<Graph> all = connected_graphs_up_to(7);
  for (int id = 1; id <= kObstructionCount; ++id) {
    IntPolynomial row = obstruction_charpoly(id);
    const int n = row.degree();
    const auto hyperplanes = static_cast<std::size_t>(-row.coefficient(n - 1));
    std::vector<Graph> hits;
    for (const Graph& g : all) {
      if (g.n() != n) continue;
      const auto ge = g.edges();
      oracle::EdgeList edges(ge.begin(), ge.end());
      if (oracle::connected_subsets(n, edges).size() != hyperplanes) continue;
      if (charpoly_delres(csa_from_graph(g)) == row) hits.push_back(g);
    }
    ASSERT_EQ(hits.size(), 1U) << "G_" << id;
    EXPECT_TRUE(isomorphic(hits[0], obstruction_graph(id))) << "G_" << id;
  }
}

TEST(Exponents, FamiliesSatisfyTerao) {
  for (int n = 1; n <= 8; ++n) {
    ASSERT_TRUE(terao_consistency(csa_from_graph(path_graph(n)), exponents_for_family(GraphFamily::path(n))));
  }
  for (int n = 3; n <= 8; ++n) {
    ASSERT_TRUE(terao_consistency(charpoly_delres(csa_from_graph(cycle_graph(n))), exponents_for_family(GraphFamily::cycle(n)))) << n;
  }
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k < n; ++k) {
      Exponents e = exponents_for_family(GraphFamily::almost_path(n, k));
      ASSERT_TRUE(terao_consistency(charpoly_delres(csa_from_graph(almost_path_graph(n, k))), e)) << n << "," << k;
    }
  }
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      Exponents e = exponents_for_family(GraphFamily::path_triangle(n, k));
      ASSERT_TRUE(terao_consistency(charpoly_delres(csa_from_graph(path_triangle_graph(n, k))), e)) << n << "," << k;
    }
  }
  EXPECT_EQ(exponents_for_family(GraphFamily::triangle()), (Exponents{1, 3, 3}));
  EXPECT_EQ(exponents_for_family(GraphFamily::cycle(7)), (Exponents{1, 7, 7, 7, 7, 7, 7}));
  try {
    exponents_for_family(GraphFamily{});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotClassifiedFree);
  }
}

TEST(Exponents, TeraoRejectsNonIntegralCharpoly) {
  Arrangement a = csa_from_graph(obstruction_graph(4));
  IntegerRoots r = integer_roots(charpoly_lattice(a));
  Exponents e = r.roots;
  while (e.size() < 5) e.push_back(e.back());
  EXPECT_FALSE(terao_consistency(a, e));
  EXPECT_TRUE(terao_consistency(Arrangement(3), Exponents{0, 0, 0}));
  EXPECT_THROW(terao_consistency(a, Exponents{1, 2}), Error);
}

TEST(AdditionDeletion, AlmostPathToPathWithTriangle) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      Arrangement a = csa_from_graph(almost_path_graph(n + 1, k + 1));
      std::size_t h = *a.index_of_subset(full_set(n + 2));
      Exponents ea = concat({{1}, range(k + 2, n + 2), range(n - k + 2, n + 1)});
      Exponents edel = concat({{1}, range(k + 2, n + 1), {n + 1}, range(n - k + 2, n + 1)});
      Exponents eres = concat({{1}, range(k + 2, n + 1), range(n - k + 2, n + 1)});
      EXPECT_TRUE(addition_deletion_check(a, h, ea, edel, eres)) << n << "," << k;
      // The restriction carries the exponents of the path with a triangle.
      Exponents fam = exponents_for_family(GraphFamily::path_triangle(n, k));
      std::sort(eres.begin(), eres.end());
      EXPECT_EQ(eres, fam);
    }
  }
}

TEST(AdditionDeletion, BraidAndMismatch) {
  Arrangement a = csa_from_graph(path_graph(3));
  std::size_t h = *a.index_of_subset(make_set({1, 2, 3}));
  EXPECT_TRUE(addition_deletion_check(a, h, {1, 2, 3}, {1, 2, 2}, {1, 2}));
  EXPECT_FALSE(addition_deletion_check(a, h, {1, 2, 3}, {1, 1, 3}, {1, 2}));
  EXPECT_FALSE(addition_deletion_check(a, h, {1, 2, 3}, {1, 2, 2}, {1, 3}));
  EXPECT_FALSE(addition_deletion_check(a, h, {1, 2}, {1, 2}, {1}));
}

TEST(Classification, AllGraphsUpToSixVertices) {
  std::size_t free = 0;
  std::size_t not_free = 0;
  for (const Graph& g : connected_graphs_up_to(6)) {
    ClassificationResult r = classify_free(g);
    ASSERT_NE(r.status, FreeStatus::kUnresolved) << g.edge_string() << " " << r.note;
    const bool family = recognize_family(g).kind != GraphFamily::Kind::kOther;
    ASSERT_EQ(r.free(), family) << g.edge_string();
    if (r.free()) {
      ++free;
      Arrangement a = csa_from_graph(g);
      ASSERT_TRUE(std::is_sorted(r.exponents.begin(), r.exponents.end()));
      std::int64_t sum = 0;
      for (auto e : r.exponents) sum += e;
      ASSERT_EQ(static_cast<std::size_t>(sum), a.size());
      ASSERT_TRUE(terao_consistency(charpoly_delres(a), r.exponents)) << g.edge_string();
    } else {
      ++not_free;
      ASSERT_TRUE(r.witness.has_value());
      ASSERT_TRUE(verify_freeness_witness(g, *r.witness)) << g.edge_string();
      // The witness graph is reached by the recorded operations.
      Graph reached = replay_ops(g, r.witness->ops);
      ASSERT_TRUE(isomorphic(reached, obstruction_graph(r.witness->obstruction_id)));
      ASSERT_GT(integer_roots(charpoly_lattice(csa_from_graph(reached))).remainder.degree(), 0);
    }
  }
  EXPECT_GT(free, 0U);
  EXPECT_GT(not_free, 0U);
}

TEST(Classification, NamedExamples) {
  ClassificationResult c7 = classify_free(cycle_graph(7));
  ASSERT_TRUE(c7.free());
  EXPECT_EQ(c7.exponents, (Exponents{1, 7, 7, 7, 7, 7, 7}));

  ClassificationResult spider = classify_free(spider_graph({2, 2, 2}));
  ASSERT_EQ(spider.status, FreeStatus::kNotFree);
  EXPECT_EQ(spider.witness->obstruction_id, 8);
  EXPECT_TRUE(spider.witness->ops.empty());

  ClassificationResult bowtie = classify_free(obstruction_graph(5));
  ASSERT_EQ(bowtie.status, FreeStatus::kNotFree);
  EXPECT_TRUE(bowtie.witness->obstruction_id == 5 || bowtie.witness->obstruction_id == 1);

  for (int id = 1; id <= kObstructionCount; ++id) EXPECT_FALSE(classify_free(obstruction_graph(id)).free()) << id;
}

TEST(Classification, TamperedWitnessIsRejected) {
  Graph g = obstruction_graph(6);
  Graph bigger = disjoint_union(g, Graph(1));
  bigger.add_edge(1, 6);
  ClassificationResult r = classify_free(bigger);
  ASSERT_EQ(r.status, FreeStatus::kNotFree);
  FreenessWitness w = *r.witness;
  ASSERT_TRUE(verify_freeness_witness(bigger, w));
  w.obstruction_id = w.obstruction_id == 1 ? 2 : 1;
  EXPECT_FALSE(verify_freeness_witness(bigger, w));
  FreenessWitness w2 = *r.witness;
  w2.ops.clear();
  EXPECT_FALSE(verify_freeness_witness(bigger, w2));
}

TEST(Classification, DisconnectedGraphsCombineComponents) {
  ClassificationResult both = classify_free(disjoint_union(path_graph(2), cycle_graph(3)));
  ASSERT_TRUE(both.free());
  EXPECT_EQ(both.families.size(), 2U);
  EXPECT_EQ(both.exponents, (Exponents{1, 1, 2, 3, 3}));

  ClassificationResult mixed = classify_free(disjoint_union(path_graph(2), complete_graph(4)));
  EXPECT_EQ(mixed.status, FreeStatus::kNotFree);
  ASSERT_TRUE(mixed.witness.has_value());
  EXPECT_TRUE(verify_freeness_witness(disjoint_union(path_graph(2), complete_graph(4)), *mixed.witness));
}

TEST(Conjecture, ScanUpToFiveVertices) {
  ConjectureReport rep = integral_roots_vs_free_scan(5);
  EXPECT_EQ(rep.rows.size(), connected_graphs_up_to(5).size());
  EXPECT_EQ(rep.free_nonintegral, 0U);
  std::size_t free = 0;
  for (const auto& row : rep.rows) {
    if (row.free) ++free;
    if (row.n <= 4) {
      EXPECT_TRUE(!row.free || row.integral) << row.graph6;
    }
  }
  EXPECT_EQ(rep.free_integral, free);
  EXPECT_EQ(rep.free_integral + rep.free_nonintegral + rep.nonfree_integral + rep.nonfree_nonintegral, rep.rows.size());
  EXPECT_EQ(rep.counterexamples.size(), rep.free_nonintegral + rep.nonfree_integral);
  for (int id = 1; id <= 6; ++id) {
    ConjectureRow row = conjecture_row(obstruction_graph(id));
    EXPECT_FALSE(row.free);
    EXPECT_FALSE(row.integral);
  }
  EXPECT_THROW(integral_roots_vs_free_scan(8), Error);
}

}  // namespace
