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

#include "csa/arrangement.hpp"
#include "csa/graph_gen.hpp"
#include "csa/lattice.hpp"
#include "oracles.hpp"

namespace {

using namespace csa;

std::vector<oracle::Row> rows_of(const Arrangement& a) {
  std::vector<oracle::Row> out;
  for (const auto& n : a.normals()) out.push_back(n.coefficients());
  return out;
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> r;
  for (std::int64_t i = lo; i <= hi; ++i) r.push_back(i);
  return r;
}

std::vector<std::int64_t> concat(std::vector<std::vector<std::int64_t>> parts) {
  std::vector<std::int64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

TEST(Charpoly, EmptyArrangementIsAPower) {
  for (int d = 0; d <= 4; ++d) {
    Arrangement a(d);
    EXPECT_EQ(charpoly_lattice(a), IntPolynomial::monomial(d));
    EXPECT_EQ(charpoly_delres(a), IntPolynomial::monomial(d));
  }
}

TEST(Charpoly, PathFormula) {
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(charpoly_lattice(csa_from_graph(path_graph(n))).coefficients(), oracle::from_roots(range(1, n))) << n;
  }
}

TEST(Charpoly, CycleFormula) {
  for (int n = 3; n <= 7; ++n) {
    std::vector<std::int64_t> roots{1};
    for (int i = 1; i < n; ++i) roots.push_back(n);
    EXPECT_EQ(charpoly_delres(csa_from_graph(cycle_graph(n))).coefficients(), oracle::from_roots(roots)) << n;
  }
}

TEST(Charpoly, AlmostPathFormula) {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k < n; ++k) {
      auto roots = concat({{1}, range(k + 1, n + 1), range(n - k + 2, n)});
      EXPECT_EQ(charpoly_delres(csa_from_graph(almost_path_graph(n, k))).coefficients(), oracle::from_roots(roots)) << n << "," << k;
    }
  }
}

TEST(Charpoly, PathWithTriangleFormula) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      auto roots = concat({{1}, range(k + 2, n + 1), range(n - k + 2, n + 1)});
      EXPECT_EQ(charpoly_delres(csa_from_graph(path_triangle_graph(n, k))).coefficients(), oracle::from_roots(roots)) << n << "," << k;
    }
  }
}

TEST(Charpoly, DeltaFourOneRoots) {
  IntegerRoots r = integer_roots(charpoly_lattice(csa_from_graph(path_triangle_graph(4, 1))));
  EXPECT_EQ(r.roots, (std::vector<std::int64_t>{1, 3, 4, 5, 5}));
  EXPECT_EQ(r.remainder, IntPolynomial::constant(1));
}

TEST(Charpoly, CompleteGraphs) {
  EXPECT_EQ(charpoly_lattice(csa_from_graph(complete_graph(3))), IntPolynomial::from_roots({1, 3, 3}));
  // (t - 1)(t - 4)(t^2 - 10t + 26)
  IntPolynomial k4 = IntPolynomial::from_roots({1, 4}) * IntPolynomial({26, -10, 1});
  EXPECT_EQ(charpoly_lattice(csa_from_graph(complete_graph(4))), k4);
}

TEST(Lattice, TriangleHasEighteenFlats) {
  // 1 + 7 hyperplanes + 6 dependent triples + 3 lone pairs + 1
  IntersectionLattice L = build_lattice(csa_from_graph(complete_graph(3)));
  EXPECT_EQ(L.size(), 18U);
  EXPECT_EQ(L.level_sizes(), (std::vector<std::size_t>{1, 7, 9, 1}));
  EXPECT_EQ(L.rank(), 3);
}

TEST(Lattice, FlatCapThrows) {
  try {
    build_lattice(csa_from_graph(complete_graph(4)), 10);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceCap);
  }
}

TEST(Lattice, MobiusSignsAlternate) {
  for (const Graph& g : connected_graphs_up_to(5)) {
    IntersectionLattice L = build_lattice(csa_from_graph(g));
    ASSERT_TRUE(mobius_signs_alternate(L)) << g.edge_string();
    for (int x : L.level(1)) ASSERT_EQ(L.mobius(x), -1);
  }
}

TEST(Charpoly, WhitneyOracleOnSmallArrangements) {
  int checked = 0;
  for (const Graph& g : connected_graphs_up_to(5)) {
    Arrangement a = csa_from_graph(g);
    if (a.size() > 16) continue;
    auto expect = oracle::whitney_charpoly(static_cast<std::size_t>(a.dim()), rows_of(a));
    ASSERT_EQ(charpoly_lattice(a), IntPolynomial(expect)) << g.edge_string();
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(Charpoly, PointCountsOverPrimeFields) {
  for (const Graph& g : connected_graphs_up_to(4)) {
    Arrangement a = csa_from_graph(g);
    IntPolynomial chi = charpoly_lattice(a);
    for (std::int64_t p : {7, 11, 13}) {
      ASSERT_EQ(chi.evaluate(p), oracle::complement_points(static_cast<std::size_t>(a.dim()), rows_of(a), p)) << g.edge_string() << " p=" << p;
    }
  }
  for (const Graph& g : {cycle_graph(5), path_triangle_graph(4, 2), star_graph(4)}) {
    Arrangement a = csa_from_graph(g);
    ASSERT_EQ(charpoly_lattice(a).evaluate(7), oracle::complement_points(5, rows_of(a), 7)) << g.edge_string();
  }
}

TEST(Charpoly, EnginesAgree) {
  for (const Graph& g : connected_graphs_up_to(5)) {
    Arrangement a = csa_from_graph(g);
    IntPolynomial chi = charpoly_lattice(a);
    ASSERT_EQ(charpoly_delres(a), chi) << g.edge_string();
    ASSERT_EQ(charpoly_finite_field(a), chi) << g.edge_string();
  }
}

TEST(Charpoly, LatticeAndDeletionRestrictionAgreeOnSixVertices) {
  for (const Graph& g : connected_graphs_up_to(6)) {
    if (g.n() != 6) continue;
    Arrangement a = csa_from_graph(g);
    ASSERT_EQ(charpoly_delres(a), charpoly_lattice(a)) << g.edge_string();
  }
}

TEST(Charpoly, OneIsAlwaysARoot) {
  for (const Graph& g : connected_graphs_up_to(6)) {
    ASSERT_EQ(charpoly_delres(csa_from_graph(g)).evaluate(1), 0) << g.edge_string();
  }
}

TEST(Charpoly, SplitAtAnyHyperplane) {
  Arrangement a = csa_from_graph(cycle_graph(4));
  IntPolynomial chi = charpoly_lattice(a);
  for (std::size_t h = 0; h < a.size(); ++h) EXPECT_EQ(charpoly_split_at(a, h), chi);
}

TEST(Charpoly, FiniteFieldDimensionCap) {
  try {
    charpoly_finite_field(csa_from_graph(path_graph(6)));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionTooLarge);
  }
  EXPECT_THROW(charpoly_finite_field(csa_from_graph(path_graph(5)), 4), Error);
  EXPECT_EQ(charpoly_finite_field(csa_from_graph(path_graph(5))), IntPolynomial::from_roots({1, 2, 3, 4, 5}));
}

TEST(Charpoly, DisjointUnionMultiplies) {
  for (const Graph& g : connected_graphs_up_to(3)) {
    for (const Graph& h : connected_graphs_up_to(2)) {
      Graph u = disjoint_union(g, h);
      Arrangement a = csa_from_graph(u);
      IntPolynomial chi = charpoly_lattice(csa_from_graph(g)) * charpoly_lattice(csa_from_graph(h));
      ASSERT_EQ(charpoly_lattice(a), chi);
      ASSERT_EQ(chambers(a), chambers(csa_from_graph(g)) * chambers(csa_from_graph(h)));
    }
  }
}

TEST(Chambers, Paths) {
  // Zaslavsky on prod_{i=1}^n (t - i) gives (n + 1)!.
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(chambers(csa_from_graph(path_graph(n))), oracle::factorial(n + 1)) << n;
}

TEST(Chambers, Cycles) {
  for (int n = 3; n <= 7; ++n) {
    Arrangement a = csa_from_graph(cycle_graph(n));
    EXPECT_EQ(chambers(charpoly_delres(a), a.dim()), 2 * oracle::power(n + 1, n - 1)) << n;
  }
  EXPECT_EQ(chambers(csa_from_graph(cycle_graph(3))), 32);
  EXPECT_EQ(chambers(csa_from_graph(cycle_graph(4))), 250);
}

}  // namespace
