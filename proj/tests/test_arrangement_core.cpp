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

#include <set>

#include "csa/arrangement.hpp"
#include "csa/graph_gen.hpp"
#include "csa/lattice.hpp"
#include "oracles.hpp"

namespace {

using namespace csa;

TEST(Normal, CanonicalForm) {
  Normal n(IntVector{0, -2, 4, 6});
  EXPECT_EQ(n.coefficients(), (IntVector{0, 1, -2, -3}));
  EXPECT_EQ(Normal(IntVector{3, 0, -3}), Normal(IntVector{-1, 0, 1}));
  EXPECT_FALSE(n.is_01());
  EXPECT_EQ(n.max_abs(), 3);
  EXPECT_THROW(Normal(IntVector{0, 0}), Error);
}

TEST(Normal, FromSubset) {
  Normal n = Normal::from_subset(4, make_set({1, 3}));
  EXPECT_EQ(n.coefficients(), (IntVector{1, 0, 1, 0}));
  EXPECT_TRUE(n.is_01());
  EXPECT_EQ(n.support(), make_set({1, 3}));
  try {
    Normal::from_subset(3, 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySubset);
  }
  EXPECT_THROW(Normal::from_subset(2, make_set({3})), Error);
}

TEST(Arrangement, DeduplicatesAndSorts) {
  Arrangement a(2, {Normal(IntVector{1, 1}), Normal(IntVector{2, 2}), Normal(IntVector{0, 1}), Normal(IntVector{-1, 0})});
  EXPECT_EQ(a.size(), 3U);
  EXPECT_TRUE(std::is_sorted(a.normals().begin(), a.normals().end()));
  EXPECT_TRUE(a.contains(Normal(IntVector{1, 0})));
  EXPECT_TRUE(a.index_of(Normal(IntVector{0, 1})).has_value());
}

TEST(Arrangement, CsaSizesMatchConnectedSubsetCounts) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs_up_to(n)) {
      const auto ge = g.edges();
      oracle::EdgeList edges(ge.begin(), ge.end());
      Arrangement a = csa_from_graph(g);
      ASSERT_EQ(a.size(), oracle::connected_subsets(g.n(), edges).size());
      ASSERT_TRUE(a.is_01());
      ASSERT_TRUE(is_essential(a));
      for (std::size_t i = 0; i < a.size(); ++i) ASSERT_TRUE(g.is_connected(a.subset(i)));
    }
  }
}

TEST(Arrangement, FamilySizes) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(csa_from_graph(path_graph(n)).size(), static_cast<std::size_t>(n * (n + 1) / 2));
    EXPECT_EQ(csa_from_graph(cycle_graph(n)).size(), static_cast<std::size_t>(n == 2 ? 3 : n * (n - 1) + 1));
  }
  EXPECT_EQ(csa_from_graph(complete_graph(3)).size(), 7U);
}

TEST(Arrangement, ArrangementFromSubsetsRejectsBadInput) {
  EXPECT_THROW(arrangement_from_subsets(3, {0}), Error);
  EXPECT_THROW(arrangement_from_subsets(2, {make_set({3})}), Error);
}

TEST(Arrangement, RankAndSubarrangements) {
  Arrangement a = csa_from_graph(path_graph(3));
  EXPECT_EQ(rank(a), 3);
  auto i1 = static_cast<int>(*a.index_of_subset(make_set({1})));
  auto i12 = static_cast<int>(*a.index_of_subset(make_set({1, 2})));
  auto i2 = static_cast<int>(*a.index_of_subset(make_set({2})));
  EXPECT_EQ(rank(a, {i1, i12, i2}), 2);
  Arrangement b = delete_hyperplane(a, static_cast<std::size_t>(i12));
  EXPECT_EQ(b.size(), 5U);
  EXPECT_FALSE(b.contains(Normal::from_subset(3, make_set({1, 2}))));
  Arrangement c = add_hyperplanes(b, {Normal::from_subset(3, make_set({1, 2}))});
  EXPECT_EQ(c, a);
  EXPECT_EQ(subarrangement(a, {i1, i2}).size(), 2U);
  EXPECT_FALSE(is_essential(subarrangement(a, {i1, i2})));
}

// Restricting to ker x_v deletes coordinate v from every normal.
std::set<std::vector<std::int64_t>> restricted_by_hand(const Arrangement& a, int v) {
  std::set<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<std::int64_t> row;
    for (int j = 1; j <= a.dim(); ++j) {
      if (j != v) row.push_back(a.normal(i)[static_cast<std::size_t>(j - 1)]);
    }
    if (std::any_of(row.begin(), row.end(), [](auto x) { return x != 0; })) out.insert(row);
  }
  return out;
}

TEST(Restriction, CoordinateHyperplaneDropsTheCoordinate) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs_up_to(n)) {
      if (g.n() != n) continue;
      Arrangement a = csa_from_graph(g);
      for (int v = 1; v <= n; ++v) {
        Arrangement r = restrict_to(a, *a.index_of_subset(vertex_bit(v)));
        std::set<std::vector<std::int64_t>> got;
        for (const auto& nn : r.normals()) got.insert(nn.coefficients());
        ASSERT_EQ(got, restricted_by_hand(a, v)) << g.edge_string() << " v=" << v;
        // The restricted normals are again those of a CSA.
        ASSERT_EQ(r, csa_from_graph(restrict_vertex(g, v))) << g.edge_string() << " v=" << v;
      }
    }
  }
}

TEST(Restriction, AlmostPathRestrictsToPathWithTriangle) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      Arrangement a = csa_from_graph(almost_path_graph(n + 1, k + 1));
      Arrangement r = restrict_to(a, *a.index_of_subset(vertex_bit(k + 1)));
      EXPECT_EQ(r, csa_from_graph(path_triangle_graph(n, k))) << n << "," << k;
    }
  }
}

TEST(Restriction, IndependentOfTheChosenBasis) {
  Arrangement a = csa_from_graph(cycle_graph(4));
  for (std::size_t h = 0; h < a.size(); ++h) {
    IntMatrix basis = hyperplane_basis(a.normal(h));
    // A unimodular change of basis.
    IntMatrix other = basis;
    for (std::size_t j = 0; j < other[0].size(); ++j) other[0][j] += 2 * basis[1][j] - basis[2][j];
    std::swap(other[1], other[2]);
    Arrangement r1 = restrict_with_basis(a, h, basis);
    Arrangement r2 = restrict_with_basis(a, h, other);
    EXPECT_EQ(r1.size(), r2.size());
    EXPECT_EQ(charpoly_lattice(r1), charpoly_lattice(r2));
  }
}

TEST(Restriction, RejectsInvalidBases) {
  Arrangement a = csa_from_graph(path_graph(3));
  EXPECT_THROW(restrict_with_basis(a, 0, {{1, 0, 0}}), Error);
  IntMatrix not_in_h{{1, 0, 0}, {0, 1, 0}};
  std::size_t h = *a.index_of_subset(make_set({1, 2, 3}));
  EXPECT_THROW(restrict_with_basis(a, h, not_in_h), Error);
  EXPECT_THROW(restrict_to(a, 99), Error);
}

TEST(Flats, MembersAndLocalisation) {
  Arrangement a = csa_from_graph(path_graph(3));
  std::vector<int> pick{static_cast<int>(*a.index_of_subset(make_set({1}))), static_cast<int>(*a.index_of_subset(make_set({2})))};
  Flat x = flat_of(a, pick);
  EXPECT_EQ(x.codim(), 2);
  EXPECT_EQ(x.members.count(), 3U);  // x_1, x_2 and x_1 + x_2
  EXPECT_TRUE(x.members.test(*a.index_of_subset(make_set({1, 2}))));
  Arrangement ax = localize(a, x);
  EXPECT_EQ(ax.size(), 3U);
  EXPECT_EQ(ax.dim(), 3);
}

}  // namespace
