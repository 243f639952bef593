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

#include "csa/graph_gen.hpp"
#include "csa/serialization.hpp"

namespace {

using namespace csa;

TEST(Json, ArrangementRoundTrip) {
  for (const Graph& g : connected_graphs_up_to(4)) {
    Arrangement a = csa_from_graph(g);
    Json j = Json::parse(to_json(a).dump());
    EXPECT_EQ(arrangement_from_json(j), a);
    EXPECT_EQ(j.at("normals").size(), a.size());
  }
  Arrangement s = shi_cone(3);
  EXPECT_EQ(arrangement_from_json(to_json(s)), s);
}

TEST(Json, PolynomialCoefficientsAscend) {
  IntPolynomial p = IntPolynomial::from_roots({1, 2, 3});
  Json j = to_json(p);
  EXPECT_EQ(j.at("coefficients"), (Json{-6, 11, -6, 1}));
  EXPECT_EQ(j.at("factored").get<std::string>(), factored_string(p));
}

TEST(Json, WitnessOperationsRoundTrip) {
  WitnessOp keep = WitnessOp::induced(make_set({1, 3, 4}));
  WitnessOp contract = WitnessOp::contract({2, 5});
  for (const WitnessOp& op : {keep, contract}) {
    WitnessOp back = witness_op_from_json(Json::parse(to_json(op).dump()));
    EXPECT_EQ(back.kind, op.kind);
    if (op.kind == WitnessOp::Kind::kInduced) {
      EXPECT_EQ(back.keep, op.keep);
    } else {
      EXPECT_EQ(back.edge, op.edge);
    }
  }
  EXPECT_THROW(witness_op_from_json(Json{{"op", "delete"}}), Error);
  EXPECT_THROW(witness_op_from_json(Json{{"op", "induced"}, {"keep", Json::array()}}), Error);
  EXPECT_THROW(witness_op_from_json(Json{{"op", "induced"}, {"keep", {0}}}), Error);
}

TEST(Json, ClassificationCarriesTheWitness) {
  Json free = to_json(classify_free(cycle_graph(4)));
  EXPECT_EQ(free.at("exponents"), (Json{1, 4, 4, 4}));
  EXPECT_FALSE(free.contains("witness"));
  Json not_free = to_json(classify_free(complete_graph(4)));
  ASSERT_TRUE(not_free.contains("witness"));
  EXPECT_FALSE(not_free.contains("exponents"));
  EXPECT_GT(not_free.at("witness").at("remainder_poly").at("coefficients").size(), 2U);
}

TEST(Certificate, MatChainVerifiesAndDetectsTampering) {
  Graph g = almost_path_graph(5, 3);
  MatChainResult r = mat_chain_cardinality(g);
  ASSERT_TRUE(r.ok);
  Json cert = Json::parse(mat_certificate(g, r.chain).dump());
  EXPECT_EQ(cert.at("batch_sizes"), (Json{6, 5, 5, 5, 3, 1}));
  EXPECT_TRUE(verify_certificate(cert).ok) << verify_certificate(cert).message;

  Json early = cert;
  early["batches"][0].push_back(early["batches"][5][0]);
  early["batches"].erase(5);
  EXPECT_FALSE(verify_certificate(early).ok);

  Json dropped = cert;
  dropped["batches"][4].erase(0);
  EXPECT_FALSE(verify_certificate(dropped).ok);

  Json wrong_exps = cert;
  wrong_exps["exponents"][0] = 2;
  EXPECT_FALSE(verify_certificate(wrong_exps).ok);

  MatChain unverified = cardinality_filtration(csa_from_graph(g));
  EXPECT_THROW(mat_certificate(g, unverified), Error);
}

TEST(Certificate, NicePartition) {
  Graph g = path_triangle_graph(4, 1);
  Arrangement a = csa_from_graph(g);
  NiceSearchResult r = find_nice_partition(a);
  ASSERT_TRUE(r.partition.has_value()) << r.reason;
  Json cert = nice_certificate(g, *r.partition);
  EXPECT_TRUE(verify_certificate(cert).ok);

  // Moving one hyperplane from a block into the singleton breaks niceness or independence.
  Json moved = cert;
  Json h = moved["blocks"][1][0];
  moved["blocks"][1].erase(0);
  moved["blocks"][0].push_back(h);
  EXPECT_FALSE(verify_certificate(moved).ok);

  Json missing = cert;
  missing["blocks"].erase(missing["blocks"].size() - 1);
  CertificateCheck c = verify_certificate(missing);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.message, "blocks do not partition the arrangement");

  Json outside = cert;
  outside["blocks"][0][0] = Json{1, 3};
  EXPECT_FALSE(verify_certificate(outside).ok);
}

TEST(Certificate, ModularChain) {
  Graph g = path_graph(4);
  Arrangement a = csa_from_graph(g);
  auto chain = supersolvable_chain(a);
  ASSERT_TRUE(chain.has_value());
  Json cert = modular_certificate(g, *chain);
  EXPECT_EQ(cert.at("flats").size(), 5U);
  EXPECT_TRUE(verify_certificate(cert).ok);

  Json reversed = cert;
  std::reverse(reversed["flats"].begin(), reversed["flats"].end());
  EXPECT_FALSE(verify_certificate(reversed).ok);

  Json open = cert;
  open["flats"][1].erase(open["flats"][1].size() - 1);
  EXPECT_FALSE(verify_certificate(open).ok);
}

TEST(Certificate, Regions) {
  Graph g = cycle_graph(3);
  Json cert = regions_certificate(g, enumerate_regions(csa_from_graph(g)));
  EXPECT_EQ(cert.at("count"), 32);
  EXPECT_TRUE(cert.at("simplicial").get<bool>());
  EXPECT_TRUE(verify_certificate(cert).ok);
  Json wrong = cert;
  wrong["count"] = 30;
  EXPECT_FALSE(verify_certificate(wrong).ok);
  Json flipped = cert;
  flipped["simplicial"] = false;
  EXPECT_FALSE(verify_certificate(flipped).ok);
}

TEST(Certificate, MalformedInput) {
  EXPECT_FALSE(verify_certificate(Json::object()).ok);
  EXPECT_FALSE(verify_certificate(Json{{"kind", "mat"}, {"graph6", "C~"}}).ok);
  CertificateCheck unknown = verify_certificate(Json{{"kind", "tope"}, {"graph6", to_graph6(path_graph(3))}});
  EXPECT_FALSE(unknown.ok);
  EXPECT_NE(unknown.message.find("unknown certificate kind"), std::string::npos);
  EXPECT_FALSE(verify_certificate(Json{{"kind", "nice"}, {"graph6", "???"}, {"blocks", Json::array()}}).ok);
}

}  // namespace
