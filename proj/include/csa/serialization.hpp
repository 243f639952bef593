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

// JSON forms of arrangements, polynomials and certificates. Certificates
// carry the graph in graph6 and are re-verified from scratch when read.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "csa/arrangement.hpp"
#include "csa/circuits_mat.hpp"
#include "csa/coordinate_maps.hpp"
#include "csa/factored.hpp"
#include "csa/freeness.hpp"
#include "csa/graph_io.hpp"
#include "csa/lattice.hpp"
#include "csa/polynomial.hpp"
#include "csa/simplicial.hpp"

namespace csa {

using Json = nlohmann::ordered_json;

inline Json subset_json(VertexSet s) { return set_elements(s); }

inline VertexSet subset_from_json(const Json& j) {
  VertexSet s = 0;
  for (const auto& v : j) {
    int x = v.get<int>();
    if (x < 1 || x > kMaxVertices) throw Error(ErrorCode::kParse, "vertex label out of range in certificate");
    s |= vertex_bit(x);
  }
  if (s == 0) throw Error(ErrorCode::kParse, "empty vertex set in certificate");
  return s;
}

inline Json to_json(const Arrangement& a) {
  Json normals = Json::array();
  for (const auto& n : a.normals()) normals.push_back(n.coefficients());
  return {{"dim", a.dim()}, {"normals", normals}};
}

inline Arrangement arrangement_from_json(const Json& j) {
  std::vector<Normal> normals;
  for (const auto& row : j.at("normals")) normals.emplace_back(row.get<IntVector>());
  return Arrangement(j.at("dim").get<int>(), normals);
}

inline Json to_json(const IntPolynomial& p) {
  std::vector<std::int64_t> c;
  for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coefficient(i));
  return {{"coefficients", c}, {"expanded", p.to_string()}, {"factored", factored_string(p)}};
}

inline Json to_json(const LinearMap& f) { return {{"source_dim", f.source_dim()}, {"target_dim", f.target_dim()}, {"matrix", f.matrix()}}; }

inline Json to_json(const WitnessOp& op) {
  if (op.kind == WitnessOp::Kind::kInduced) return {{"op", "induced"}, {"keep", subset_json(op.keep)}};
  return {{"op", "contract"}, {"edge", {op.edge.first, op.edge.second}}};
}

inline WitnessOp witness_op_from_json(const Json& j) {
  const std::string op = j.at("op").get<std::string>();
  if (op == "induced") return WitnessOp::induced(subset_from_json(j.at("keep")));
  if (op == "contract") {
    const auto& e = j.at("edge");
    return WitnessOp::contract({e.at(0).get<int>(), e.at(1).get<int>()});
  }
  throw Error(ErrorCode::kParse, "unknown witness operation '" + op + "'");
}

inline Json to_json(const ClassificationResult& r) {
  Json families = Json::array();
  for (const auto& f : r.families) families.push_back(f.to_string());
  Json j{{"status", to_string(r.status)}, {"family", families}};
  if (r.free()) j["exponents"] = r.exponents;
  if (r.witness) {
    Json ops = Json::array();
    for (const auto& op : r.witness->ops) ops.push_back(to_json(op));
    j["witness"] = {{"ops", ops},
                    {"obstruction_id", r.witness->obstruction_id},
                    {"charpoly", to_json(r.witness->charpoly)},
                    {"remainder_poly", to_json(r.witness->remainder)}};
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const RegionReport& r) {
  Json hist = Json::object();
  for (auto [walls, count] : r.wall_histogram) hist[std::to_string(walls)] = count;
  return {{"count", r.count()}, {"wall_histogram", hist}, {"simplicial", r.simplicial}};
}

// ---------------------------------------------------------------------------
// Certificates

struct CertificateCheck {
  bool ok = false;
  std::string message;
};

inline Json graph_header(const std::string& kind, const Graph& g) {
  return {{"kind", kind}, {"graph6", to_graph6(g)}, {"edges", g.edge_string()}};
}

inline Json mat_certificate(const Graph& g, const MatChain& chain) {
  if (!chain.verified) throw Error(ErrorCode::kUnverified, "MAT chain is not verified");
  Json j = graph_header("mat", g);
  Json batches = Json::array();
  for (const auto& b : chain.batches) {
    Json batch = Json::array();
    for (const auto& n : b) batch.push_back(subset_json(n.support()));
    batches.push_back(batch);
  }
  Json steps = Json::array();
  for (const auto& s : chain.steps) steps.push_back({{"codim", s.codim}, {"d", s.d}});
  j["batch_sizes"] = chain.batch_sizes();
  j["batches"] = batches;
  j["steps"] = steps;
  j["exponents"] = chain.exponents;
  return j;
}

inline Json nice_certificate(const Graph& g, const HPartition& p) {
  Arrangement a = csa_from_graph(g);
  Json j = graph_header("nice", g);
  Json blocks = Json::array();
  for (const auto& b : partition_subsets(a, p)) {
    Json block = Json::array();
    for (VertexSet s : b) block.push_back(subset_json(s));
    blocks.push_back(block);
  }
  j["block_sizes"] = p.block_sizes();
  j["blocks"] = blocks;
  return j;
}

inline Json modular_certificate(const Graph& g, const ModularChain& chain) {
  Arrangement a = csa_from_graph(g);
  Json j = graph_header("modular", g);
  Json flats = Json::array();
  for (const auto& f : chain.flats) {
    Json members = Json::array();
    for (int h : f.members.indices()) members.push_back(subset_json(a.subset(static_cast<std::size_t>(h))));
    flats.push_back(members);
  }
  j["flats"] = flats;
  return j;
}

inline Json regions_certificate(const Graph& g, const RegionReport& r) {
  Json j = graph_header("regions", g);
  j.update(to_json(r));
  return j;
}

namespace detail {

inline std::vector<int> indices_from_json(const Arrangement& a, const Json& subsets) {
  std::vector<int> out;
  for (const auto& s : subsets) {
    auto i = a.index_of_subset(subset_from_json(s));
    if (!i) throw Error(ErrorCode::kParse, "certificate names a hyperplane outside the arrangement");
    out.push_back(static_cast<int>(*i));
  }
  return out;
}

}  // namespace detail

/// Rebuilds the object a certificate describes and checks it independently.
inline CertificateCheck verify_certificate(const Json& j) {
  CertificateCheck c;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const Graph g = from_graph6(j.at("graph6").get<std::string>());
    const Arrangement a = csa_from_graph(g);
    if (kind == "mat") {
      MatChain chain;
      chain.dim = a.dim();
      std::vector<Normal> all;
      for (const auto& b : j.at("batches")) {
        std::vector<Normal> batch;
        for (const auto& s : b) batch.push_back(Normal::from_subset(a.dim(), subset_from_json(s)));
        all.insert(all.end(), batch.begin(), batch.end());
        chain.batches.push_back(std::move(batch));
      }
      if (!(Arrangement(a.dim(), all) == a) || all.size() != a.size()) {
        c.message = "batches do not partition the arrangement";
        return c;
      }
      MatChainResult r = verify_mat_chain(std::move(chain));
      if (!r.ok) {
        c.message = r.message;
        return c;
      }
      if (r.chain.exponents != j.at("exponents").get<Exponents>()) {
        c.message = "recorded exponents differ from the replayed chain";
        return c;
      }
      if (!terao_consistency(charpoly_lattice(a), r.chain.exponents)) {
        c.message = "exponents do not factor the characteristic polynomial";
        return c;
      }
    } else if (kind == "nice") {
      HPartition p;
      for (const auto& b : j.at("blocks")) p.blocks.push_back(detail::indices_from_json(a, b));
      if (!is_valid_partition(a, p)) {
        c.message = "blocks do not partition the arrangement";
        return c;
      }
      NiceReport r = is_nice(a, p);
      if (!r.nice) {
        c.message = r.independent ? "a flat has no singleton block" : "partition is not independent";
        return c;
      }
    } else if (kind == "modular") {
      ModularChain chain;
      for (const auto& f : j.at("flats")) {
        std::vector<int> members = detail::indices_from_json(a, f);
        Flat x = flat_of(a, members);
        if (x.members.count() != members.size()) {
          c.message = "a listed member set is not closed";
          return c;
        }
        chain.flats.push_back(std::move(x));
      }
      if (!verify_modular_chain(a, chain, build_lattice(a))) {
        c.message = "not a maximal chain of modular flats";
        return c;
      }
    } else if (kind == "regions") {
      RegionReport r = enumerate_regions(a);
      if (static_cast<std::int64_t>(r.count()) != chambers(a)) {
        c.message = "region count differs from the chamber count";
        return c;
      }
      if (to_json(r) != Json{{"count", j.at("count")}, {"wall_histogram", j.at("wall_histogram")}, {"simplicial", j.at("simplicial")}}) {
        c.message = "recorded region report differs from a fresh enumeration";
        return c;
      }
    } else {
      c.message = "unknown certificate kind '" + kind + "'";
      return c;
    }
  } catch (const Json::exception& e) {
    c.message = std::string("malformed certificate: ") + e.what();
    return c;
  } catch (const Error& e) {
    c.message = e.what();
    return c;
  }
  c.ok = true;
  c.message = "verified";
  return c;
}

}  // namespace csa
