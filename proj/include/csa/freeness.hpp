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

// Freeness of connected subgraph arrangements. A connected graph gives a
// free CSA exactly when it is a path, cycle, almost path or path with a
// triangle; every other graph reaches one of the obstruction graphs through
// induced subgraphs and edge contractions, and that chain is the witness.

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "csa/arrangement.hpp"
#include "csa/circuits_mat.hpp"
#include "csa/common.hpp"
#include "csa/graph.hpp"
#include "csa/graph_gen.hpp"
#include "csa/graph_io.hpp"
#include "csa/lattice.hpp"
#include "csa/obstruction.hpp"
#include "csa/polynomial.hpp"

namespace csa {

/// Exponents of the free family arrangements, ascending.
inline Exponents exponents_for_family(const GraphFamily& f) {
  Exponents e;
  const std::int64_t n = f.n;
  const std::int64_t k = f.k;
  switch (f.kind) {
    case GraphFamily::Kind::kPath:
      for (std::int64_t i = 1; i <= n; ++i) e.push_back(i);
      break;
    case GraphFamily::Kind::kCycle:
      e.push_back(1);
      for (std::int64_t i = 1; i < n; ++i) e.push_back(n);
      break;
    case GraphFamily::Kind::kAlmostPath:
      e.push_back(1);
      for (std::int64_t i = k + 1; i <= n + 1; ++i) e.push_back(i);
      for (std::int64_t i = n - k + 2; i <= n; ++i) e.push_back(i);
      break;
    case GraphFamily::Kind::kPathTriangle:
    case GraphFamily::Kind::kTriangle:
      e.push_back(1);
      for (std::int64_t i = k + 2; i <= n + 1; ++i) e.push_back(i);
      for (std::int64_t i = n - k + 2; i <= n + 1; ++i) e.push_back(i);
      break;
    case GraphFamily::Kind::kOther:
      throw Error(ErrorCode::kNotClassifiedFree, "graph is not in a free family");
  }
  std::sort(e.begin(), e.end());
  return e;
}

/// prod (t - d_i).
inline IntPolynomial polynomial_from_exponents(const Exponents& e) { return IntPolynomial::from_roots(e); }

/// chi(A) == prod (t - d_i) exactly.
inline bool terao_consistency(const IntPolynomial& chi, const Exponents& e) { return chi == polynomial_from_exponents(e); }

inline bool terao_consistency(const Arrangement& a, const Exponents& e) {
  if (static_cast<int>(e.size()) != a.dim()) throw Error(ErrorCode::kInvalidArgument, "exponent count must equal the dimension");
  return terao_consistency(charpoly_lattice(a), e);
}

/// The exponent pattern of addition-deletion at h: exps_del is exps_a with
/// one value d lowered to d - 1 and exps_res is exps_a with that d removed.
/// All three multisets must also factor the respective characteristic
/// polynomials.
inline bool addition_deletion_check(const Arrangement& a, std::size_t h, Exponents exps_a, Exponents exps_del,
                                    Exponents exps_res) {
  if (static_cast<int>(exps_a.size()) != a.dim() || exps_del.size() != exps_a.size() ||
      exps_res.size() + 1 != exps_a.size()) {
    return false;
  }
  std::sort(exps_a.begin(), exps_a.end());
  std::sort(exps_del.begin(), exps_del.end());
  std::sort(exps_res.begin(), exps_res.end());
  bool pattern = false;
  for (std::size_t i = 0; i < exps_a.size() && !pattern; ++i) {
    Exponents del = exps_a;
    del[i] -= 1;
    std::sort(del.begin(), del.end());
    Exponents res = exps_a;
    res.erase(res.begin() + static_cast<std::ptrdiff_t>(i));
    pattern = del == exps_del && res == exps_res;
  }
  if (!pattern) return false;
  return terao_consistency(charpoly_lattice(a), exps_a) &&
         terao_consistency(charpoly_lattice(delete_hyperplane(a, h)), exps_del) &&
         terao_consistency(charpoly_lattice(restrict_to(a, h)), exps_res);
}

/// One graph operation of a minor witness, in the labels of the graph it is
/// applied to.
struct WitnessOp {
  enum class Kind { kInduced, kContract };
  Kind kind = Kind::kInduced;
  VertexSet keep = 0;  // kInduced
  Edge edge{0, 0};     // kContract

  static WitnessOp induced(VertexSet s) { return {Kind::kInduced, s, {0, 0}}; }
  static WitnessOp contract(Edge e) { return {Kind::kContract, 0, e}; }

  std::string to_string() const {
    if (kind == Kind::kInduced) return "induced" + set_to_string(keep);
    return "contract{" + std::to_string(edge.first) + "," + std::to_string(edge.second) + "}";
  }

  bool operator==(const WitnessOp&) const = default;
};

inline Graph apply_op(const Graph& g, const WitnessOp& op) {
  return op.kind == WitnessOp::Kind::kInduced ? induced_subgraph(g, op.keep) : contract_edge(g, op.edge);
}

inline Graph replay_ops(Graph g, const std::vector<WitnessOp>& ops) {
  for (const auto& op : ops) g = apply_op(g, op);
  return g;
}

/// A sequence of operations from the input graph to a target graph.
struct MinorWitness {
  std::vector<WitnessOp> ops;
  int target = 0;       // obstruction id, or a caller-defined target index
  Graph reached;        // result of replaying ops
};

/// Depth-first search through connected one-step minors (vertex deletions,
/// then edge contractions) that stay outside the `good` class, until a graph
/// isomorphic to one of the targets appears. Graphs already explored without
/// success are remembered by canonical code.
class MinorSearch {
 public:
  MinorSearch(std::function<bool(const Graph&)> good, std::vector<Graph> targets)
      : good_(std::move(good)), targets_(std::move(targets)) {}

  std::optional<MinorWitness> run(const Graph& g) {
    std::vector<WitnessOp> ops;
    Graph start = g;
    // A vertex of degree >= 4 localises to a 5-vertex graph at once.
    for (int v = 1; v <= g.n(); ++v) {
      if (g.degree(v) < 4) continue;
      std::vector<int> nb = set_elements(g.neighbors(v));
      VertexSet s = vertex_bit(v);
      for (int i = 0; i < 4; ++i) s |= vertex_bit(nb[static_cast<std::size_t>(i)]);
      if (s != g.vertices()) {
        ops.push_back(WitnessOp::induced(s));
        start = induced_subgraph(g, s);
      }
      break;
    }
    return dfs(start, ops);
  }

 private:
  std::optional<int> match(const Graph& h) const {
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      if (targets_[i].n() == h.n() && isomorphic(targets_[i], h)) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  std::optional<MinorWitness> dfs(const Graph& h, std::vector<WitnessOp>& ops) {
    if (auto m = match(h)) return MinorWitness{ops, *m, h};
    std::string key = h.n() <= kMaxCanonicalVertices ? to_graph6(canonical_graph(h)) : to_graph6(h);
    if (dead_.count(key)) return std::nullopt;
    auto try_child = [&](const Graph& c, const WitnessOp& op) -> std::optional<MinorWitness> {
      if (c.n() == 0 || !c.is_connected() || good_(c)) return std::nullopt;
      ops.push_back(op);
      auto r = dfs(c, ops);
      if (!r) ops.pop_back();
      return r;
    };
    for (int v = h.n(); v >= 1; --v) {
      VertexSet s = h.vertices() & ~vertex_bit(v);
      if (s == 0) continue;
      if (auto r = try_child(induced_subgraph(h, s), WitnessOp::induced(s))) return r;
    }
    for (const Edge& e : h.edges()) {
      if (auto r = try_child(contract_edge(h, e), WitnessOp::contract(e))) return r;
    }
    dead_.insert(std::move(key));
    return std::nullopt;
  }

  std::function<bool(const Graph&)> good_;
  std::vector<Graph> targets_;
  std::unordered_set<std::string> dead_;
};

enum class FreeStatus { kFree, kNotFree, kUnresolved };

inline const char* to_string(FreeStatus s) {
  switch (s) {
    case FreeStatus::kFree: return "free";
    case FreeStatus::kNotFree: return "not_free";
    case FreeStatus::kUnresolved: return "unresolved";
  }
  return "unknown";
}

struct FreenessWitness {
  std::vector<WitnessOp> ops;  // applied to the input graph
  int obstruction_id = 0;
  IntPolynomial charpoly;      // chi of the reached obstruction, computed
  IntPolynomial remainder;     // its part without integer roots
};

struct ClassificationResult {
  FreeStatus status = FreeStatus::kUnresolved;
  std::vector<GraphFamily> families;  // one per component
  Exponents exponents;                // when free, ascending
  std::optional<FreenessWitness> witness;
  std::string note;

  bool free() const { return status == FreeStatus::kFree; }
};

inline bool is_free_family(const Graph& g) { return recognize_family(g).kind != GraphFamily::Kind::kOther; }

/// Witness for a connected non-family graph: operations down to some G_i,
/// with the reached graph's characteristic polynomial recomputed.
inline std::optional<FreenessWitness> find_freeness_witness(const Graph& g) {
  std::vector<Graph> targets;
  for (int i = 1; i <= kObstructionCount; ++i) targets.push_back(obstruction_graph(i));
  MinorSearch search(is_free_family, targets);
  auto w = search.run(g);
  if (!w) return std::nullopt;
  FreenessWitness out;
  out.ops = w->ops;
  out.obstruction_id = w->target + 1;
  out.charpoly = charpoly_lattice(csa_from_graph(w->reached));
  out.remainder = integer_roots(out.charpoly).remainder;
  return out;
}

/// Classification of a graph: free families with their exponents, otherwise
/// an obstruction witness. Components are classified separately; the
/// product is free iff every factor is.
inline ClassificationResult classify_free(const Graph& g) {
  ClassificationResult r;
  bool other = false;
  for (VertexSet comp : g.components()) {
    Graph c = induced_subgraph(g, comp);
    GraphFamily f = recognize_family(c);
    r.families.push_back(f);
    if (f.kind != GraphFamily::Kind::kOther) {
      Exponents e = exponents_for_family(f);
      r.exponents.insert(r.exponents.end(), e.begin(), e.end());
      continue;
    }
    other = true;
    if (r.witness) continue;
    if (auto w = find_freeness_witness(c)) {
      if (comp != g.vertices()) w->ops.insert(w->ops.begin(), WitnessOp::induced(comp));
      r.witness = std::move(w);
    } else {
      r.note = "no obstruction minor found for component " + set_to_string(comp);
    }
  }
  if (!other) {
    r.status = FreeStatus::kFree;
    std::sort(r.exponents.begin(), r.exponents.end());
  } else {
    r.status = r.witness ? FreeStatus::kNotFree : FreeStatus::kUnresolved;
    r.exponents.clear();
  }
  return r;
}

/// Replays a witness and checks that the reached graph is the claimed
/// obstruction and that its characteristic polynomial has a non-integral part.
inline bool verify_freeness_witness(const Graph& g, const FreenessWitness& w) {
  Graph h = replay_ops(g, w.ops);
  if (w.obstruction_id < 1 || w.obstruction_id > kObstructionCount) return false;
  if (!isomorphic(h, obstruction_graph(w.obstruction_id))) return false;
  IntPolynomial chi = charpoly_lattice(csa_from_graph(h));
  return chi == w.charpoly && integer_roots(chi).remainder.degree() > 0;
}

enum class ChiEngine { kLattice, kDelRes };

struct ConjectureRow {
  std::string graph6;
  int n = 0;
  int edges = 0;
  std::string family;
  bool free = false;
  bool integral = false;
  IntPolynomial charpoly;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  std::size_t free_integral = 0;
  std::size_t free_nonintegral = 0;
  std::size_t nonfree_integral = 0;
  std::size_t nonfree_nonintegral = 0;
  std::vector<std::string> counterexamples;  // graph6 of graphs where the two sides differ
};

inline ConjectureRow conjecture_row(const Graph& g, ChiEngine engine = ChiEngine::kLattice) {
  ConjectureRow row;
  row.graph6 = to_graph6(g);
  row.n = g.n();
  row.edges = g.edge_count();
  GraphFamily f = recognize_family(g);
  row.family = f.to_string();
  row.free = f.kind != GraphFamily::Kind::kOther;
  Arrangement a = csa_from_graph(g);
  row.charpoly = engine == ChiEngine::kLattice ? charpoly_lattice(a) : charpoly_delres(a);
  row.integral = integer_roots(row.charpoly).remainder.degree() <= 0;
  return row;
}

inline ConjectureReport summarize_conjecture(std::vector<ConjectureRow> rows) {
  ConjectureReport rep;
  rep.rows = std::move(rows);
  for (const auto& r : rep.rows) {
    if (r.free && r.integral) ++rep.free_integral;
    if (r.free && !r.integral) ++rep.free_nonintegral;
    if (!r.free && r.integral) ++rep.nonfree_integral;
    if (!r.free && !r.integral) ++rep.nonfree_nonintegral;
    if (r.free != r.integral) rep.counterexamples.push_back(r.graph6);
  }
  return rep;
}

/// Free versus integral-roots table over all connected graphs up to max_n
/// vertices. Reports disagreements; asserts nothing.
inline ConjectureReport integral_roots_vs_free_scan(int max_n, ChiEngine engine = ChiEngine::kDelRes) {
  if (max_n > 7) throw Error(ErrorCode::kResourceCap, "conjecture scan is limited to 7 vertices");
  std::vector<ConjectureRow> rows;
  for (const Graph& g : connected_graphs_up_to(max_n)) rows.push_back(conjecture_row(g, engine));
  return summarize_conjecture(std::move(rows));
}

}  // namespace csa
