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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "csa/arrangement.hpp"
#include "csa/common.hpp"
#include "csa/graph.hpp"

namespace csa {

using Exponents = std::vector<std::int64_t>;

/// Set form: one of the three sets is the disjoint union of the other two.
inline bool is_circuit_triple(VertexSet a, VertexSet b, VertexSet c) {
  auto du = [](VertexSet x, VertexSet y, VertexSet z) { return (x & y) == 0 && (x | y) == z; };
  return du(a, b, c) || du(a, c, b) || du(b, c, a);
}

/// Rank form: the three 0/1 normals span a plane.
inline bool is_circuit_triple_by_rank(int dim, VertexSet a, VertexSet b, VertexSet c) {
  IntMatrix m{Normal::from_subset(dim, a).coefficients(), Normal::from_subset(dim, b).coefficients(),
              Normal::from_subset(dim, c).coefficients()};
  return linalg::rank(m) == 2;
}

/// Number of circuit triples {A, B, I} with A, B among the sets of a.
/// Equals |a| - |(a + H_I)^{H_I}|.
inline std::int64_t triple_count(const Arrangement& a, VertexSet I) {
  if (!a.is_01()) throw Error(ErrorCode::kInvalidArgument, "triple_count needs a 0/1 arrangement");
  if (a.index_of_subset(I)) throw Error(ErrorCode::kAlreadyPresent, "H_" + set_to_string(I) + " is already present");
  std::unordered_set<VertexSet> present(a.subsets().begin(), a.subsets().end());
  std::int64_t inside = 0;
  std::int64_t outside = 0;
  for (VertexSet s : a.subsets()) {
    if ((s & ~I) == 0 && s != I && present.count(I & ~s)) ++inside;
    if ((s & I) == 0 && present.count(s | I)) ++outside;
  }
  return inside / 2 + outside;
}

/// |a| - |(a + H)^H| computed by restricting.
inline std::int64_t restriction_drop(const Arrangement& a, const Normal& h) {
  if (a.contains(h)) throw Error(ErrorCode::kAlreadyPresent, "hyperplane " + h.to_string() + " is already present");
  Arrangement plus = add_hyperplanes(a, {h});
  std::size_t idx = *plus.index_of(h);
  return static_cast<std::int64_t>(a.size()) - static_cast<std::int64_t>(restrict_to(plus, idx).size());
}

/// Conjugate partition; the k-th part counts parts >= k. Output descending.
inline std::vector<std::int64_t> dual_partition(std::vector<std::int64_t> p) {
  for (auto x : p) {
    if (x < 0) throw Error(ErrorCode::kInvalidArgument, "negative part in partition");
  }
  std::int64_t top = p.empty() ? 0 : *std::max_element(p.begin(), p.end());
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= top; ++k) {
    out.push_back(static_cast<std::int64_t>(std::count_if(p.begin(), p.end(), [k](std::int64_t x) { return x >= k; })));
  }
  return out;
}

struct MatStepReport {
  bool ok = false;
  int failed_condition = 0;  // 0 none; 1 codimension; 2 containment; 3 restriction count; 4 q > p
  int codim = 0;
  std::int64_t d = 0;  // top exponent of the prefix
  int p = 0;           // multiplicity of d
  std::vector<std::int64_t> drops;  // |prefix| - |restriction| per batch hyperplane
  std::string message;
};

/// Checks the three Multiple Addition Theorem conditions for adding batch to
/// a free prefix with the given exponents.
inline MatStepReport mat_step_check(const Arrangement& prefix, const std::vector<Normal>& batch,
                                    const Exponents& prefix_exponents) {
  MatStepReport r;
  if (static_cast<int>(prefix_exponents.size()) != prefix.dim()) {
    throw Error(ErrorCode::kInvalidArgument, "exponent count must equal the dimension");
  }
  if (batch.empty()) throw Error(ErrorCode::kInvalidArgument, "empty MAT batch");
  Exponents e = prefix_exponents;
  std::sort(e.begin(), e.end());
  r.d = e.empty() ? 0 : e.back();
  r.p = static_cast<int>(std::count(e.begin(), e.end(), r.d));
  for (const auto& h : batch) {
    if (prefix.contains(h)) throw Error(ErrorCode::kAlreadyPresent, "batch hyperplane " + h.to_string() + " is in the prefix");
  }
  linalg::RowSpace span(prefix.dim());
  for (const auto& h : batch) span.add(h.coefficients());
  r.codim = span.rank();
  if (r.codim != static_cast<int>(batch.size())) {
    r.failed_condition = 1;
    r.message = "batch normals are dependent: codim " + std::to_string(r.codim) + " < " + std::to_string(batch.size());
    return r;
  }
  for (const auto& n : prefix.normals()) {
    if (span.contains(n.coefficients())) {
      r.failed_condition = 2;
      r.message = "intersection of the batch lies in prefix hyperplane " + n.to_string();
      return r;
    }
  }
  for (const auto& h : batch) {
    std::int64_t drop = (prefix.is_01() && h.is_01()) ? triple_count(prefix, h.support()) : restriction_drop(prefix, h);
    r.drops.push_back(drop);
    if (drop != r.d && r.failed_condition == 0) {
      r.failed_condition = 3;
      r.message = "restriction to " + h.to_string() + " drops " + std::to_string(drop) + ", expected " + std::to_string(r.d);
    }
  }
  if (r.failed_condition != 0) return r;
  if (static_cast<int>(batch.size()) > r.p) {
    r.failed_condition = 4;
    r.message = "batch larger than the multiplicity of the top exponent";
    return r;
  }
  r.ok = true;
  return r;
}

/// Exponents after a successful MAT step: the q largest become d + 1.
inline Exponents mat_update(Exponents e, std::size_t q) {
  std::sort(e.begin(), e.end());
  for (std::size_t i = e.size() - q; i < e.size(); ++i) e[i] += 1;
  std::sort(e.begin(), e.end());
  return e;
}

/// Filtration of an arrangement by hyperplane batches.
struct MatChain {
  int dim = 0;
  std::vector<std::vector<Normal>> batches;
  bool verified = false;
  std::vector<MatStepReport> steps;
  Exponents exponents;  // valid when verified

  std::vector<std::size_t> batch_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& b : batches) out.push_back(b.size());
    return out;
  }
};

struct MatChainResult {
  MatChain chain;
  bool ok = false;
  int failed_level = -1;  // index of the first failing batch
  std::string message;
};

/// Replays every MAT step from the empty arrangement.
inline MatChainResult verify_mat_chain(MatChain chain) {
  MatChainResult res;
  chain.verified = false;
  chain.steps.clear();
  Exponents e(static_cast<std::size_t>(chain.dim), 0);
  Arrangement prefix(chain.dim);
  for (std::size_t i = 0; i < chain.batches.size(); ++i) {
    MatStepReport step = mat_step_check(prefix, chain.batches[i], e);
    chain.steps.push_back(step);
    if (!step.ok) {
      res.failed_level = static_cast<int>(i);
      res.message = "level " + std::to_string(i + 1) + ": " + step.message;
      res.chain = std::move(chain);
      return res;
    }
    e = mat_update(std::move(e), chain.batches[i].size());
    prefix = add_hyperplanes(prefix, chain.batches[i]);
  }
  chain.verified = true;
  chain.exponents = e;
  res.ok = true;
  res.chain = std::move(chain);
  return res;
}

/// Batches by subset cardinality: batch i holds the H_I with |I| = i.
inline MatChain cardinality_filtration(const Arrangement& a) {
  if (!a.is_01()) throw Error(ErrorCode::kInvalidArgument, "cardinality filtration needs a 0/1 arrangement");
  std::map<int, std::vector<Normal>> by_size;
  for (std::size_t i = 0; i < a.size(); ++i) by_size[set_size(a.subset(i))].push_back(a.normal(i));
  MatChain chain;
  chain.dim = a.dim();
  for (auto& [size, batch] : by_size) {
    std::sort(batch.begin(), batch.end(), [](const Normal& x, const Normal& y) {
      return subset_order_less(x.support(), y.support());
    });
    chain.batches.push_back(std::move(batch));
  }
  return chain;
}

inline MatChainResult mat_chain_cardinality(const Graph& g) { return verify_mat_chain(cardinality_filtration(csa_from_graph(g))); }

inline Exponents exponents_from_chain(const MatChain& chain) {
  if (!chain.verified) throw Error(ErrorCode::kUnverified, "exponents requested from an unverified chain");
  MatChainResult again = verify_mat_chain(chain);
  if (!again.ok) throw Error(ErrorCode::kUnverified, "chain fails verification: " + again.message);
  return again.chain.exponents;
}

}  // namespace csa
