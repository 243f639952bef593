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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "csa/arrangement.hpp"
#include "csa/common.hpp"
#include "csa/graph.hpp"
#include "csa/int_linalg.hpp"

namespace csa {

/// Linear map on covectors. Row i is the image of x_{i+1}.
class LinearMap {
 public:
  LinearMap(int source_dim, int target_dim) : target_dim_(target_dim), rows_(static_cast<std::size_t>(source_dim), IntVector(static_cast<std::size_t>(target_dim), 0)) {}

  int source_dim() const { return static_cast<int>(rows_.size()); }
  int target_dim() const { return target_dim_; }
  const IntMatrix& matrix() const { return rows_; }

  /// Adds c * x_j to the image of x_i (1-based).
  void add(int i, int j, std::int64_t c) { rows_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)) += c; }

  IntVector apply(const IntVector& v) const {
    if (static_cast<int>(v.size()) != source_dim()) throw Error(ErrorCode::kInvalidArgument, "covector has the wrong dimension");
    IntVector out(static_cast<std::size_t>(target_dim_), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = detail::checked_add(out[j], detail::checked_mul(v[i], rows_[i][j]));
    }
    return out;
  }

  /// Image hyperplane; throws if the normal maps to zero.
  Normal apply(const Normal& n) const { return Normal(apply(n.coefficients())); }

  LinearMap then(const LinearMap& next) const {
    if (next.source_dim() != target_dim_) throw Error(ErrorCode::kInvalidArgument, "maps do not compose");
    LinearMap out(source_dim(), next.target_dim());
    for (std::size_t i = 0; i < rows_.size(); ++i) out.rows_[i] = next.apply(rows_[i]);
    return out;
  }

 private:
  int target_dim_;
  IntMatrix rows_;
};

/// Outcome of comparing the image of an arrangement with a target.
struct MapVerification {
  bool injective = false;  // distinct hyperplanes have distinct images
  bool onto = false;       // image set equals the target set
  std::string message;

  bool ok() const { return injective && onto; }
};

inline MapVerification verify_map(const LinearMap& f, const Arrangement& source, const Arrangement& target) {
  MapVerification v;
  if (f.source_dim() != source.dim() || f.target_dim() != target.dim()) throw Error(ErrorCode::kInvalidArgument, "map dimensions do not match");
  std::set<Normal> image;
  for (const auto& n : source.normals()) {
    IntVector w = f.apply(n.coefficients());
    if (linalg::is_zero(w)) {
      v.message = "normal " + n.to_string() + " maps to zero";
      return v;
    }
    image.insert(Normal(w));
  }
  v.injective = image.size() == source.size();
  std::set<Normal> goal(target.normals().begin(), target.normals().end());
  v.onto = image == goal;
  if (!v.injective) v.message = "two hyperplanes share an image";
  else if (!v.onto) v.message = "image differs from the target arrangement";
  return v;
}

/// Coned Shi arrangement in dimension n + 1: x_i - x_j, x_i - x_j - x_{n+1}
/// for i < j, and x_{n+1}.
inline Arrangement shi_cone(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "shi_cone needs n >= 2");
  const auto d = static_cast<std::size_t>(n + 1);
  std::vector<Normal> normals;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      IntVector v(d, 0);
      v[static_cast<std::size_t>(i - 1)] = 1;
      v[static_cast<std::size_t>(j - 1)] = -1;
      normals.emplace_back(v);
      v[d - 1] = -1;
      normals.emplace_back(v);
    }
  }
  IntVector last(d, 0);
  last[d - 1] = 1;
  normals.emplace_back(last);
  return Arrangement(n + 1, normals);
}

/// x_i -> x_{i+1} - x_i for i < n and x_n -> x_1 - x_n - x_{n+1}.
inline LinearMap cycle_embedding_map(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "cycle_embedding needs n >= 2");
  LinearMap f(n, n + 1);
  for (int i = 1; i < n; ++i) {
    f.add(i, i + 1, 1);
    f.add(i, i, -1);
  }
  f.add(n, 1, 1);
  f.add(n, n, -1);
  f.add(n, n + 1, -1);
  return f;
}

/// Sends the cycle arrangement A_{C_n} bijectively onto shi_cone(n).
inline MapVerification cycle_embedding(int n) {
  return verify_map(cycle_embedding_map(n), csa_from_graph(cycle_graph(n)), shi_cone(n));
}

/// Braid arrangement x_i - x_j, 1 <= i < j <= n + 1.
inline Arrangement braid_arrangement(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "braid_arrangement needs n >= 1");
  const auto d = static_cast<std::size_t>(n + 1);
  std::vector<Normal> normals;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      IntVector v(d, 0);
      v[i] = 1;
      v[j] = -1;
      normals.emplace_back(v);
    }
  }
  return Arrangement(n + 1, normals);
}

/// x_i -> x_i - x_{i+1}.
inline LinearMap braid_coordinates_map(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "braid_coordinates needs n >= 1");
  LinearMap f(n, n + 1);
  for (int i = 1; i <= n; ++i) {
    f.add(i, i, 1);
    f.add(i, i + 1, -1);
  }
  return f;
}

inline MapVerification braid_coordinates(int n) {
  return verify_map(braid_coordinates_map(n), csa_from_graph(path_graph(n)), braid_arrangement(n));
}

/// The involution of R^{n+1} exchanging ker(x_1 + ... + x_{n+1}) and ker x_k
/// on the almost path A_{n,k}.
inline LinearMap psi_map(int n, int k) {
  if (!(1 < k && k < n)) throw Error(ErrorCode::kInvalidArgument, "psi needs 1 < k < n");
  LinearMap f(n + 1, n + 1);
  for (int i = 1; i < k; ++i) f.add(i, k - i, -1);
  for (int j = 1; j <= n + 1; ++j) f.add(k, j, 1);
  for (int i = k + 1; i <= n; ++i) f.add(i, n + 1 - (i - k), -1);
  f.add(n + 1, n + 1, -1);
  return f;
}

struct PsiVerification {
  MapVerification permutes;     // normal set of A_{A_{n,k}} is invariant
  bool sum_to_xk = false;       // ker sum x_j goes to ker x_k
  bool fixes_last = false;      // ker x_{n+1} is fixed
  bool involution = false;      // psi twice is the identity

  bool ok() const { return permutes.ok() && sum_to_xk && fixes_last && involution; }
};

inline PsiVerification psi_automorphism(int n, int k) {
  LinearMap f = psi_map(n, k);
  Arrangement a = csa_from_graph(almost_path_graph(n, k));
  PsiVerification v;
  v.permutes = verify_map(f, a, a);
  const int d = n + 1;
  v.sum_to_xk = f.apply(Normal::from_subset(d, full_set(d))) == Normal::from_subset(d, vertex_bit(k));
  v.fixes_last = f.apply(Normal::from_subset(d, vertex_bit(d))) == Normal::from_subset(d, vertex_bit(d));
  LinearMap twice = f.then(f);
  v.involution = true;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) v.involution = v.involution && twice.matrix()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == (i == j ? 1 : 0);
  }
  return v;
}

/// Covector map from A_{G/e} into A_G for e = {i, j}, i < j: the merged
/// vertex i goes to x_i + x_j and the remaining labels to their old names.
inline LinearMap contraction_map(const Graph& g, Edge e) {
  auto [i, j] = e;
  if (i > j) std::swap(i, j);
  if (!g.has_edge(i, j)) throw Error(ErrorCode::kNotAnEdge, "{" + std::to_string(i) + "," + std::to_string(j) + "} is not an edge");
  LinearMap f(g.n() - 1, g.n());
  for (int v = 1; v < g.n(); ++v) f.add(v, v < j ? v : v + 1, 1);
  f.add(i, j, 1);
  return f;
}

/// Hyperplanes H_B of A_G with B containing both ends of e or neither.
inline std::vector<int> contraction_flat_members(const Graph& g, Edge e) {
  Arrangement a = csa_from_graph(g);
  const VertexSet ends = vertex_bit(e.first) | vertex_bit(e.second);
  std::vector<int> out;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (set_size(a.subset(h) & ends) != 1) out.push_back(static_cast<int>(h));
  }
  return out;
}

struct ContractionVerification {
  MapVerification onto_localization;  // A_{G/e} onto the listed hyperplanes
  bool closed = false;                // those hyperplanes are all of A_{X_e}

  bool ok() const { return onto_localization.ok() && closed; }
};

/// A_{G/e} is the localisation of A_G at X_e.
inline ContractionVerification contraction_embedding(const Graph& g, Edge e) {
  Arrangement a = csa_from_graph(g);
  std::vector<int> members = contraction_flat_members(g, e);
  Flat x = flat_of(a, members);
  ContractionVerification v;
  v.closed = static_cast<int>(x.members.count()) == static_cast<int>(members.size());
  v.onto_localization = verify_map(contraction_map(g, e), csa_from_graph(contract_edge(g, e)), subarrangement(a, members));
  return v;
}

/// Coordinates of the normals with respect to a basis of their row space.
inline Arrangement essentialize(const Arrangement& a) {
  IntMatrix basis = linalg::hermite_normal_form(a.matrix());
  std::erase_if(basis, [](const IntVector& row) { return linalg::is_zero(row); });
  const int r = static_cast<int>(basis.size());
  std::vector<int> pivots;
  for (const auto& row : basis) pivots.push_back(linalg::first_nonzero(row));
  std::vector<Normal> out;
  for (const auto& n : a.normals()) {
    // Echelon basis of the lattice spanned by the normals: coordinates are
    // integral and read off at the pivots.
    IntVector rest = n.coefficients();
    IntVector coords(static_cast<std::size_t>(r), 0);
    for (int b = 0; b < r; ++b) {
      const auto p = static_cast<std::size_t>(pivots[static_cast<std::size_t>(b)]);
      const std::int64_t lead = basis[static_cast<std::size_t>(b)][p];
      if (rest[p] % lead != 0) throw Error(ErrorCode::kUnverified, "normal is not an integer combination of the basis");
      const std::int64_t c = rest[p] / lead;
      coords[static_cast<std::size_t>(b)] = c;
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = detail::checked_sub(rest[j], detail::checked_mul(c, basis[static_cast<std::size_t>(b)][j]));
    }
    if (!linalg::is_zero(rest)) throw Error(ErrorCode::kUnverified, "normal lies outside the row space basis");
    out.emplace_back(coords);
  }
  return Arrangement(r, out);
}

}  // namespace csa
