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
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csa/common.hpp"
#include "csa/graph.hpp"
#include "csa/int_linalg.hpp"

namespace csa {

/// Normal vector of a linear hyperplane: nonzero, primitive, first nonzero
/// entry positive. Two hyperplanes coincide iff their Normals are equal.
class Normal {
 public:
  Normal() = default;

  explicit Normal(IntVector coefficients) : c_(std::move(coefficients)) {
    if (linalg::is_zero(c_)) throw Error(ErrorCode::kInvalidArgument, "zero normal vector");
    linalg::canonicalize_sign(c_);
  }

  /// The 0/1 normal sum_{i in s} x_i in dimension dim.
  static Normal from_subset(int dim, VertexSet s) {
    if (s == 0) throw Error(ErrorCode::kEmptySubset, "normal of the empty set");
    if ((s & ~full_set(dim)) != 0) throw Error(ErrorCode::kOutOfRange, "subset exceeds dimension");
    IntVector v(static_cast<std::size_t>(dim), 0);
    for (int i : set_elements(s)) v[static_cast<std::size_t>(i - 1)] = 1;
    return Normal(std::move(v));
  }

  int dim() const { return static_cast<int>(c_.size()); }
  const IntVector& coefficients() const { return c_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }

  bool is_01() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0 || x == 1; });
  }

  /// Support as a vertex set; meaningful for 0/1 normals.
  VertexSet support() const {
    VertexSet s = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) s |= vertex_bit(static_cast<int>(i) + 1);
    }
    return s;
  }

  std::int64_t max_abs() const {
    std::int64_t m = 0;
    for (std::int64_t x : c_) m = std::max(m, x < 0 ? -x : x);
    return m;
  }

  auto operator<=>(const Normal&) const = default;
  bool operator==(const Normal&) const = default;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c_[i]);
    }
    return out + ")";
  }

 private:
  IntVector c_;
};

/// Dynamic bit set over hyperplane indices.
class HyperplaneSet {
 public:
  HyperplaneSet() = default;
  explicit HyperplaneSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const HyperplaneSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

  HyperplaneSet operator&(const HyperplaneSet& o) const {
    HyperplaneSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t x = words_[w]; x != 0; x &= x - 1) out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  bool operator==(const HyperplaneSet&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Finite set of linear hyperplanes in Q^dim, kept sorted by canonical normal.
class Arrangement {
 public:
  Arrangement() = default;
  explicit Arrangement(int dim) : dim_(dim) {
    if (dim < 0) throw Error(ErrorCode::kInvalidArgument, "negative dimension");
  }

  Arrangement(int dim, std::vector<Normal> normals) : dim_(dim), normals_(std::move(normals)) {
    for (const auto& n : normals_) {
      if (n.dim() != dim_) throw Error(ErrorCode::kInvalidArgument, "normal " + n.to_string() + " has wrong length");
    }
    std::sort(normals_.begin(), normals_.end());
    normals_.erase(std::unique(normals_.begin(), normals_.end()), normals_.end());
    refresh();
  }

  int dim() const { return dim_; }
  std::size_t size() const { return normals_.size(); }
  bool empty() const { return normals_.empty(); }
  const std::vector<Normal>& normals() const { return normals_; }
  const Normal& normal(std::size_t i) const { return normals_.at(i); }

  /// True iff every normal has entries in {0, 1}.
  bool is_01() const { return is_01_; }

  /// Support sets of the normals; only meaningful when is_01().
  const std::vector<VertexSet>& subsets() const { return subsets_; }
  VertexSet subset(std::size_t i) const { return subsets_.at(i); }

  std::optional<std::size_t> index_of(const Normal& n) const {
    auto it = std::lower_bound(normals_.begin(), normals_.end(), n);
    if (it == normals_.end() || *it != n) return std::nullopt;
    return static_cast<std::size_t>(it - normals_.begin());
  }

  std::optional<std::size_t> index_of_subset(VertexSet s) const {
    if (s == 0 || (s & ~full_set(dim_)) != 0) return std::nullopt;
    return index_of(Normal::from_subset(dim_, s));
  }

  bool contains(const Normal& n) const { return index_of(n).has_value(); }

  IntMatrix matrix() const {
    IntMatrix m;
    m.reserve(normals_.size());
    for (const auto& n : normals_) m.push_back(n.coefficients());
    return m;
  }

  std::int64_t max_abs_entry() const {
    std::int64_t m = 0;
    for (const auto& n : normals_) m = std::max(m, n.max_abs());
    return m;
  }

  bool operator==(const Arrangement& o) const { return dim_ == o.dim_ && normals_ == o.normals_; }

 private:
  void refresh() {
    is_01_ = std::all_of(normals_.begin(), normals_.end(), [](const Normal& n) { return n.is_01(); });
    subsets_.clear();
    if (is_01_) {
      for (const auto& n : normals_) subsets_.push_back(n.support());
    }
  }

  int dim_ = 0;
  std::vector<Normal> normals_;
  bool is_01_ = true;
  std::vector<VertexSet> subsets_;
};

/// 0/1 arrangement with one hyperplane per given vertex set.
inline Arrangement arrangement_from_subsets(int dim, const std::vector<VertexSet>& subsets) {
  std::vector<Normal> normals;
  normals.reserve(subsets.size());
  for (VertexSet s : subsets) normals.push_back(Normal::from_subset(dim, s));
  return Arrangement(dim, std::move(normals));
}

/// Connected subgraph arrangement: ker sum_{i in I} x_i for every vertex set I
/// inducing a connected subgraph.
inline Arrangement csa_from_graph(const Graph& g) { return arrangement_from_subsets(g.n(), connected_subsets(g)); }

/// Rank over Q of the selected normals.
inline int rank(const Arrangement& a, const std::vector<int>& indices) {
  linalg::RowSpace space(a.dim());
  for (int i : indices) space.add(a.normal(static_cast<std::size_t>(i)).coefficients());
  return space.rank();
}

inline int rank(const Arrangement& a) {
  linalg::RowSpace space(a.dim());
  for (const auto& n : a.normals()) space.add(n.coefficients());
  return space.rank();
}

inline bool is_essential(const Arrangement& a) { return rank(a) == a.dim(); }

inline Arrangement delete_hyperplane(const Arrangement& a, std::size_t h) {
  if (h >= a.size()) throw Error(ErrorCode::kOutOfRange, "hyperplane index " + std::to_string(h));
  std::vector<Normal> rest = a.normals();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(h));
  return Arrangement(a.dim(), std::move(rest));
}

inline Arrangement add_hyperplanes(const Arrangement& a, const std::vector<Normal>& extra) {
  std::vector<Normal> all = a.normals();
  all.insert(all.end(), extra.begin(), extra.end());
  return Arrangement(a.dim(), std::move(all));
}

inline Arrangement subarrangement(const Arrangement& a, const std::vector<int>& indices) {
  std::vector<Normal> sel;
  sel.reserve(indices.size());
  for (int i : indices) sel.push_back(a.normal(static_cast<std::size_t>(i)));
  return Arrangement(a.dim(), std::move(sel));
}

/// Integer basis of the hyperplane ker(h), in Hermite normal form.
inline IntMatrix hyperplane_basis(const Normal& h) { return linalg::integer_kernel_basis({h.coefficients()}, h.dim()); }

/// Restriction A^H written in the coordinates of the given basis of H:
/// every other normal alpha becomes (alpha . b_1, ..., alpha . b_{d-1}),
/// canonicalised and deduplicated.
inline Arrangement restrict_with_basis(const Arrangement& a, std::size_t h, const IntMatrix& basis) {
  if (h >= a.size()) throw Error(ErrorCode::kOutOfRange, "hyperplane index " + std::to_string(h));
  const Normal& hn = a.normal(h);
  if (static_cast<int>(basis.size()) != a.dim() - 1 || linalg::rank(basis) != a.dim() - 1) {
    throw Error(ErrorCode::kInvalidArgument, "restriction basis must have d-1 independent rows");
  }
  for (const auto& b : basis) {
    if (linalg::dot(b, hn.coefficients()) != 0) throw Error(ErrorCode::kInvalidArgument, "basis vector not in the hyperplane");
  }
  std::vector<Normal> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == h) continue;
    IntVector v(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) v[j] = linalg::dot(a.normal(i).coefficients(), basis[j]);
    if (linalg::is_zero(v)) continue;
    out.emplace_back(std::move(v));
  }
  return Arrangement(a.dim() - 1, std::move(out));
}

/// Restriction A^H with the canonical (Hermite) basis of H. For a coordinate
/// hyperplane ker x_p this simply drops coordinate p.
inline Arrangement restrict_to(const Arrangement& a, std::size_t h) {
  if (h >= a.size()) throw Error(ErrorCode::kOutOfRange, "hyperplane index " + std::to_string(h));
  return restrict_with_basis(a, h, hyperplane_basis(a.normal(h)));
}

/// Intersection of hyperplanes, identified by the row space of their normals.
struct Flat {
  linalg::RowSpace space;
  HyperplaneSet members;

  int codim() const { return space.rank(); }
};

/// Members of a subspace: every hyperplane whose normal lies in the row space.
inline HyperplaneSet members_of(const Arrangement& a, const linalg::RowSpace& space) {
  HyperplaneSet m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (space.contains(a.normal(i).coefficients())) m.set(i);
  }
  return m;
}

/// The flat cut out by the selected hyperplanes, with its full member set.
inline Flat flat_of(const Arrangement& a, const std::vector<int>& indices) {
  linalg::RowSpace space(a.dim());
  for (int i : indices) space.add(a.normal(static_cast<std::size_t>(i)).coefficients());
  HyperplaneSet members = members_of(a, space);
  return Flat{std::move(space), std::move(members)};
}

/// Localisation A_X: all hyperplanes containing the flat.
inline Arrangement localize(const Arrangement& a, const Flat& x) {
  std::vector<Normal> sel;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (x.space.contains(a.normal(i).coefficients())) sel.push_back(a.normal(i));
  }
  return Arrangement(a.dim(), std::move(sel));
}

}  // namespace csa
