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

// Exact integer linear algebra on small dense matrices. Everything here is
// fraction-free: rows are kept primitive after every elimination step so the
// entries stay as small as the input allows.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "csa/common.hpp"

namespace csa {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

namespace linalg {

inline std::int64_t content(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x);
  return g;
}

inline bool is_zero(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

/// Divides out the content. The zero vector is returned unchanged.
inline void make_primitive(IntVector& v) {
  std::int64_t g = content(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

/// Primitive, with the first nonzero entry positive.
inline void canonicalize_sign(IntVector& v) {
  make_primitive(v);
  for (std::int64_t x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    return;
  }
}

inline std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return detail::narrow(s);
}

/// Sets target <- target * a - source * b, then makes it primitive.
inline void eliminate(IntVector& target, const IntVector& source, std::int64_t a, std::int64_t b) {
  for (std::size_t j = 0; j < target.size(); ++j) {
    __int128 v = static_cast<__int128>(target[j]) * a - static_cast<__int128>(source[j]) * b;
    target[j] = detail::narrow(v);
  }
  make_primitive(target);
}

inline int first_nonzero(std::span<const std::int64_t> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

/// Row space of a set of integer vectors in canonical form: reduced row
/// echelon form over Q, each row scaled to a primitive integer vector with a
/// positive pivot, rows ordered by pivot column. Two RowSpaces compare equal
/// iff they span the same rational subspace.
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(int dim) : dim_(dim) {}

  RowSpace(int dim, const IntMatrix& generators) : dim_(dim) {
    for (const auto& g : generators) add(g);
  }

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const IntMatrix& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Residual of v after reduction against the basis; zero iff v is in the span.
  IntVector reduce(IntVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::int64_t x = v[static_cast<std::size_t>(pivots_[i])];
      if (x == 0) continue;
      std::int64_t p = rows_[i][static_cast<std::size_t>(pivots_[i])];
      std::int64_t g = std::gcd(p, x);
      eliminate(v, rows_[i], p / g, x / g);
    }
    return v;
  }

  bool contains(const IntVector& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span; returns true iff the rank grew.
  bool add(const IntVector& v) {
    if (static_cast<int>(v.size()) != dim_) throw Error(ErrorCode::kInvalidArgument, "row length mismatch");
    IntVector r = reduce(v);
    int piv = first_nonzero(r);
    if (piv < 0) return false;
    if (r[static_cast<std::size_t>(piv)] < 0) {
      for (auto& x : r) x = -x;
    }
    for (auto& row : rows_) {
      std::int64_t x = row[static_cast<std::size_t>(piv)];
      if (x == 0) continue;
      std::int64_t p = r[static_cast<std::size_t>(piv)];
      std::int64_t g = std::gcd(p, x);
      eliminate(row, r, p / g, x / g);
      int rp = first_nonzero(row);
      if (row[static_cast<std::size_t>(rp)] < 0) {
        for (auto& y : row) y = -y;
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
  }

  bool operator==(const RowSpace& other) const { return dim_ == other.dim_ && rows_ == other.rows_; }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(dim_) * 0x9e3779b97f4a7c15ULL;
    for (const auto& row : rows_) {
      for (std::int64_t x : row) {
        h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
    }
    return h;
  }

  /// Intersection dimension of two row spaces in the same ambient space.
  int intersection_rank(const RowSpace& other) const {
    RowSpace sum = *this;
    for (const auto& r : other.rows_) sum.add(r);
    return rank() + other.rank() - sum.rank();
  }

 private:
  int dim_ = 0;
  IntMatrix rows_;
  std::vector<int> pivots_;
};

struct RowSpaceHash {
  std::size_t operator()(const RowSpace& r) const { return r.hash(); }
};

/// Rank over Q of the given rows.
inline int rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  RowSpace space(static_cast<int>(rows.front().size()));
  for (const auto& r : rows) space.add(r);
  return space.rank();
}

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

/// Row-style Hermite normal form of an integer matrix: upper echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
/// The result depends only on the integer row lattice.
inline IntMatrix hermite_normal_form(IntMatrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    // Euclid on column c among rows r..end.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        if (best == m.size() || std::llabs(m[i][c]) < std::llabs(m[best][c])) best = i;
      }
      if (best == m.size()) break;
      swap_rows(m, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        std::int64_t q = m[i][c] / m[r][c];
        for (std::size_t j = 0; j < cols; ++j) {
          m[i][j] = detail::checked_sub(m[i][j], detail::checked_mul(q, m[r][j]));
        }
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= m.size() || m[r][c] == 0) continue;
    if (m[r][c] < 0) {
      for (auto& x : m[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t p = m[r][c];
      std::int64_t q = m[i][c] / p;
      if (m[i][c] - q * p < 0) --q;
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = detail::checked_sub(m[i][j], detail::checked_mul(q, m[r][j]));
      }
    }
    ++r;
  }
  m.resize(r);
  return m;
}

/// Basis of the integer lattice {x in Z^d : rows * x = 0}, in Hermite normal
/// form. Computed by unimodular column operations on [rows; I].
inline IntMatrix integer_kernel_basis(const IntMatrix& rows, int dim) {
  const std::size_t d = static_cast<std::size_t>(dim);
  const std::size_t r = rows.size();
  // columns[j] = (rows column j, identity column j)
  std::vector<IntVector> columns(d, IntVector(r + d, 0));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < r; ++i) columns[j][i] = rows[i][j];
    columns[j][r + j] = 1;
  }
  std::size_t first_free = 0;
  for (std::size_t i = 0; i < r && first_free < d; ++i) {
    while (true) {
      std::size_t best = d;
      for (std::size_t j = first_free; j < d; ++j) {
        if (columns[j][i] == 0) continue;
        if (best == d || std::llabs(columns[j][i]) < std::llabs(columns[best][i])) best = j;
      }
      if (best == d) break;
      std::swap(columns[first_free], columns[best]);
      bool done = true;
      for (std::size_t j = first_free + 1; j < d; ++j) {
        if (columns[j][i] == 0) continue;
        std::int64_t q = columns[j][i] / columns[first_free][i];
        for (std::size_t k = 0; k < r + d; ++k) {
          columns[j][k] = detail::checked_sub(columns[j][k], detail::checked_mul(q, columns[first_free][k]));
        }
        if (columns[j][i] != 0) done = false;
      }
      if (done) {
        ++first_free;
        break;
      }
    }
  }
  IntMatrix basis;
  for (std::size_t j = first_free; j < d; ++j) {
    basis.emplace_back(columns[j].begin() + static_cast<std::ptrdiff_t>(r), columns[j].end());
  }
  return hermite_normal_form(std::move(basis));
}

}  // namespace linalg
}  // namespace csa
