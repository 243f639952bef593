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

// Intersection lattices and the three characteristic polynomial engines:
// Moebius sums over the lattice, memoised deletion-restriction, and point
// counting over prime fields followed by interpolation.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "csa/arrangement.hpp"
#include "csa/common.hpp"
#include "csa/int_linalg.hpp"
#include "csa/polynomial.hpp"

namespace csa {

inline constexpr std::size_t kDefaultMaxFlats = 4'000'000;

/// Flats grouped by codimension, with member sets and Moebius values.
/// Flat 0 is the ambient space.
class IntersectionLattice {
 public:
  int dim() const { return dim_; }
  std::size_t hyperplane_count() const { return hyperplanes_; }
  std::size_t size() const { return spaces_.size(); }
  int rank() const { return static_cast<int>(levels_.size()) - 1; }

  const std::vector<std::vector<int>>& levels() const { return levels_; }
  const std::vector<int>& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }

  const linalg::RowSpace& space(int x) const { return spaces_[static_cast<std::size_t>(x)]; }
  int codim(int x) const { return codim_[static_cast<std::size_t>(x)]; }
  std::int64_t mobius(int x) const { return mobius_[static_cast<std::size_t>(x)]; }

  bool is_member(int x, std::size_t h) const { return (word(x, h / 64) >> (h % 64)) & 1U; }

  HyperplaneSet members(int x) const {
    HyperplaneSet s(hyperplanes_);
    for (std::size_t h = 0; h < hyperplanes_; ++h) {
      if (is_member(x, h)) s.set(h);
    }
    return s;
  }

  std::size_t member_count(int x) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(word(x, w)));
    return c;
  }

  /// x <= y in the lattice order: the subspace of x contains that of y.
  bool below(int x, int y) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if ((word(x, w) & ~word(y, w)) != 0) return false;
    }
    return true;
  }

  std::optional<int> find(const linalg::RowSpace& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Flat flat(int x) const { return Flat{space(x), members(x)}; }

  /// Number of flats per codimension.
  std::vector<std::size_t> level_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& l : levels_) out.push_back(l.size());
    return out;
  }

  friend IntersectionLattice build_lattice(const Arrangement& a, std::size_t max_flats);

 private:
  std::uint64_t word(int x, std::size_t w) const { return bits_[static_cast<std::size_t>(x) * words_ + w]; }

  int dim_ = 0;
  std::size_t hyperplanes_ = 0;
  std::size_t words_ = 0;
  std::vector<linalg::RowSpace> spaces_;
  std::vector<int> codim_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::int64_t> mobius_;
  std::vector<std::vector<int>> levels_;
  std::unordered_map<linalg::RowSpace, int, linalg::RowSpaceHash> index_;
};

/// Builds every flat level by level: each codim-k flat is joined with each
/// hyperplane not containing it, and new subspaces are deduplicated by
/// canonical row-space form. Throws kResourceCap beyond max_flats.
inline IntersectionLattice build_lattice(const Arrangement& a, std::size_t max_flats = kDefaultMaxFlats) {
  IntersectionLattice L;
  L.dim_ = a.dim();
  L.hyperplanes_ = a.size();
  L.words_ = std::max<std::size_t>(1, (a.size() + 63) / 64);
  const std::size_t W = L.words_;

  auto add_flat = [&](linalg::RowSpace space) -> int {
    int id = static_cast<int>(L.spaces_.size());
    if (L.spaces_.size() >= max_flats) {
      throw Error(ErrorCode::kResourceCap, "intersection lattice exceeds " + std::to_string(max_flats) + " flats");
    }
    L.codim_.push_back(space.rank());
    L.bits_.resize(L.bits_.size() + W, 0);
    std::uint64_t* row = &L.bits_[static_cast<std::size_t>(id) * W];
    for (std::size_t h = 0; h < a.size(); ++h) {
      if (space.contains(a.normal(h).coefficients())) row[h / 64] |= std::uint64_t{1} << (h % 64);
    }
    L.index_.emplace(space, id);
    L.spaces_.push_back(std::move(space));
    return id;
  };

  add_flat(linalg::RowSpace(a.dim()));
  L.levels_.push_back({0});
  while (true) {
    std::vector<int> next;
    for (int x : L.levels_.back()) {
      std::vector<std::uint64_t> covered(L.bits_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(x) * W),
                                         L.bits_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(x + 1) * W));
      for (std::size_t h = 0; h < a.size(); ++h) {
        if ((covered[h / 64] >> (h % 64)) & 1U) continue;
        linalg::RowSpace s = L.spaces_[static_cast<std::size_t>(x)];
        s.add(a.normal(h).coefficients());
        int y;
        auto it = L.index_.find(s);
        if (it == L.index_.end()) {
          y = add_flat(std::move(s));
          next.push_back(y);
        } else {
          y = it->second;
        }
        for (std::size_t w = 0; w < W; ++w) covered[w] |= L.word(y, w);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    L.levels_.push_back(std::move(next));
  }

  // mu(V) = 1 and mu(X) = -sum of mu(Y) over Y strictly below X.
  L.mobius_.assign(L.spaces_.size(), 0);
  L.mobius_[0] = 1;
  for (std::size_t k = 1; k < L.levels_.size(); ++k) {
    for (int x : L.levels_[k]) {
      std::int64_t sum = 1;
      for (std::size_t j = 1; j < k; ++j) {
        for (int y : L.levels_[j]) {
          if (L.below(y, x)) sum = detail::checked_add(sum, L.mobius_[static_cast<std::size_t>(y)]);
        }
      }
      if (k == 1) sum = 1;
      L.mobius_[static_cast<std::size_t>(x)] = -sum;
    }
  }
  return L;
}

/// sum over flats of mu(X) t^{dim X}.
inline IntPolynomial charpoly_lattice(const IntersectionLattice& L) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(L.dim()) + 1, 0);
  for (std::size_t x = 0; x < L.size(); ++x) {
    auto& slot = c[static_cast<std::size_t>(L.dim() - L.codim(static_cast<int>(x)))];
    slot = detail::checked_add(slot, L.mobius(static_cast<int>(x)));
  }
  return IntPolynomial(std::move(c));
}

inline IntPolynomial charpoly_lattice(const Arrangement& a, std::size_t max_flats = kDefaultMaxFlats) {
  return charpoly_lattice(build_lattice(a, max_flats));
}

/// mu(X) is nonzero with sign (-1)^codim X for every flat.
inline bool mobius_signs_alternate(const IntersectionLattice& L) {
  for (std::size_t x = 0; x < L.size(); ++x) {
    const std::int64_t m = L.mobius(static_cast<int>(x));
    if (m == 0 || (m > 0) != (L.codim(static_cast<int>(x)) % 2 == 0)) return false;
  }
  return true;
}

namespace detail {

struct ArrangementKeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = v.size();
    for (std::int64_t x : v) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

inline std::vector<std::int64_t> arrangement_key(const Arrangement& a) {
  std::vector<std::int64_t> k;
  k.reserve(1 + a.size() * static_cast<std::size_t>(a.dim()));
  k.push_back(a.dim());
  for (const auto& n : a.normals()) k.insert(k.end(), n.coefficients().begin(), n.coefficients().end());
  return k;
}

class DelResEngine {
 public:
  IntPolynomial chi(const Arrangement& a) {
    const int d = a.dim();
    if (a.empty()) return IntPolynomial::monomial(d);
    const int r = rank(a);
    if (static_cast<std::size_t>(r) == a.size()) return independent(d, r);
    auto key = arrangement_key(a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // Peel off hyperplanes in canonical order until the rest is independent:
    // chi(A) = chi(A_j) - sum_i chi(A_{i-1}^{H_i}), A_i = A minus H_1..H_i.
    IntPolynomial result;
    Arrangement cur = a;
    while (true) {
      const int cr = rank(cur);
      if (cur.empty() || static_cast<std::size_t>(cr) == cur.size()) {
        result = result + (cur.empty() ? IntPolynomial::monomial(d) : independent(d, cr));
        break;
      }
      result = result - chi(restrict_to(cur, 0));
      cur = delete_hyperplane(cur, 0);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  static IntPolynomial independent(int d, int m) {
    IntPolynomial p = IntPolynomial::monomial(d - m);
    for (int i = 0; i < m; ++i) p = p * IntPolynomial({-1, 1});
    return p;
  }

  std::unordered_map<std::vector<std::int64_t>, IntPolynomial, ArrangementKeyHash> memo_;
};

}  // namespace detail

/// chi(A) = chi(A \ H) - chi(A^H), always splitting on the first hyperplane in
/// canonical order, memoised on canonical arrangement form.
inline IntPolynomial charpoly_delres(const Arrangement& a) {
  detail::DelResEngine engine;
  return engine.chi(a);
}

/// chi(A) by a single deletion-restriction step at hyperplane h, with both
/// sides computed by the lattice engine.
inline IntPolynomial charpoly_split_at(const Arrangement& a, std::size_t h) {
  return charpoly_lattice(delete_hyperplane(a, h)) - charpoly_lattice(restrict_to(a, h));
}

inline constexpr int kDefaultFiniteFieldMaxDim = 5;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

inline std::int64_t mod(std::int64_t a, std::int64_t q) {
  std::int64_t r = a % q;
  return r < 0 ? r + q : r;
}

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t q) {
  std::int64_t r = 1 % q;
  b = mod(b, q);
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % q);
    b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % q);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Upper bound ceil(d^{d/2} * M^d) on the absolute value of every minor of a
/// d-column matrix with entries bounded by M.
inline std::int64_t hadamard_bound(int d, std::int64_t max_entry) {
  if (d == 0) return 1;
  __int128 dd = 1;
  for (int i = 0; i < d; ++i) dd *= d;
  __int128 s = 0;
  while (s * s < dd) ++s;
  __int128 b = s;
  for (int i = 0; i < d; ++i) {
    b *= std::max<std::int64_t>(1, max_entry);
    if (b > (static_cast<__int128>(1) << 40)) throw Error(ErrorCode::kOverflow, "Hadamard bound too large for point counting");
  }
  return static_cast<std::int64_t>(b);
}

/// d+1 consecutive primes above the Hadamard bound of the normal matrix.
inline std::vector<std::int64_t> good_primes(const Arrangement& a) {
  std::int64_t p = hadamard_bound(a.dim(), a.max_abs_entry());
  std::vector<std::int64_t> out;
  while (static_cast<int>(out.size()) < a.dim() + 1) {
    ++p;
    if (detail::is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
  }
  return out;
}

/// Number of points of F_q^d lying on no hyperplane. The complement is
/// stable under scaling, so only points whose first nonzero coordinate is 1
/// are visited; for each such prefix x_1..x_{d-1} the last coordinate is
/// counted directly, since every normal with nonzero last entry forbids
/// exactly one value.
inline std::int64_t count_complement_points(const Arrangement& a, std::int64_t q) {
  const int d = a.dim();
  if (d == 0) return 1;
  if (a.empty()) {
    std::int64_t r = 1;
    for (int i = 0; i < d; ++i) r = detail::checked_mul(r, q);
    return r;
  }
  std::vector<IntVector> red;
  for (const auto& n : a.normals()) {
    IntVector v(n.coefficients().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = detail::mod(n[i], q);
    red.push_back(std::move(v));
  }
  const std::size_t last = static_cast<std::size_t>(d - 1);
  std::vector<std::size_t> head;  // last entry zero
  std::vector<std::size_t> tail;  // last entry nonzero
  std::vector<std::int64_t> inv_last(red.size(), 0);
  for (std::size_t i = 0; i < red.size(); ++i) {
    if (red[i][last] == 0) {
      head.push_back(i);
    } else {
      tail.push_back(i);
      inv_last[i] = detail::pow_mod(red[i][last], q - 2, q);
    }
  }
  // Point (0,...,0,1): survives iff every normal has nonzero last entry.
  std::int64_t normalized = head.empty() ? 1 : 0;
  std::vector<std::uint32_t> stamp(static_cast<std::size_t>(q), 0);
  std::uint32_t epoch = 0;
  std::vector<std::int64_t> x(last, 0);
  for (std::size_t p = 0; p < last; ++p) {
    std::fill(x.begin(), x.end(), 0);
    x[p] = 1;
    std::int64_t combos = 1;
    for (std::size_t i = p + 1; i < last; ++i) combos *= q;
    for (std::int64_t idx = 0; idx < combos; ++idx) {
      std::int64_t rem = idx;
      for (std::size_t i = p + 1; i < last; ++i) {
        x[i] = rem % q;
        rem /= q;
      }
      bool dead = false;
      for (std::size_t i : head) {
        std::int64_t s = 0;
        for (std::size_t j = p; j < last; ++j) s += red[i][j] * x[j];
        if (s % q == 0) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      ++epoch;
      std::int64_t forbidden = 0;
      for (std::size_t i : tail) {
        std::int64_t s = 0;
        for (std::size_t j = p; j < last; ++j) s += red[i][j] * x[j];
        std::int64_t y = static_cast<std::int64_t>(static_cast<__int128>(detail::mod(-s, q)) * inv_last[i] % q);
        if (stamp[static_cast<std::size_t>(y)] != epoch) {
          stamp[static_cast<std::size_t>(y)] = epoch;
          ++forbidden;
        }
      }
      normalized += q - forbidden;
    }
  }
  return detail::checked_mul(normalized, q - 1);
}

/// chi via point counts at d+1 good primes and exact Newton interpolation.
/// Throws kDimensionTooLarge when a.dim() exceeds max_dim.
inline IntPolynomial charpoly_finite_field(const Arrangement& a, int max_dim = kDefaultFiniteFieldMaxDim) {
  const int d = a.dim();
  if (d > max_dim) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "finite-field engine capped at dimension " + std::to_string(max_dim) + ", got " + std::to_string(d));
  }
  std::vector<std::int64_t> qs = good_primes(a);
  std::vector<__int128> xs(qs.begin(), qs.end());
  std::vector<__int128> coef;
  for (std::int64_t q : qs) coef.push_back(count_complement_points(a, q));
  // Divided differences.
  const std::size_t m = xs.size();
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = m - 1; i >= j; --i) {
      __int128 num = coef[i] - coef[i - 1];
      __int128 den = xs[i] - xs[i - j];
      if (num % den != 0) throw Error(ErrorCode::kUnverified, "point counts are not polynomial in q");
      coef[i] = num / den;
    }
  }
  // Expand Newton form into monomial coefficients.
  std::vector<__int128> poly{coef[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    std::vector<__int128> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[i];
    }
    next[0] += coef[i];
    poly = std::move(next);
  }
  std::vector<std::int64_t> out;
  for (auto c : poly) out.push_back(detail::narrow(c));
  return IntPolynomial(std::move(out));
}

/// Chamber count (-1)^d chi(A, -1).
inline std::int64_t chambers(const IntPolynomial& chi, int dim) {
  std::int64_t v = chi.evaluate(-1);
  return (dim % 2 == 0) ? v : -v;
}

inline std::int64_t chambers(const Arrangement& a) { return chambers(charpoly_lattice(a), a.dim()); }

}  // namespace csa
