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
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "csa/arrangement.hpp"
#include "csa/common.hpp"
#include "csa/graph.hpp"
#include "csa/int_linalg.hpp"
#include "csa/lattice.hpp"

namespace csa {

inline constexpr int kDefaultRegionMaxDim = 5;

/// rank * chi(A, -1) + 2 * sum over H of chi(A^H, -1). Zero for simplicial
/// arrangements.
inline std::int64_t simplicial_criterion_value(const Arrangement& a) {
  if (!is_essential(a)) throw Error(ErrorCode::kNotEssential, "simplicial criterion needs an essential arrangement");
  std::int64_t value = detail::checked_mul(a.dim(), charpoly_lattice(a).evaluate(-1));
  for (std::size_t h = 0; h < a.size(); ++h) {
    value = detail::checked_add(value, detail::checked_mul(2, charpoly_lattice(restrict_to(a, h)).evaluate(-1)));
  }
  return value;
}

/// A chamber given by its sign vector, an interior lattice point and the
/// indices of its walls.
struct Region {
  std::vector<std::int8_t> signs;
  IntVector interior;
  std::vector<int> walls;
};

struct RegionReport {
  std::vector<Region> regions;
  std::map<std::size_t, std::size_t> wall_histogram;  // wall count -> regions
  bool simplicial = false;

  std::size_t count() const { return regions.size(); }
};

namespace detail {

inline int sign_of(std::int64_t x) { return (x > 0) - (x < 0); }

class RegionEnumerator {
 public:
  RegionEnumerator(const Arrangement& a, const IntersectionLattice& L) : a_(a) {
    const int d = a.dim();
    for (int x : L.level(d - 1)) {
      IntMatrix rows = L.space(x).rows();
      IntMatrix k = linalg::integer_kernel_basis(rows, d);
      if (k.size() != 1) throw Error(ErrorCode::kInvalidArgument, "rank d-1 flat without a one-dimensional kernel");
      IntVector neg = k[0];
      for (auto& c : neg) c = -c;
      add_ray(k[0]);
      add_ray(neg);
    }
  }

  RegionReport run() {
    RegionReport report;
    std::set<std::vector<std::int8_t>> seen;
    std::deque<std::vector<std::int8_t>> queue;
    std::vector<std::int8_t> start = signs_at(generic_point());
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
      std::vector<std::int8_t> s = std::move(queue.front());
      queue.pop_front();
      Region r = describe(s);
      for (int w : r.walls) {
        std::vector<std::int8_t> t = s;
        t[static_cast<std::size_t>(w)] = static_cast<std::int8_t>(-t[static_cast<std::size_t>(w)]);
        if (seen.insert(t).second) queue.push_back(std::move(t));
      }
      report.regions.push_back(std::move(r));
    }
    std::sort(report.regions.begin(), report.regions.end(), [](const Region& x, const Region& y) { return x.signs < y.signs; });
    report.simplicial = true;
    for (const auto& r : report.regions) {
      ++report.wall_histogram[r.walls.size()];
      if (static_cast<int>(r.walls.size()) != a_.dim()) report.simplicial = false;
    }
    return report;
  }

 private:
  void add_ray(IntVector r) {
    std::vector<std::int8_t> s = signs_at(r);
    rays_.push_back(std::move(r));
    ray_signs_.push_back(std::move(s));
  }

  std::vector<std::int8_t> signs_at(const IntVector& x) const {
    std::vector<std::int8_t> s(a_.size());
    for (std::size_t h = 0; h < a_.size(); ++h) s[h] = static_cast<std::int8_t>(sign_of(linalg::dot(a_.normal(h).coefficients(), x)));
    return s;
  }

  // (1, M, M^2, ...) with M above twice the largest coefficient avoids every
  // hyperplane.
  IntVector generic_point() const {
    const std::int64_t m = 2 * a_.max_abs_entry() + 1;
    IntVector x(static_cast<std::size_t>(a_.dim()));
    std::int64_t p = 1;
    for (auto& c : x) {
      c = p;
      p = detail::checked_mul(p, m);
    }
    return x;
  }

  // The closure of the chamber is the cone over the rays it contains; the
  // interior point is their sum and a wall is a hyperplane meeting those rays
  // in a rank d-1 set.
  Region describe(const std::vector<std::int8_t>& s) const {
    Region r;
    r.signs = s;
    std::vector<std::size_t> closure;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      bool in = true;
      for (std::size_t h = 0; h < s.size() && in; ++h) in = ray_signs_[i][h] == 0 || ray_signs_[i][h] == s[h];
      if (in) closure.push_back(i);
    }
    r.interior.assign(static_cast<std::size_t>(a_.dim()), 0);
    for (std::size_t i : closure) {
      for (std::size_t j = 0; j < r.interior.size(); ++j) r.interior[j] = detail::checked_add(r.interior[j], rays_[i][j]);
    }
    if (signs_at(r.interior) != s) throw Error(ErrorCode::kUnverified, "region interior point has the wrong signs");
    for (std::size_t h = 0; h < s.size(); ++h) {
      IntMatrix on;
      for (std::size_t i : closure) {
        if (ray_signs_[i][h] == 0) on.push_back(rays_[i]);
      }
      if (static_cast<int>(on.size()) >= a_.dim() - 1 && linalg::rank(on) == a_.dim() - 1) r.walls.push_back(static_cast<int>(h));
    }
    return r;
  }

  const Arrangement& a_;
  IntMatrix rays_;
  std::vector<std::vector<std::int8_t>> ray_signs_;
};

}  // namespace detail

/// All chambers of an essential arrangement, found by crossing walls from a
/// generic starting chamber. Every sign computation is exact.
inline RegionReport enumerate_regions(const Arrangement& a, int max_dim = kDefaultRegionMaxDim) {
  if (a.dim() > max_dim) {
    throw Error(ErrorCode::kDimensionTooLarge, "region enumeration is capped at dimension " + std::to_string(max_dim));
  }
  if (!is_essential(a)) throw Error(ErrorCode::kNotEssential, "region enumeration needs an essential arrangement");
  if (a.dim() == 1) {
    RegionReport r;
    for (std::int8_t s : {std::int8_t{-1}, std::int8_t{1}}) r.regions.push_back(Region{{s}, {s}, {0}});
    r.wall_histogram[1] = 2;
    r.simplicial = true;
    return r;
  }
  IntersectionLattice L = build_lattice(a);
  return detail::RegionEnumerator(a, L).run();
}

/// Simplicial iff every component is a triangle or a path.
inline bool classify_simplicial(const Graph& g) {
  for (VertexSet comp : g.components()) {
    auto kind = recognize_family(induced_subgraph(g, comp)).kind;
    if (kind != GraphFamily::Kind::kPath && kind != GraphFamily::Kind::kTriangle) return false;
  }
  return true;
}

}  // namespace csa
