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
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "csa/arrangement.hpp"
#include "csa/common.hpp"
#include "csa/freeness.hpp"
#include "csa/graph.hpp"
#include "csa/lattice.hpp"
#include "csa/obstruction.hpp"
#include "csa/polynomial.hpp"

namespace csa {

/// Partition of the hyperplanes of an arrangement into blocks of indices.
struct HPartition {
  std::vector<std::vector<int>> blocks;

  std::vector<std::size_t> block_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks) out.push_back(b.size());
    return out;
  }

  /// Block index of every hyperplane.
  std::vector<int> block_of(std::size_t hyperplanes) const {
    std::vector<int> out(hyperplanes, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (int h : blocks[b]) out[static_cast<std::size_t>(h)] = static_cast<int>(b);
    }
    return out;
  }
};

/// Blocks nonempty, disjoint and covering every hyperplane.
inline bool is_valid_partition(const Arrangement& a, const HPartition& p) {
  std::vector<int> seen(a.size(), 0);
  for (const auto& b : p.blocks) {
    if (b.empty()) return false;
    for (int h : b) {
      if (h < 0 || static_cast<std::size_t>(h) >= a.size() || seen[static_cast<std::size_t>(h)]++) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

inline constexpr std::uint64_t kExhaustiveTransversalLimit = 1'000'000;

namespace detail {

inline bool transversals_exhaustive(const Arrangement& a, const HPartition& p, std::size_t b, linalg::RowSpace& span) {
  if (b == p.blocks.size()) return true;
  for (int h : p.blocks[b]) {
    linalg::RowSpace next = span;
    if (!next.add(a.normal(static_cast<std::size_t>(h)).coefficients())) return false;
    if (!transversals_exhaustive(a, p, b + 1, next)) return false;
  }
  return true;
}

}  // namespace detail

/// Every choice of one hyperplane per block is linearly independent.
/// Enumerates transversals directly when there are few; otherwise walks the
/// blocks keeping only the distinct spans reached so far.
inline bool is_independent(const Arrangement& a, const HPartition& p) {
  if (!is_valid_partition(a, p)) throw Error(ErrorCode::kInvalidArgument, "not a partition of the arrangement");
  if (static_cast<int>(p.blocks.size()) > a.dim()) return false;
  std::uint64_t product = 1;
  for (const auto& b : p.blocks) {
    product = std::min<std::uint64_t>(product * b.size(), kExhaustiveTransversalLimit + 1);
  }
  if (product <= kExhaustiveTransversalLimit) {
    linalg::RowSpace span(a.dim());
    return detail::transversals_exhaustive(a, p, 0, span);
  }
  std::unordered_set<linalg::RowSpace, linalg::RowSpaceHash> layer{linalg::RowSpace(a.dim())};
  for (const auto& block : p.blocks) {
    std::unordered_set<linalg::RowSpace, linalg::RowSpaceHash> next;
    for (const auto& span : layer) {
      for (int h : block) {
        linalg::RowSpace s = span;
        if (!s.add(a.normal(static_cast<std::size_t>(h)).coefficients())) return false;
        next.insert(std::move(s));
      }
    }
    layer = std::move(next);
  }
  return true;
}

struct NiceReport {
  bool nice = false;
  bool independent = false;
  std::optional<Flat> failing_flat;  // a flat whose induced partition has no singleton block
};

/// Independence plus a singleton block in the induced partition at every
/// flat other than the ambient space.
inline NiceReport is_nice(const Arrangement& a, const HPartition& p, const IntersectionLattice& L) {
  NiceReport r;
  r.independent = is_independent(a, p);
  if (!r.independent) return r;
  std::vector<int> owner = p.block_of(a.size());
  std::vector<int> count(p.blocks.size(), 0);
  for (std::size_t x = 1; x < L.size(); ++x) {
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t h = 0; h < a.size(); ++h) {
      if (L.is_member(static_cast<int>(x), h)) ++count[static_cast<std::size_t>(owner[h])];
    }
    if (std::find(count.begin(), count.end(), 1) == count.end()) {
      r.failing_flat = L.flat(static_cast<int>(x));
      return r;
    }
  }
  r.nice = true;
  return r;
}

inline NiceReport is_nice(const Arrangement& a, const HPartition& p) { return is_nice(a, p, build_lattice(a)); }

/// Induced partition on the localisation A_X, in the indices of A_X.
inline HPartition induced_partition(const Arrangement& a, const HPartition& p, const Flat& x, const Arrangement& ax) {
  HPartition out;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    for (int h : b) {
      if (x.members.test(static_cast<std::size_t>(h))) nb.push_back(static_cast<int>(*ax.index_of(a.normal(static_cast<std::size_t>(h)))));
    }
    if (!nb.empty()) out.blocks.push_back(std::move(nb));
  }
  return out;
}

/// Builds a partition from blocks of vertex sets.
inline HPartition partition_from_subsets(const Arrangement& a, const std::vector<std::vector<VertexSet>>& blocks) {
  HPartition p;
  for (const auto& b : blocks) {
    std::vector<int> idx;
    for (VertexSet s : b) {
      auto i = a.index_of_subset(s);
      if (!i) throw Error(ErrorCode::kInvalidArgument, "H_" + set_to_string(s) + " is not in the arrangement");
      idx.push_back(static_cast<int>(*i));
    }
    p.blocks.push_back(std::move(idx));
  }
  return p;
}

inline std::vector<std::vector<VertexSet>> partition_subsets(const Arrangement& a, const HPartition& p) {
  std::vector<std::vector<VertexSet>> out;
  for (const auto& b : p.blocks) {
    std::vector<VertexSet> s;
    for (int h : b) s.push_back(a.subset(static_cast<std::size_t>(h)));
    std::sort(s.begin(), s.end(), subset_order_less);
    out.push_back(std::move(s));
  }
  return out;
}

/// Factorisation of A_{Delta_{n,1}} (path 1..n, vertex n+1 joined to 1, 2):
/// {H_{1,n+1}}, {H_{n+1}, H_1, H_{12}, ..., H_{1..n}}, then for i = 3..n+1
/// every remaining H_X with X disjoint from {i, ..., n}.
inline HPartition delta_n1_partition(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "delta_n1_partition needs n >= 2");
  Arrangement a = csa_from_graph(path_triangle_graph(n, 1));
  const int top = n + 1;
  std::vector<std::vector<VertexSet>> blocks;
  blocks.push_back({vertex_bit(1) | vertex_bit(top)});
  std::vector<VertexSet> second{vertex_bit(top)};
  for (int j = 1; j <= n; ++j) second.push_back(full_set(j));
  blocks.push_back(second);
  std::set<VertexSet> used;
  for (const auto& b : blocks) used.insert(b.begin(), b.end());
  for (int i = 3; i <= n + 1; ++i) {
    VertexSet tail = full_set(n) & ~full_set(i - 1);
    std::vector<VertexSet> block;
    for (VertexSet s : a.subsets()) {
      if ((s & tail) == 0 && !used.count(s)) block.push_back(s);
    }
    std::sort(block.begin(), block.end(), subset_order_less);
    used.insert(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return partition_from_subsets(a, blocks);
}

/// Factorisation of the braid arrangement A_{P_n}: block i holds the
/// intervals ending at i.
inline HPartition path_partition(int n) {
  Arrangement a = csa_from_graph(path_graph(n));
  std::vector<std::vector<VertexSet>> blocks;
  for (int i = 1; i <= n; ++i) {
    std::vector<VertexSet> b;
    for (int j = 1; j <= i; ++j) b.push_back(full_set(i) & ~full_set(j - 1));
    blocks.push_back(std::move(b));
  }
  return partition_from_subsets(a, blocks);
}

/// No circuit triple of a contains both H_A and H_B.
inline bool conflicting(const Arrangement& a, VertexSet A, VertexSet B) {
  if (!a.is_01()) throw Error(ErrorCode::kInvalidArgument, "conflicting sets need a 0/1 arrangement");
  if (A == B || !a.index_of_subset(A) || !a.index_of_subset(B)) {
    throw Error(ErrorCode::kInvalidArgument, "conflicting needs two distinct hyperplanes of the arrangement");
  }
  const bool overlap = (A & B) != 0;
  const bool nested = (A & ~B) == 0 || (B & ~A) == 0;
  if (overlap && !nested) return true;
  return !a.index_of_subset(A ^ B).has_value();
}

// ---------------------------------------------------------------------------
// Modularity and supersolvability

/// Modularity tests on a fixed lattice. X is modular iff for every flat Y
/// the rank identity r(X) + r(Y) = r(X meet Y) + r(X join Y) holds, where the
/// meet has the common members and the join the sum of the row spaces.
class ModularityOracle {
 public:
  explicit ModularityOracle(const IntersectionLattice& L) : L_(L), cache_(L.size(), -1) {
    for (std::size_t x = 0; x < L.size(); ++x) by_members_.emplace(key(static_cast<int>(x)), static_cast<int>(x));
  }

  const IntersectionLattice& lattice() const { return L_; }

  bool is_modular(int x) {
    auto& c = cache_[static_cast<std::size_t>(x)];
    if (c >= 0) return c == 1;
    bool ok = true;
    for (std::size_t y = 0; y < L_.size() && ok; ++y) {
      int yi = static_cast<int>(y);
      if (L_.below(x, yi) || L_.below(yi, x)) continue;
      int meet = meet_of(x, yi);
      linalg::RowSpace join = L_.space(x);
      for (const auto& row : L_.space(yi).rows()) join.add(row);
      ok = L_.codim(x) + L_.codim(yi) == L_.codim(meet) + join.rank();
    }
    c = ok ? 1 : 0;
    return ok;
  }

  /// Flat whose members are the common members of x and y.
  int meet_of(int x, int y) const {
    std::vector<std::uint64_t> k = key(x);
    std::vector<std::uint64_t> ky = key(y);
    for (std::size_t i = 0; i < k.size(); ++i) k[i] &= ky[i];
    auto it = by_members_.find(k);
    if (it == by_members_.end()) throw Error(ErrorCode::kInvalidArgument, "member intersection is not a flat");
    return it->second;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
      std::size_t h = v.size();
      for (auto w : v) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

  std::vector<std::uint64_t> key(int x) const {
    std::vector<std::uint64_t> words = L_.members(x).words();
    if (words.empty()) words.push_back(0);
    return words;
  }

  const IntersectionLattice& L_;
  std::vector<int> cache_;
  std::unordered_map<std::vector<std::uint64_t>, int, KeyHash> by_members_;
};

inline bool is_modular(const Arrangement& a, const Flat& x) {
  IntersectionLattice L = build_lattice(a);
  auto id = L.find(x.space);
  if (!id) throw Error(ErrorCode::kInvalidArgument, "flat does not belong to the lattice");
  ModularityOracle oracle(L);
  return oracle.is_modular(*id);
}

/// Chain of flats V = X_0 < X_1 < ... < X_r, one per codimension.
struct ModularChain {
  std::vector<Flat> flats;
};

namespace detail {

inline bool modular_chain_dfs(ModularityOracle& oracle, std::vector<int>& chain) {
  const IntersectionLattice& L = oracle.lattice();
  const int k = static_cast<int>(chain.size());
  if (k == L.rank() + 1) return true;
  for (int y : L.level(k)) {
    if (!L.below(chain.back(), y) || !oracle.is_modular(y)) continue;
    chain.push_back(y);
    if (modular_chain_dfs(oracle, chain)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace detail

/// Depth-first search for a maximal chain of modular flats.
inline std::optional<ModularChain> supersolvable_chain(const Arrangement& a, const IntersectionLattice& L) {
  ModularityOracle oracle(L);
  std::vector<int> chain{0};
  if (!detail::modular_chain_dfs(oracle, chain)) return std::nullopt;
  ModularChain out;
  for (int x : chain) out.flats.push_back(L.flat(x));
  (void)a;
  return out;
}

inline std::optional<ModularChain> supersolvable_chain(const Arrangement& a) { return supersolvable_chain(a, build_lattice(a)); }

/// Checks that the chain is a maximal chain of modular flats of a.
inline bool verify_modular_chain(const Arrangement& a, const ModularChain& chain, const IntersectionLattice& L) {
  if (static_cast<int>(chain.flats.size()) != L.rank() + 1) return false;
  ModularityOracle oracle(L);
  int prev = -1;
  for (std::size_t i = 0; i < chain.flats.size(); ++i) {
    auto id = L.find(chain.flats[i].space);
    if (!id || L.codim(*id) != static_cast<int>(i)) return false;
    if (chain.flats[i].members != members_of(a, chain.flats[i].space)) return false;
    if (prev >= 0 && !L.below(prev, *id)) return false;
    if (!oracle.is_modular(*id)) return false;
    prev = *id;
  }
  return true;
}

/// Blocks A_{X_i} minus A_{X_{i-1}} of a verified modular chain.
inline HPartition chain_to_partition(const Arrangement& a, const ModularChain& chain) {
  IntersectionLattice L = build_lattice(a);
  if (!verify_modular_chain(a, chain, L)) throw Error(ErrorCode::kUnverified, "not a maximal modular chain");
  HPartition p;
  for (std::size_t i = 1; i < chain.flats.size(); ++i) {
    std::vector<int> b;
    for (std::size_t h = 0; h < a.size(); ++h) {
      if (chain.flats[i].members.test(h) && !chain.flats[i - 1].members.test(h)) b.push_back(static_cast<int>(h));
    }
    p.blocks.push_back(std::move(b));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Brute-force nice partition search (test oracle)

namespace detail {

class NicePartitionSearch {
 public:
  NicePartitionSearch(const Arrangement& a, const IntersectionLattice& L, std::vector<std::size_t> sizes)
      : a_(a), L_(L), sizes_(std::move(sizes)), fill_(sizes_.size(), 0), owner_(a.size(), -1) {
    const std::vector<int> none;
    for (int x : L_.rank() >= 2 ? L_.level(2) : none) {
      std::vector<int> m;
      for (std::size_t h = 0; h < a.size(); ++h) {
        if (L_.is_member(x, h)) m.push_back(static_cast<int>(h));
      }
      rank2_.push_back(std::move(m));
    }
    rank2_of_.resize(a.size());
    for (std::size_t f = 0; f < rank2_.size(); ++f) {
      for (int h : rank2_[f]) rank2_of_[static_cast<std::size_t>(h)].push_back(f);
    }
  }

  std::optional<HPartition> run() {
    if (assign(0)) return current();
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  HPartition current() const {
    HPartition p;
    p.blocks.assign(sizes_.size(), {});
    for (std::size_t h = 0; h < owner_.size(); ++h) p.blocks[static_cast<std::size_t>(owner_[h])].push_back(static_cast<int>(h));
    return p;
  }

  // Every rank-2 flat meets at most two blocks, and when it has two or more
  // members one of those blocks holds exactly one of them.
  bool rank2_ok(std::size_t h) const {
    for (std::size_t f : rank2_of_[h]) {
      const auto& m = rank2_[f];
      std::map<int, int> cnt;
      int unassigned = 0;
      for (int x : m) {
        int o = owner_[static_cast<std::size_t>(x)];
        if (o < 0) {
          ++unassigned;
        } else {
          ++cnt[o];
        }
      }
      if (cnt.size() > 2) return false;
      if (unassigned == 0) {
        if (cnt.size() < 2 && m.size() >= 2) return false;
        bool single = std::any_of(cnt.begin(), cnt.end(), [](const auto& kv) { return kv.second == 1; });
        if (!single) return false;
      } else if (cnt.size() == 2) {
        bool single = std::any_of(cnt.begin(), cnt.end(), [](const auto& kv) { return kv.second == 1; });
        if (!single) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t h) {
    ++nodes_;
    if (h == a_.size()) {
      HPartition p = current();
      return is_nice(a_, p, L_).nice;
    }
    for (std::size_t b = 0; b < sizes_.size(); ++b) {
      if (fill_[b] == sizes_[b]) continue;
      // Empty blocks of equal size are interchangeable: use the first one.
      bool skip = false;
      if (fill_[b] == 0) {
        for (std::size_t c = 0; c < b; ++c) {
          if (fill_[c] == 0 && sizes_[c] == sizes_[b]) skip = true;
        }
      }
      if (skip) continue;
      owner_[h] = static_cast<int>(b);
      ++fill_[b];
      if (rank2_ok(h) && assign(h + 1)) return true;
      --fill_[b];
      owner_[h] = -1;
    }
    return false;
  }

  const Arrangement& a_;
  const IntersectionLattice& L_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> fill_;
  std::vector<int> owner_;
  std::vector<std::vector<int>> rank2_;
  std::vector<std::vector<std::size_t>> rank2_of_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

struct NiceSearchResult {
  std::optional<HPartition> partition;
  std::string reason;
  std::uint64_t nodes = 0;
};

/// Exhaustive search for a nice partition. Block sizes are forced by the
/// roots of chi; the only pruning is the rank-2 flat condition, which every
/// nice partition satisfies.
inline NiceSearchResult find_nice_partition(const Arrangement& a) {
  NiceSearchResult r;
  IntersectionLattice L = build_lattice(a);
  IntPolynomial chi = charpoly_lattice(L);
  IntegerRoots roots = integer_roots(chi);
  if (roots.remainder.degree() > 0) {
    r.reason = "characteristic polynomial has non-integral roots";
    return r;
  }
  std::vector<std::size_t> sizes;
  for (auto x : roots.roots) {
    if (x < 0) {
      r.reason = "negative root";
      return r;
    }
    if (x > 0) sizes.push_back(static_cast<std::size_t>(x));
  }
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  if (total != a.size()) {
    r.reason = "root sum differs from the number of hyperplanes";
    return r;
  }
  std::sort(sizes.begin(), sizes.end());
  detail::NicePartitionSearch search(a, L, sizes);
  r.partition = search.run();
  r.nodes = search.nodes();
  if (!r.partition) r.reason = "exhaustive search found no nice partition";
  return r;
}

// ---------------------------------------------------------------------------
// Graph classifications

/// Relabelling of a path-with-triangle graph Delta_{n,1} (or the triangle)
/// onto the standard labels: perm[v-1] is the standard label of vertex v.
inline std::vector<int> delta_n1_labelling(const Graph& g) {
  GraphFamily f = recognize_family(g);
  const bool ok = f.kind == GraphFamily::Kind::kTriangle || (f.kind == GraphFamily::Kind::kPathTriangle && f.k == 1);
  if (!ok) throw Error(ErrorCode::kInvalidArgument, "graph is not Delta_{n,1}");
  const int N = g.n();
  std::vector<int> perm(static_cast<std::size_t>(N), 0);
  // Triangle corners: the degree-3 corner is standard vertex 2.
  std::vector<int> corners;
  for (int v = 1; v <= N; ++v) {
    for (int w : set_elements(g.neighbors(v))) {
      if (w > v && (g.neighbors(v) & g.neighbors(w)) != 0) {
        int u = lowest_vertex(g.neighbors(v) & g.neighbors(w));
        corners = {v, w, u};
      }
    }
    if (!corners.empty()) break;
  }
  std::sort(corners.begin(), corners.end(), [&](int x, int y) { return g.degree(x) > g.degree(y) || (g.degree(x) == g.degree(y) && x < y); });
  int hub = corners[0];
  perm[static_cast<std::size_t>(hub - 1)] = 2;
  perm[static_cast<std::size_t>(corners[1] - 1)] = 1;
  perm[static_cast<std::size_t>(corners[2] - 1)] = N;
  int prev = hub;
  int cur = 0;
  for (int w : set_elements(g.neighbors(hub))) {
    if (w != corners[1] && w != corners[2]) cur = w;
  }
  int label = 3;
  while (cur != 0) {
    perm[static_cast<std::size_t>(cur - 1)] = label++;
    int next = 0;
    for (int w : set_elements(g.neighbors(cur))) {
      if (w != prev) next = w;
    }
    prev = cur;
    cur = next;
  }
  return perm;
}

/// Relabelling of a path onto 1..n along the path.
inline std::vector<int> path_labelling(const Graph& g) {
  if (recognize_family(g).kind != GraphFamily::Kind::kPath) throw Error(ErrorCode::kInvalidArgument, "graph is not a path");
  std::vector<int> perm(static_cast<std::size_t>(g.n()), 0);
  int start = 1;
  for (int v = 1; v <= g.n(); ++v) {
    if (g.degree(v) <= 1) {
      start = v;
      break;
    }
  }
  int prev = 0;
  int cur = start;
  for (int label = 1; cur != 0; ++label) {
    perm[static_cast<std::size_t>(cur - 1)] = label;
    int next = 0;
    for (int w : set_elements(g.neighbors(cur))) {
      if (w != prev) next = w;
    }
    prev = cur;
    cur = next;
  }
  return perm;
}

/// Transports a partition of csa(h) to csa(g) where h = relabel(g, perm).
inline HPartition pull_back_partition(const Graph& g, const std::vector<int>& perm, const HPartition& on_h) {
  Arrangement ah = csa_from_graph(relabel(g, perm));
  Arrangement ag = csa_from_graph(g);
  std::vector<int> inverse(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inverse[static_cast<std::size_t>(perm[i] - 1)] = static_cast<int>(i) + 1;
  HPartition out;
  for (const auto& b : on_h.blocks) {
    std::vector<int> nb;
    for (int h : b) {
      VertexSet s = 0;
      for (int v : set_elements(ah.subset(static_cast<std::size_t>(h)))) s |= vertex_bit(inverse[static_cast<std::size_t>(v - 1)]);
      nb.push_back(static_cast<int>(*ag.index_of_subset(s)));
    }
    std::sort(nb.begin(), nb.end());
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

struct FactoredResult {
  bool factored = false;
  std::optional<HPartition> partition;  // verified nice partition of csa(g)
  std::optional<MinorWitness> witness;  // minor reaching a non-factored target
  std::string witness_name;
  std::string reason;
};

inline bool is_factored_family(const Graph& g) {
  GraphFamily f = recognize_family(g);
  return f.kind == GraphFamily::Kind::kPath || f.kind == GraphFamily::Kind::kTriangle ||
         (f.kind == GraphFamily::Kind::kPathTriangle && f.k == 1);
}

/// Non-factored minor targets: the star K_{1,3}, the 4-cycle and G_1..G_8.
inline std::vector<std::pair<std::string, Graph>> non_factored_targets() {
  std::vector<std::pair<std::string, Graph>> t{{"A_{3,2}", star_graph(3)}, {"C_4", cycle_graph(4)}};
  for (int i = 1; i <= kObstructionCount; ++i) t.emplace_back("G_" + std::to_string(i), obstruction_graph(i));
  return t;
}

/// Factored iff every component is a path or Delta_{n,1}; the positive case
/// carries a verified nice partition, the negative case a minor witness.
inline FactoredResult classify_factored(const Graph& g) {
  FactoredResult r;
  auto comps = g.components();
  for (VertexSet comp : comps) {
    Graph c = induced_subgraph(g, comp);
    if (is_factored_family(c)) continue;
    auto named = non_factored_targets();
    std::vector<Graph> targets;
    for (auto& [name, h] : named) targets.push_back(h);
    MinorSearch search(is_factored_family, targets);
    auto w = search.run(c);
    if (w) {
      if (comp != g.vertices()) w->ops.insert(w->ops.begin(), WitnessOp::induced(comp));
      r.witness_name = named[static_cast<std::size_t>(w->target)].first;
      r.witness = std::move(w);
      r.reason = "reaches " + r.witness_name;
    } else {
      r.reason = "no non-factored minor found for component " + set_to_string(comp);
    }
    return r;
  }
  if (comps.size() != 1) {
    r.factored = true;
    r.reason = "every component is a path or Delta_{n,1}";
    return r;
  }
  HPartition p;
  if (recognize_family(g).kind == GraphFamily::Kind::kPath) {
    std::vector<int> perm = path_labelling(g);
    p = pull_back_partition(g, perm, path_partition(g.n()));
    r.reason = "braid factorisation";
  } else {
    std::vector<int> perm = delta_n1_labelling(g);
    p = pull_back_partition(g, perm, delta_n1_partition(g.n() - 1));
    r.reason = "Delta_{n,1} factorisation";
  }
  Arrangement a = csa_from_graph(g);
  if (!is_nice(a, p).nice) throw Error(ErrorCode::kUnverified, "constructed partition is not nice");
  r.factored = true;
  r.partition = std::move(p);
  return r;
}

/// Supersolvable iff every component is a path.
inline bool classify_supersolvable(const Graph& g) {
  for (VertexSet comp : g.components()) {
    if (recognize_family(induced_subgraph(g, comp)).kind != GraphFamily::Kind::kPath) return false;
  }
  return true;
}

}  // namespace csa
