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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace csa {

enum class ErrorCode {
  kInvalidArgument,
  kEmptySubset,
  kNotAnEdge,
  kDisconnected,
  kOutOfRange,
  kParse,
  kDimensionTooLarge,
  kResourceCap,
  kNotClassifiedFree,
  kAlreadyPresent,
  kNotEssential,
  kUnverified,
  kOverflow,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kNotAnEdge: return "NotAnEdge";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kResourceCap: return "ResourceCap";
    case ErrorCode::kNotClassifiedFree: return "NotClassifiedFree";
    case ErrorCode::kAlreadyPresent: return "AlreadyPresent";
    case ErrorCode::kNotEssential: return "NotEssential";
    case ErrorCode::kUnverified: return "Unverified";
    case ErrorCode::kOverflow: return "Overflow";
  }
  return "Unknown";
}

/// Exception type used throughout the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A set of graph vertices; vertex v (1-based) is bit v-1.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 63;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

inline constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

inline int lowest_vertex(VertexSet s) { return std::countr_zero(s) + 1; }

inline std::vector<int> set_elements(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline VertexSet make_set(const std::vector<int>& vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(v));
    s |= vertex_bit(v);
  }
  return s;
}

/// Size first, then lexicographic on the sorted element lists.
inline bool subset_order_less(VertexSet a, VertexSet b) {
  int sa = set_size(a);
  int sb = set_size(b);
  if (sa != sb) return sa < sb;
  while (a != 0 && b != 0) {
    int x = std::countr_zero(a);
    int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

inline std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : set_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "int64 multiplication");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "int64 addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "int64 subtraction");
  return r;
}

inline std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorCode::kOverflow, "value exceeds int64");
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

}  // namespace csa
