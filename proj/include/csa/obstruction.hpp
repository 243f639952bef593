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

#include <string>
#include <vector>

#include "csa/common.hpp"
#include "csa/graph.hpp"
#include "csa/polynomial.hpp"

namespace csa {

inline constexpr int kObstructionCount = 8;

/// The eight minimal non-free graphs G_1..G_8. Each is the unique connected
/// graph (up to isomorphism) whose CSA has the corresponding characteristic
/// polynomial from obstruction_charpoly().
inline Graph obstruction_graph(int id) {
  switch (id) {
    case 1:  // diamond, middle edge {2,3}
      return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    case 2:
      return complete_graph(4);
    case 3:
      return star_graph(4);
    case 4:  // triangle with two pendants at one corner
      return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}});
    case 5:  // bowtie
      return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    case 6:  // 4-cycle with a pendant
      return Graph(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}});
    case 7:  // triangle with a pendant at every corner
      return Graph(6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 6}});
    case 8:
      return spider_graph({2, 2, 2});
    default:
      throw Error(ErrorCode::kOutOfRange, "obstruction id must be in 1..8, got " + std::to_string(id));
  }
}

/// Published characteristic polynomial of A_{G_id}, expanded.
inline IntPolynomial obstruction_charpoly(int id) {
  const IntPolynomial t1{-1, 1}, t4{-4, 1}, t5{-5, 1}, t7{-7, 1};
  switch (id) {
    case 1: return t1 * t4 * IntPolynomial{21, -9, 1};
    case 2: return t1 * t4 * IntPolynomial{26, -10, 1};
    case 3: return t1 * t4 * t5 * IntPolynomial{29, -10, 1};
    case 4: return t1 * t5 * IntPolynomial{-138, 78, -15, 1};
    case 5: return t1 * t5 * t5 * IntPolynomial{33, -11, 1};
    case 6: return t1 * t5 * t5 * IntPolynomial{26, -10, 1};
    case 7: return t1 * t5 * IntPolynomial{1180, -784, 200, -23, 1};
    case 8: return t1 * t5 * t7 * IntPolynomial{1188, -784, 200, -23, 1};
    default:
      throw Error(ErrorCode::kOutOfRange, "obstruction id must be in 1..8, got " + std::to_string(id));
  }
}

/// Non-linear factor of obstruction_charpoly(id), which has no integer roots.
inline IntPolynomial obstruction_remainder(int id) { return integer_roots(obstruction_charpoly(id)).remainder; }

}  // namespace csa
