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
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "csa/common.hpp"

namespace csa {

/// Polynomial in t with int64 coefficients; coefficient i multiplies t^i.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// an empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> ascending) : coeffs_(ascending) { trim(); }
  explicit IntPolynomial(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }

  static IntPolynomial monomial(int degree, std::int64_t c = 1) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return IntPolynomial(std::move(v));
  }

  /// prod (t - r) over the given roots.
  static IntPolynomial from_roots(const std::vector<std::int64_t>& roots) {
    IntPolynomial p = constant(1);
    for (std::int64_t r : roots) p = p * IntPolynomial({-r, 1});
    return p;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  std::int64_t coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  std::int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  __int128 evaluate_wide(std::int64_t t) const {
    __int128 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  std::int64_t evaluate(std::int64_t t) const { return detail::narrow(evaluate_wide(t)); }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<std::int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = detail::checked_add(i < coeffs_.size() ? coeffs_[i] : 0, i < o.coeffs_.size() ? o.coeffs_[i] : 0);
    }
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator-() const {
    std::vector<std::int64_t> v = coeffs_;
    for (auto& x : v) x = -x;
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator-(const IntPolynomial& o) const { return *this + (-o); }

  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<__int128> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += static_cast<__int128>(coeffs_[i]) * o.coeffs_[j];
    }
    std::vector<std::int64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = detail::narrow(v[i]);
    return IntPolynomial(std::move(out));
  }

  /// Multiplies by t^k.
  IntPolynomial shifted(int k) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> v(static_cast<std::size_t>(k), 0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v));
  }

  /// Exact division by (t - r); requires p(r) == 0.
  IntPolynomial deflate(std::int64_t r) const {
    if (evaluate_wide(r) != 0) throw Error(ErrorCode::kInvalidArgument, "deflate: not a root");
    std::vector<std::int64_t> q(coeffs_.size() - 1, 0);
    __int128 carry = 0;
    for (std::size_t i = coeffs_.size() - 1; i >= 1; --i) {
      carry = carry * r + coeffs_[i];
      q[i - 1] = detail::narrow(carry);
    }
    return IntPolynomial(std::move(q));
  }

  bool operator==(const IntPolynomial& o) const = default;

  /// Plain expanded form, e.g. "t^3 - 6t^2 + 11t - 6".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) out += std::to_string(mag);
      if (i >= 1) out += "t";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<std::int64_t> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

struct IntegerRoots {
  std::vector<std::int64_t> roots;  // ascending, with multiplicity
  IntPolynomial remainder;          // no integer roots; 1 when fully split
};

/// Deflates p by all of its integer roots. Candidates are the divisors of the
/// lowest nonzero coefficient, tested by exact evaluation.
inline IntegerRoots integer_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kInvalidArgument, "integer_roots of the zero polynomial");
  IntegerRoots result;
  IntPolynomial q = p;
  while (q.degree() >= 1 && q.coefficient(0) == 0) {
    result.roots.push_back(0);
    q = q.deflate(0);
  }
  bool found = true;
  while (found && q.degree() >= 1) {
    found = false;
    std::int64_t c0 = q.coefficient(0);
    std::uint64_t a = c0 < 0 ? static_cast<std::uint64_t>(-(c0 + 1)) + 1 : static_cast<std::uint64_t>(c0);
    std::vector<std::int64_t> divisors;
    for (std::uint64_t d = 1; d * d <= a; ++d) {
      if (a % d != 0) continue;
      divisors.push_back(static_cast<std::int64_t>(d));
      if (d * d != a) divisors.push_back(static_cast<std::int64_t>(a / d));
    }
    std::sort(divisors.begin(), divisors.end());
    for (std::int64_t d : divisors) {
      for (std::int64_t r : {d, -d}) {
        if (q.evaluate_wide(r) == 0) {
          result.roots.push_back(r);
          q = q.deflate(r);
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  std::sort(result.roots.begin(), result.roots.end());
  result.remainder = q;
  return result;
}

/// Factored display built from integer_roots, e.g. "(t - 1)(t - 4)^3" or
/// "(t - 1)(t - 4)(t^2 - 9t + 21)".
inline std::string factored_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  IntegerRoots ir = integer_roots(p);
  std::map<std::int64_t, int> mult;
  for (std::int64_t r : ir.roots) ++mult[r];
  std::string out;
  for (auto [r, m] : mult) {
    if (r == 0) {
      out += "t";
    } else {
      out += "(t ";
      out += r > 0 ? "- " + std::to_string(r) : "+ " + std::to_string(-r);
      out += ")";
    }
    if (m > 1) out += "^" + std::to_string(m);
  }
  const IntPolynomial& rem = ir.remainder;
  if (rem.degree() > 0) {
    out += "(" + rem.to_string() + ")";
  } else if (rem.coefficient(0) != 1 || out.empty()) {
    out = std::to_string(rem.coefficient(0)) + (out.empty() ? "" : "*" + out);
  }
  return out;
}

}  // namespace csa
