// Copyright 2026 The tatecirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "tatecirc/laurent_poly.hpp"
#include "tatecirc/multi_poly.hpp"
#include "tatecirc/rational.hpp"

namespace tatecirc {

/// Element of Z[b_*], the divided power algebra on b, in the basis b_k = b^k/k!
/// (b_0 = 1). Multiplication b_i * b_j = binom(i+j, i) b_{i+j}.
class DividedPowerElem {
 public:
  using Coords = std::map<unsigned, Integer>;

  DividedPowerElem() = default;
  explicit DividedPowerElem(const Coords& coords) {
    for (const auto& [k, c] : coords) add(k, c);
  }
  static DividedPowerElem basis(unsigned k, const Integer& c = 1) {
    DividedPowerElem e;
    e.add(k, c);
    return e;
  }
  static DividedPowerElem one() { return basis(0); }

  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Integer coord(unsigned k) const {
    auto it = coords_.find(k);
    return it == coords_.end() ? Integer(0) : it->second;
  }

  void add(unsigned k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = coords_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coords_.erase(it);
    }
  }

  DividedPowerElem& operator+=(const DividedPowerElem& o) {
    for (const auto& [k, c] : o.coords_) add(k, c);
    return *this;
  }
  DividedPowerElem& operator-=(const DividedPowerElem& o) {
    for (const auto& [k, c] : o.coords_) add(k, Integer(-c));
    return *this;
  }
  friend DividedPowerElem operator+(DividedPowerElem a, const DividedPowerElem& b) { return a += b; }
  friend DividedPowerElem operator-(DividedPowerElem a, const DividedPowerElem& b) { return a -= b; }
  DividedPowerElem operator-() const { return DividedPowerElem() - *this; }
  friend DividedPowerElem operator*(const DividedPowerElem& x, const DividedPowerElem& y) {
    DividedPowerElem r;
    for (const auto& [i, ci] : x.coords_)
      for (const auto& [j, cj] : y.coords_) r.add(i + j, Integer(binomial(i + j, i) * ci * cj));
    return r;
  }
  friend bool operator==(const DividedPowerElem&, const DividedPowerElem&) = default;

  /// The same element in Q[b], via b_k = b^k / k!.
  MultiPoly to_polynomial(const std::string& gen = "b") const {
    MultiPoly p({gen});
    for (const auto& [k, c] : coords_) {
      Monomial m;
      m.set(0, k);
      p.add_term(m, Rational(c, factorial(k)));
    }
    return p;
  }

  /// `b_k` basis spelling in increasing k, with b_0 written as its coefficient.
  std::string to_string() const {
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& [k, c] : coords_)
      parts.push_back(detail::render_term(Rational(c), k == 0 ? "" : "b_" + std::to_string(k)));
    return detail::join_terms(parts);
  }

 private:
  Coords coords_;
};

inline DividedPowerElem dp_mul(const DividedPowerElem& x, const DividedPowerElem& y) { return x * y; }

}  // namespace tatecirc
