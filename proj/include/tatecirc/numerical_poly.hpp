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
#include <utility>
#include <variant>
#include <vector>

#include "tatecirc/laurent_poly.hpp"
#include "tatecirc/multi_poly.hpp"
#include "tatecirc/rational.hpp"

namespace tatecirc {

/// Falling-factorial binomial n(n-1)...(n-k+1)/k! over any Q-algebra. The
/// factorial is applied as a single exact rational scale at the end.
template <class R>
R binom_generic(const R& n, const R& one, unsigned k) {
  R r = one;
  for (unsigned i = 0; i < k; ++i) r = r * (n - one.scaled(Rational(static_cast<long>(i))));
  return r.scaled(Rational(Integer(1), factorial(k)));
}

inline Rational binom_scalar(const Rational& n, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r *= n - Rational(static_cast<long>(i));
  return r / Rational(factorial(k));
}

/// binom(v, k) as a polynomial in the generator `gen`.
inline MultiPoly binom_poly(const std::string& gen, unsigned k) {
  return binom_generic(MultiPoly::generator({gen}, 0), MultiPoly::constant({gen}, 1), k);
}

/// Integer-valued polynomial in beta, stored in the basis binom(beta, k)
/// with integer coordinates (beta_0 = 1).
class NumericalPoly {
 public:
  using Coords = std::map<unsigned, Integer>;

  NumericalPoly() = default;
  explicit NumericalPoly(const Coords& coords) {
    for (const auto& [k, c] : coords) add(k, c);
  }
  static NumericalPoly basis(unsigned k, const Integer& c = 1) {
    NumericalPoly p;
    p.add(k, c);
    return p;
  }
  static NumericalPoly one() { return basis(0); }

  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Integer coord(unsigned k) const {
    auto it = coords_.find(k);
    return it == coords_.end() ? Integer(0) : it->second;
  }
  unsigned degree() const { return coords_.empty() ? 0 : coords_.rbegin()->first; }

  void add(unsigned k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = coords_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coords_.erase(it);
    }
  }

  /// Value at an integer argument (negative arguments allowed).
  Integer evaluate(const Integer& n) const {
    Integer r = 0, b;
    for (const auto& [k, c] : coords_) {
      mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
      r += c * b;
    }
    return r;
  }

  Rational evaluate(const Rational& x) const {
    Rational r;
    for (const auto& [k, c] : coords_) r += Rational(c) * binom_scalar(x, k);
    return r;
  }

  NumericalPoly& operator+=(const NumericalPoly& o) {
    for (const auto& [k, c] : o.coords_) add(k, c);
    return *this;
  }
  NumericalPoly& operator-=(const NumericalPoly& o) {
    for (const auto& [k, c] : o.coords_) add(k, Integer(-c));
    return *this;
  }
  friend NumericalPoly operator+(NumericalPoly a, const NumericalPoly& b) { return a += b; }
  friend NumericalPoly operator-(NumericalPoly a, const NumericalPoly& b) { return a -= b; }
  NumericalPoly operator-() const { return NumericalPoly() - *this; }

  /// Pointwise product re-expressed in the binomial basis: the k-th
  /// coordinate is the k-th forward difference at 0 of n -> x(n) y(n).
  friend NumericalPoly operator*(const NumericalPoly& x, const NumericalPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    unsigned d = x.degree() + y.degree();
    std::vector<Integer> values(d + 1);
    for (unsigned n = 0; n <= d; ++n) values[n] = x.evaluate(Integer(n)) * y.evaluate(Integer(n));
    return from_values(std::move(values));
  }

  friend bool operator==(const NumericalPoly&, const NumericalPoly&) = default;

  /// The element in Q[gen].
  MultiPoly to_polynomial(const std::string& gen = "beta") const {
    MultiPoly p({gen});
    for (const auto& [k, c] : coords_) p += binom_poly(gen, k).scaled(Rational(c));
    return p;
  }

  /// Forward differences of values at 0, 1, ..., d.
  static NumericalPoly from_values(std::vector<Integer> values) {
    NumericalPoly r;
    for (std::size_t k = 0; k < values.size(); ++k) {
      r.add(static_cast<unsigned>(k), values[0]);
      for (std::size_t i = 0; i + 1 < values.size() - k; ++i) values[i] = values[i + 1] - values[i];
    }
    return r;
  }

  /// `binom(beta,k)` spellings in increasing k.
  std::string to_string() const {
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& [k, c] : coords_)
      parts.push_back(detail::render_term(Rational(c), k == 0 ? "" : "binom(beta," + std::to_string(k) + ")"));
    return detail::join_terms(parts);
  }

 private:
  Coords coords_;
};

inline NumericalPoly numerical_mul(const NumericalPoly& x, const NumericalPoly& y) { return x * y; }

/// Binomial-basis coordinates that are not integers.
struct NotIntegralReport {
  std::vector<Rational> coords;                          // every coordinate, index k
  std::vector<std::pair<unsigned, Rational>> fractional;  // (k, c_k) with c_k not an integer
};

using BinomialBasisResult = std::variant<NumericalPoly, NotIntegralReport>;

/// Coordinates c_k = (Delta^k p)(0) of a univariate polynomial in the basis
/// binom(x, k).
inline std::vector<Rational> binomial_coordinates(const MultiPoly& p) {
  upoly::require_univariate(p);
  int d = upoly::degree(p);
  if (d < 0) return {};
  std::vector<Rational> values(static_cast<std::size_t>(d + 1));
  for (int n = 0; n <= d; ++n) values[static_cast<std::size_t>(n)] = upoly::evaluate(p, Rational(n));
  std::vector<Rational> coords;
  for (std::size_t k = 0; k < values.size(); ++k) {
    coords.push_back(values[0]);
    for (std::size_t i = 0; i + 1 < values.size() - k; ++i) values[i] = values[i + 1] - values[i];
  }
  return coords;
}

inline BinomialBasisResult to_binomial_basis(const MultiPoly& p) {
  std::vector<Rational> coords = binomial_coordinates(p);
  NotIntegralReport report{coords, {}};
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_integer()) report.fractional.emplace_back(static_cast<unsigned>(k), coords[k]);
  if (!report.fractional.empty()) return report;
  NumericalPoly r;
  for (std::size_t k = 0; k < coords.size(); ++k) r.add(static_cast<unsigned>(k), coords[k].numerator());
  return r;
}

}  // namespace tatecirc
