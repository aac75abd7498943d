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

#include <string>
#include <utility>

#include "tatecirc/errors.hpp"
#include "tatecirc/multi_poly.hpp"

namespace tatecirc {

/// Element of Q(v) for one generator v, kept as num/den with gcd(num, den) = 1,
/// both with integer coefficients, jointly primitive, and a denominator with
/// positive leading coefficient. That form is unique, so equality is
/// structural.
class RationalFunction {
 public:
  explicit RationalFunction(const std::string& var = "beta")
      : num_({var}), den_(MultiPoly::constant({var}, 1)) {}

  RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    upoly::require_univariate(num_);
    upoly::require_univariate(den_);
    if (num_.generators() != den_.generators()) throw VariableMismatch("RationalFunction: generator mismatch");
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize(true);
  }

  static RationalFunction from_poly(const MultiPoly& p) {
    return RationalFunction(p, MultiPoly::constant(p.generators(), 1));
  }
  static RationalFunction constant(const std::string& var, const Rational& c) {
    return from_poly(MultiPoly::constant({var}, c));
  }

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  const std::string& variable() const { return num_.generators().front(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// The polynomial num/den when the denominator is constant.
  MultiPoly as_polynomial() const {
    if (!is_polynomial()) throw PreconditionError("RationalFunction: " + to_string() + " is not a polynomial");
    return num_.scaled(den_.constant_term().inverse());
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_, Tag{});
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Tag{});
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction(a.variable());
    // Cross-cancel first so the joint gcd stays small.
    MultiPoly g1 = upoly::gcd(a.num_, b.den_);
    MultiPoly g2 = upoly::gcd(b.num_, a.den_);
    MultiPoly n1 = upoly::divmod(a.num_, g1).first, d2 = upoly::divmod(b.den_, g1).first;
    MultiPoly n2 = upoly::divmod(b.num_, g2).first, d1 = upoly::divmod(a.den_, g2).first;
    RationalFunction r(n1 * n2, d1 * d2, Tag{});
    return r;
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
  }
  RationalFunction scaled(const Rational& s) const {
    return RationalFunction(num_.scaled(s), den_, Tag{});
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rational evaluate(const Rational& x) const {
    return upoly::evaluate(num_, x) / upoly::evaluate(den_, x);
  }

  /// `p` for polynomials, `(p)/(q)` otherwise.
  std::string to_string() const {
    if (den_.is_constant()) return as_polynomial().to_string();
    auto wrap = [](const MultiPoly& p) {
      std::string s = p.to_string();
      return s.find_first_of(" */-^") != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  struct Tag {};
  // Cross-cancelled inputs still need the joint gcd removed after addition.
  RationalFunction(MultiPoly num, MultiPoly den, Tag) : num_(std::move(num)), den_(std::move(den)) {
    normalize(true);
  }

  void normalize(bool reduce) {
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(num_.generators(), 1);
      return;
    }
    if (reduce && !den_.is_constant()) {
      MultiPoly g = upoly::gcd(num_, den_);
      if (upoly::degree(g) > 0) {
        num_ = upoly::divmod(num_, g).first;
        den_ = upoly::divmod(den_, g).first;
      }
    }
    // Joint content: scale so all coefficients are coprime integers.
    Rational cn = upoly::content(num_), cd = upoly::content(den_);
    Integer g, l;
    mpz_gcd(g.get_mpz_t(), cn.numerator().get_mpz_t(), cd.numerator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), cn.denominator().get_mpz_t(), cd.denominator().get_mpz_t());
    Rational scale(l, g);
    if (upoly::leading_coefficient(den_).sign() < 0) scale = -scale;
    if (scale != Rational(1)) {
      num_ = num_.scaled(scale);
      den_ = den_.scaled(scale);
    }
  }

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace tatecirc
