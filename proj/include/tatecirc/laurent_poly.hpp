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
#include <vector>

#include "tatecirc/errors.hpp"
#include "tatecirc/rational.hpp"

namespace tatecirc {

enum class CoeffMode { integer, rational };

namespace detail {

/// Renders `coeff * atom` for one term of a sum. `atom` empty means the
/// constant term. Returns the sign separately so callers can join with
/// " + " / " - ".
inline std::pair<bool, std::string> render_term(const Rational& coeff, const std::string& atom) {
  bool negative = coeff.sign() < 0;
  Rational mag = negative ? -coeff : coeff;
  if (atom.empty()) return {negative, mag.to_string()};
  if (mag == Rational(1)) return {negative, atom};
  return {negative, mag.to_string() + "*" + atom};
}

inline std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [neg, body] = terms[i];
    if (i == 0) {
      out += neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace detail

/// Finite Laurent polynomial in one named variable. In integer mode every
/// coefficient must be an integer, which realizes Z[v, v^-1]; rational mode
/// is Q[v, v^-1].
class LaurentPoly {
 public:
  using Terms = std::map<long, Rational>;

  explicit LaurentPoly(std::string var = "c", CoeffMode mode = CoeffMode::integer)
      : var_(std::move(var)), mode_(mode) {}

  LaurentPoly(std::string var, Terms terms, CoeffMode mode = CoeffMode::integer)
      : var_(std::move(var)), mode_(mode) {
    for (auto& [e, c] : terms) add_term(e, c);
  }

  static LaurentPoly monomial(std::string var, long exp, const Rational& coeff = 1,
                              CoeffMode mode = CoeffMode::integer) {
    LaurentPoly p(std::move(var), mode);
    p.add_term(exp, coeff);
    return p;
  }

  static LaurentPoly constant(std::string var, const Rational& c, CoeffMode mode = CoeffMode::integer) {
    return monomial(std::move(var), 0, c, mode);
  }

  const std::string& variable() const { return var_; }
  CoeffMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  long min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  long max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Rational coefficient(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds `c * var^e` in place, dropping the term if it cancels.
  void add_term(long e, const Rational& c) {
    if (c.is_zero()) return;
    if (mode_ == CoeffMode::integer && !c.is_integer())
      throw NotIntegral("coefficient " + c.to_string() + " is not an integer in Z[" + var_ + "," +
                        var_ + "^-1]");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPoly with_mode(CoeffMode m) const {
    LaurentPoly r(var_, m);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check(o);
    widen(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check(o);
    widen(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check(b);
    LaurentPoly r(a.var_, joint_mode(a, b));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r(var_, mode_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  LaurentPoly scaled(const Rational& s) const {
    LaurentPoly r(var_, mode_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  /// Multiplication by var^k.
  LaurentPoly shifted(long k) const {
    LaurentPoly r(var_, mode_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  LaurentPoly pow(unsigned long n) const {
    LaurentPoly r = constant(var_, 1, mode_);
    LaurentPoly base = *this;
    while (n) {
      if (n & 1) r = r * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return r;
  }

  /// Units of Z[v,v^-1] and Q[v,v^-1] are the monomials (with +-1 coefficient
  /// in integer mode).
  bool is_unit() const {
    if (terms_.size() != 1) return false;
    const Rational& c = terms_.begin()->second;
    return mode_ == CoeffMode::rational || c == Rational(1) || c == Rational(-1);
  }

  LaurentPoly inverse() const {
    if (!is_unit()) throw RingCapabilityError(to_string() + " is not a unit");
    auto [e, c] = *terms_.begin();
    return monomial(var_, -e, c.inverse(), mode_);
  }

  Rational evaluate(const Rational& x) const {
    Rational r;
    for (const auto& [e, c] : terms_) r += c * x.pow(e);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  /// Increasing exponent order, e.g. `c^-2 + 3 + 2*c`.
  std::string to_string() const {
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& [e, c] : terms_) parts.push_back(detail::render_term(c, atom(e)));
    return detail::join_terms(parts);
  }

  std::string atom(long e) const {
    if (e == 0) return "";
    if (e == 1) return var_;
    return var_ + "^" + std::to_string(e);
  }

 private:
  void check(const LaurentPoly& o) const {
    if (var_ != o.var_) throw VariableMismatch("Laurent variables differ: " + var_ + " vs " + o.var_);
  }
  void widen(const LaurentPoly& o) {
    if (o.mode_ == CoeffMode::rational) mode_ = CoeffMode::rational;
  }
  static CoeffMode joint_mode(const LaurentPoly& a, const LaurentPoly& b) {
    return a.mode_ == CoeffMode::integer && b.mode_ == CoeffMode::integer ? CoeffMode::integer
                                                                         : CoeffMode::rational;
  }

  std::string var_;
  CoeffMode mode_;
  Terms terms_;
};

}  // namespace tatecirc
