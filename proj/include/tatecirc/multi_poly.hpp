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

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tatecirc/errors.hpp"
#include "tatecirc/laurent_poly.hpp"
#include "tatecirc/rational.hpp"

namespace tatecirc {

/// Exponent vector of up to four generators, packed 16 bits per slot with the
/// first generator in the most significant slot. Packed keys compare
/// lexicographically and multiply by addition.
class Monomial {
 public:
  static constexpr std::size_t kMaxArity = 4;
  static constexpr unsigned kMaxExponent = 0xffff;

  Monomial() = default;
  explicit Monomial(const std::vector<unsigned>& exps) {
    if (exps.size() > kMaxArity) throw std::invalid_argument("Monomial: more than 4 generators");
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  unsigned operator[](std::size_t i) const {
    return static_cast<unsigned>((key_ >> shift(i)) & kMaxExponent);
  }
  void set(std::size_t i, unsigned e) {
    if (e > kMaxExponent) throw std::overflow_error("Monomial: exponent overflow");
    key_ &= ~(std::uint64_t{kMaxExponent} << shift(i));
    key_ |= std::uint64_t{e} << shift(i);
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxArity; ++i) d += (*this)[i];
    return d;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxArity; ++i)
      if ((*this)[i] > o[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxArity; ++i) r.set(i, a[i] + b[i]);
    return r;
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxArity; ++i) r.set(i, a[i] - b[i]);
    return r;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  static unsigned shift(std::size_t i) { return static_cast<unsigned>(48 - 16 * i); }
  std::uint64_t key_ = 0;
};

/// Polynomial over Q in an ordered list of named generators.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;
  /// Renders `gen^exp` for exp >= 1; lets callers display aliases such as
  /// `c^-2` for the generator `cinv`.
  using PowerRenderer = std::function<std::string(const std::string&, unsigned)>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> gens) : gens_(std::move(gens)) {
    if (gens_.size() > Monomial::kMaxArity)
      throw std::invalid_argument("MultiPoly: at most 4 generators are supported");
  }

  static MultiPoly constant(std::vector<std::string> gens, const Rational& c) {
    MultiPoly p(std::move(gens));
    p.add_term(Monomial{}, c);
    return p;
  }
  static MultiPoly generator(std::vector<std::string> gens, std::size_t i, unsigned exp = 1,
                             const Rational& c = 1) {
    MultiPoly p(std::move(gens));
    Monomial m;
    m.set(i, exp);
    p.add_term(m, c);
    return p;
  }
  /// Univariate polynomial sum_k coeffs[k] * gen^k.
  static MultiPoly univariate(const std::string& gen, const std::vector<Rational>& coeffs) {
    MultiPoly p({gen});
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      Monomial m;
      m.set(0, static_cast<unsigned>(k));
      p.add_term(m, coeffs[k]);
    }
    return p;
  }

  const std::vector<std::string>& generators() const { return gens_; }
  std::size_t arity() const { return gens_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly r(a.gens_);
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r(gens_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  MultiPoly scaled(const Rational& s) const {
    MultiPoly r(gens_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  MultiPoly pow(unsigned n) const {
    MultiPoly r = constant(gens_, 1);
    MultiPoly base = *this;
    while (n) {
      if (n & 1) r = r * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return r;
  }

  /// Exact division by a single term; throws when some term is not divisible.
  MultiPoly divided_by_term(const Monomial& m, const Rational& c) const {
    MultiPoly r(gens_);
    for (const auto& [mt, ct] : terms_) {
      if (!m.divides(mt)) throw RingCapabilityError("MultiPoly: inexact monomial division");
      r.terms_.emplace(mt / m, ct / c);
    }
    return r;
  }

  /// Replaces generator `i` by `value` (a polynomial over the same generators).
  MultiPoly substitute(std::size_t i, const MultiPoly& value) const {
    check(value);
    MultiPoly r(gens_);
    std::map<unsigned, MultiPoly> powers;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      unsigned e = m[i];
      rest.set(i, 0);
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
      MultiPoly term(gens_);
      term.add_term(rest, c);
      r += term * it->second;
    }
    return r;
  }

  /// Re-expresses this polynomial over a superset of its generators.
  MultiPoly embedded(const std::vector<std::string>& target) const {
    std::vector<std::size_t> slot(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      auto it = std::find(target.begin(), target.end(), gens_[i]);
      if (it == target.end()) throw VariableMismatch("MultiPoly: generator " + gens_[i] + " missing from target");
      slot[i] = static_cast<std::size_t>(it - target.begin());
    }
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
      Monomial t;
      for (std::size_t i = 0; i < gens_.size(); ++i) t.set(slot[i], m[i]);
      r.add_term(t, c);
    }
    return r;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  /// Value at a point; `point[i]` is the value of generator i.
  Rational evaluate(const std::vector<Rational>& point) const {
    Rational r;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < gens_.size(); ++i) t *= point[i].pow(m[i]);
      r += t;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.gens_ == b.gens_ && a.terms_ == b.terms_;
  }

  /// Graded order, lowest total degree first.
  std::string to_string(const PowerRenderer& power = {}) const {
    std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      unsigned da = a.first.total_degree(), db = b.first.total_degree();
      if (da != db) return da < db;
      return a.first > b.first;
    });
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& [m, c] : sorted) {
      std::string atom;
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (m[i] == 0) continue;
        if (!atom.empty()) atom += "*";
        if (power) {
          atom += power(gens_[i], m[i]);
        } else {
          atom += gens_[i];
          if (m[i] != 1) atom += "^" + std::to_string(m[i]);
        }
      }
      parts.push_back(detail::render_term(c, atom));
    }
    return detail::join_terms(parts);
  }

  std::string ring_name() const {
    std::string s = "Q[";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + gens_[i];
    return s + "]";
  }

 private:
  void check(const MultiPoly& o) const {
    if (gens_ != o.gens_) throw VariableMismatch("MultiPoly: generator lists differ: " + ring_name() + " vs " + o.ring_name());
  }

  std::vector<std::string> gens_;
  Terms terms_;
};

/// Univariate helpers; every argument must have exactly one generator.
namespace upoly {

inline void require_univariate(const MultiPoly& p) {
  if (p.arity() != 1) throw PreconditionError("expected a univariate polynomial, got " + p.ring_name());
}

inline int degree(const MultiPoly& p) {
  require_univariate(p);
  return p.is_zero() ? -1 : static_cast<int>(p.terms().rbegin()->first[0]);
}

inline Rational leading_coefficient(const MultiPoly& p) {
  require_univariate(p);
  return p.is_zero() ? Rational(0) : p.terms().rbegin()->second;
}

/// Lowest exponent carrying a nonzero coefficient.
inline unsigned valuation(const MultiPoly& p) {
  require_univariate(p);
  return p.is_zero() ? 0u : p.terms().begin()->first[0];
}

inline std::vector<Rational> dense(const MultiPoly& p) {
  std::vector<Rational> v(static_cast<std::size_t>(degree(p) + 1));
  for (const auto& [m, c] : p.terms()) v[m[0]] = c;
  return v;
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("upoly::divmod by zero");
  const std::string& g = a.generators().at(0);
  std::vector<Rational> r = dense(a);
  std::vector<Rational> d = dense(b);
  int db = static_cast<int>(d.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) return {MultiPoly({g}), a};
  std::vector<Rational> q(r.size() - static_cast<std::size_t>(db));
  Rational lead_inv = d.back().inverse();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[static_cast<std::size_t>(i)].is_zero()) continue;
    Rational f = r[static_cast<std::size_t>(i)] * lead_inv;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * d[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {MultiPoly::univariate(g, q), MultiPoly::univariate(g, r)};
}

/// Monic gcd over Q (gcd(0,0) = 0).
inline MultiPoly gcd(MultiPoly a, MultiPoly b) {
  if (a.is_zero() && b.is_zero()) return a;
  // Monomial fast path: gcd(p, c*x^m) = x^min(m, val p).
  for (const MultiPoly* mono : {&a, &b}) {
    const MultiPoly& other = mono == &a ? b : a;
    if (mono->is_monomial() && !other.is_zero()) {
      unsigned e = std::min(valuation(*mono), valuation(other));
      return MultiPoly::generator(a.generators(), 0, e);
    }
  }
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.scaled(leading_coefficient(a).inverse());
}

/// Positive rational c with p/c having integer coprime coefficients.
inline Rational content(const MultiPoly& p) {
  Integer num = 0, den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  }
  if (num == 0) return 1;
  return Rational(num, den);
}

inline Rational evaluate(const MultiPoly& p, const Rational& x) { return p.evaluate({x}); }

}  // namespace upoly

}  // namespace tatecirc
