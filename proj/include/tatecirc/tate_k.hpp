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
#include <optional>
#include <stdexcept>
#include <variant>
#include <string>
#include <vector>

#include "tatecirc/laurent_poly.hpp"
#include "tatecirc/numerical_poly.hpp"
#include "tatecirc/rational_function.hpp"
#include "tatecirc/report.hpp"
#include "tatecirc/trunc_series.hpp"

/// Tate K-theory of the circle: the localization Z[q, q^-1, (1-q)^-1] of the
/// representation ring, its partial-fraction splitting onto Z[beta_*], the
/// binomial series (1+T)^beta and the q-series it determines.
namespace tatecirc::tate_k {

/// p / (1 - q) exactly; p must vanish at q = 1.
inline LaurentPoly divide_by_one_minus_q(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  if (!p.evaluate(1).is_zero()) throw PreconditionError("divide_by_one_minus_q: " + p.to_string() + " is nonzero at q = 1");
  // p = q^m P(q); synthetic division of P by (q - 1), then negate.
  long m = p.min_exponent();
  long d = p.max_exponent() - m;
  std::vector<Rational> coeffs(static_cast<std::size_t>(d + 1));
  for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e - m)] = c;
  LaurentPoly r(p.variable(), p.mode());
  Rational carry;
  for (long i = d; i >= 1; --i) {
    carry += coeffs[static_cast<std::size_t>(i)];
    r.add_term(m + i - 1, -carry);
  }
  return r;
}

/// numerator / (1 - q)^k with integer Laurent numerator, reduced so that the
/// numerator does not vanish at q = 1 whenever k > 0.
class TateKElem {
 public:
  TateKElem() : num_("q") {}
  explicit TateKElem(const LaurentPoly& numerator, unsigned denom_power = 0)
      : num_(numerator.with_mode(CoeffMode::integer)), k_(denom_power) {
    if (numerator.variable() != "q") throw VariableMismatch("TateKElem expects variable q, got " + numerator.variable());
    normalize();
  }

  static TateKElem q(long e, const Integer& coeff = 1) {
    return TateKElem(LaurentPoly::monomial("q", e, Rational(coeff)));
  }
  static TateKElem constant(const Integer& c) { return q(0, c); }
  /// (1 - q)^-k.
  static TateKElem pole(unsigned k) { return TateKElem(LaurentPoly::constant("q", 1), k); }

  const LaurentPoly& numerator() const { return num_; }
  unsigned denom_power() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return k_ == 0; }

  friend TateKElem operator+(const TateKElem& a, const TateKElem& b) { return combine(a, b, 1); }
  friend TateKElem operator-(const TateKElem& a, const TateKElem& b) { return combine(a, b, -1); }
  friend TateKElem operator*(const TateKElem& a, const TateKElem& b) { return TateKElem(a.num_ * b.num_, a.k_ + b.k_); }
  TateKElem operator-() const { return TateKElem(-num_, k_); }
  friend bool operator==(const TateKElem& a, const TateKElem& b) { return a.k_ == b.k_ && a.num_ == b.num_; }

  /// Units are +-q^m (1 - q)^j.
  std::optional<TateKElem> inverse() const {
    if (num_.is_unit()) return TateKElem(num_.inverse() * one_minus_q().pow(k_), 0);
    // numerator = +-q^m (1-q)^j
    LaurentPoly n = num_;
    unsigned j = 0;
    while (!n.is_zero() && n.evaluate(1).is_zero()) {
      n = divide_by_one_minus_q(n);
      ++j;
    }
    if (!n.is_unit()) return std::nullopt;
    return TateKElem(n.inverse() * one_minus_q().pow(k_), j);
  }

  TateKElem pow(long e) const {
    TateKElem base = *this;
    if (e < 0) {
      auto inv = inverse();
      if (!inv) throw RingCapabilityError(to_string() + " is not a unit of Z[q, q^-1, (1 - q)^-1]");
      base = *inv;
      e = -e;
    }
    TateKElem r = constant(1);
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  /// `num` or `(num) * (1 - q)^-k`.
  std::string to_string() const {
    if (k_ == 0) return num_.to_string();
    std::string pole = "(1 - q)^-" + std::to_string(k_);
    if (num_ == LaurentPoly::constant("q", 1)) return pole;
    std::string n = num_.to_string();
    bool single = num_.terms().size() == 1 && n[0] != '-';
    return (single ? n : "(" + n + ")") + " * " + pole;
  }

  static LaurentPoly one_minus_q() { return LaurentPoly("q", LaurentPoly::Terms{{0, 1}, {1, -1}}); }

 private:
  void normalize() {
    if (num_.is_zero()) {
      k_ = 0;
      return;
    }
    while (k_ > 0 && num_.evaluate(1).is_zero()) {
      num_ = divide_by_one_minus_q(num_);
      --k_;
    }
  }

  static TateKElem combine(const TateKElem& a, const TateKElem& b, int sign) {
    unsigned k = std::max(a.k_, b.k_);
    LaurentPoly na = a.num_ * one_minus_q().pow(k - a.k_);
    LaurentPoly nb = b.num_ * one_minus_q().pow(k - b.k_);
    return TateKElem(sign > 0 ? na + nb : na - nb, k);
  }

  LaurentPoly num_;
  unsigned k_ = 0;
};

/// poly_part + sum_j pole_coeffs[j-1] (1 - q)^-j.
struct PartialFractionForm {
  LaurentPoly poly_part{"q"};
  std::vector<Integer> pole_coeffs;  // a_1 .. a_k

  TateKElem reconstruct() const {
    TateKElem r(poly_part);
    for (std::size_t j = 0; j < pole_coeffs.size(); ++j)
      r = r + TateKElem(LaurentPoly::constant("q", Rational(pole_coeffs[j])), static_cast<unsigned>(j + 1));
    return r;
  }

  std::string to_string() const {
    std::vector<std::pair<bool, std::string>> parts;
    if (!poly_part.is_zero()) parts.emplace_back(false, poly_part.to_string());
    for (std::size_t j = 0; j < pole_coeffs.size(); ++j)
      if (pole_coeffs[j] != 0)
        parts.push_back(detail::render_term(Rational(pole_coeffs[j]), "(1 - q)^-" + std::to_string(j + 1)));
    return detail::join_terms(parts);
  }
};

/// Splits off pole parts: a_k = N(1), then N <- (N - a_k)/(1 - q), down to
/// a_1; what remains is the Laurent part.
inline PartialFractionForm partial_fractions(const TateKElem& x) {
  PartialFractionForm out;
  out.pole_coeffs.assign(x.denom_power(), Integer(0));
  LaurentPoly n = x.numerator();
  for (unsigned j = x.denom_power(); j >= 1; --j) {
    Rational a = n.evaluate(1);
    if (!a.is_integer()) throw std::logic_error("partial_fractions: non-integral pole coefficient");
    out.pole_coeffs[j - 1] = a.numerator();
    n = divide_by_one_minus_q(n - LaurentPoly::constant("q", a));
  }
  out.poly_part = n;
  return out;
}

/// The quotient map onto Z[beta_*]: (1 - q)^-j -> beta_{j-1}, Laurent
/// polynomials -> 0.
inline NumericalPoly quotient_to_betas(const TateKElem& x) {
  auto pf = partial_fractions(x);
  NumericalPoly r;
  for (std::size_t j = 0; j < pf.pole_coeffs.size(); ++j) r.add(static_cast<unsigned>(j), pf.pole_coeffs[j]);
  return r;
}

/// psi^k: q^n -> q^{kn}.
inline LaurentPoly adams_on_laurent(long k, const LaurentPoly& x) {
  if (k < 1) throw PreconditionError("adams_on_laurent: k must be >= 1");
  LaurentPoly r(x.variable(), x.mode());
  for (const auto& [e, c] : x.terms()) r.add_term(k * e, c);
  return r;
}

inline const Ring<NumericalPoly>& numerical_ring() {
  static const Ring<NumericalPoly> ring = Ring<NumericalPoly>::of(NumericalPoly{});
  return ring;
}

inline const Ring<MultiPoly>& beta_ring() {
  static const Ring<MultiPoly> ring = Ring<MultiPoly>::of(MultiPoly({"beta"}));
  return ring;
}

inline const Ring<RationalFunction>& beta_field() {
  static const Ring<RationalFunction> ring = Ring<RationalFunction>::of(RationalFunction("beta"));
  return ring;
}

/// (1 + T)^beta = sum_k beta_k T^k with beta_k = binom(beta, k).
inline TruncSeries<NumericalPoly> binomial_series(long order) {
  if (order < 0) throw PreconditionError("binomial_series: negative order");
  return TruncSeries<NumericalPoly>::from_function(numerical_ring(), 0, order, [](long k) {
    return NumericalPoly::basis(static_cast<unsigned>(k));
  });
}

/// (1 + T)^{s beta} over Q[beta] for s = +-1, coefficients binom(s beta, k).
inline TruncSeries<MultiPoly> binomial_series_poly(int sign, long order) {
  auto beta = MultiPoly::generator({"beta"}, 0).scaled(sign);
  auto one = MultiPoly::constant({"beta"}, 1);
  return TruncSeries<MultiPoly>::from_function(beta_ring(), 0, order, [&](long k) {
    return binom_generic(beta, one, static_cast<unsigned>(k));
  });
}

/// Coefficients of a bivariate truncated series, [i][j] for T0^i T1^j.
template <class R>
using Grid = std::vector<std::vector<R>>;

struct CartierResult {
  Grid<NumericalPoly> lhs;  // beta(T0 + T1 + T0 T1)
  Grid<NumericalPoly> rhs;  // beta(T0) beta(T1)
  Report report;
};

/// beta(T0 +_Gm T1) = beta(T0) beta(T1) with the multiplicative formal group
/// law T0 +_Gm T1 = T0 + T1 + T0 T1, compared coefficientwise in Z[beta_*]
/// for all T0^i T1^j with i <= n0, j <= n1.
inline CartierResult cartier_check(long n0, long n1) {
  if (n0 < 1 || n1 < 1) throw PreconditionError("cartier_check: orders must be >= 1");
  auto rows = static_cast<std::size_t>(n0 + 1), cols = static_cast<std::size_t>(n1 + 1);
  auto mul = [&](const Grid<Integer>& a, const Grid<Integer>& b) {
    Grid<Integer> r(rows, std::vector<Integer>(cols, Integer(0)));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        for (std::size_t k = 0; i + k < rows; ++k)
          for (std::size_t l = 0; j + l < cols; ++l)
            if (b[k][l] != 0) r[i + k][j + l] += a[i][j] * b[k][l];
      }
    return r;
  };
  Grid<Integer> fgl(rows, std::vector<Integer>(cols, Integer(0)));
  fgl[1][0] = 1;
  fgl[0][1] = 1;
  fgl[1][1] = 1;

  CartierResult out;
  out.lhs.assign(rows, std::vector<NumericalPoly>(cols));
  Grid<Integer> power(rows, std::vector<Integer>(cols, Integer(0)));
  power[0][0] = 1;
  for (long k = 0; k <= n0 + n1; ++k) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (power[i][j] != 0) out.lhs[i][j].add(static_cast<unsigned>(k), power[i][j]);
    power = mul(power, fgl);
  }
  out.rhs.assign(rows, std::vector<NumericalPoly>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out.rhs[i][j] = numerical_mul(NumericalPoly::basis(static_cast<unsigned>(i)), NumericalPoly::basis(static_cast<unsigned>(j)));

  out.report = Report{"cartier", std::max(n0, n1), 0, {}, {}};
  Check c = Check::ok("beta(T0 + T1 + T0 T1) = beta(T0) beta(T1) through (" + std::to_string(n0) + "," +
                      std::to_string(n1) + ")");
  for (std::size_t i = 0; i < rows && c.pass; ++i)
    for (std::size_t j = 0; j < cols && c.pass; ++j)
      if (!(out.lhs[i][j] == out.rhs[i][j])) {
        std::string at = "[T0^" + std::to_string(i) + " T1^" + std::to_string(j) + "] ";
        c = Check::failed(c.identity, Defect{static_cast<long>(i + j), at + out.rhs[i][j].to_string(),
                                             at + out.lhs[i][j].to_string()});
      }
  out.report.add(c);
  return out;
}

/// q^-1 solved from (1 - q^-1 T)^-1 = (1 + T)^beta: (1 - (1 + T)^-beta)/T over Q[beta].
inline TruncSeries<MultiPoly> q_inverse_series(long order) {
  if (order < 0) throw PreconditionError("q_inverse_series: negative order");
  auto ring = beta_ring();
  auto lhs = TruncSeries<MultiPoly>::constant(ring, ring.one, order + 1) - binomial_series_poly(-1, order + 1);
  auto shifted = lhs.shifted(-1);
  return TruncSeries<MultiPoly>::from_function(ring, 0, order, [&](long k) { return shifted[k]; });
}

/// Both sides of (1 - q^-1 T)^-1 = (1 + T)^beta: coordinate sequences under
/// beta_k <-> q^-k, and the defining relation for the solved q^-1 in
/// Q[beta][[T]]. `defect` adds 1 to the left-hand coordinate at T^defect.
inline Report verify_prop2(long order, std::optional<long> defect = std::nullopt) {
  if (order < 1) throw PreconditionError("verify_prop2: order must be >= 1");
  Report rep{"prop2", order, 0, {}, {}};

  auto lring = Ring<LaurentPoly>::of(LaurentPoly("q"));
  auto geom = series_inverse(TruncSeries<LaurentPoly>::constant(lring, lring.one, order) -
                             TruncSeries<LaurentPoly>::monomial(lring, LaurentPoly::monomial("q", -1), 1, order));
  auto binom = binomial_series(order);
  Check coords = Check::ok("coordinates of (1 - q^-1 T)^-1 and (1 + T)^beta agree under beta_k <-> q^-k");
  for (long k = 0; k <= order; ++k) {
    const LaurentPoly& g = geom[k];
    Integer lc = g.coefficient(-k).numerator();
    if (defect && *defect == k) lc += 1;
    bool g_ok = g.is_zero() || (g.terms().size() == 1 && g.min_exponent() == -k);
    const NumericalPoly& b = binom[k];
    bool b_ok = b.is_zero() || (b.coords().size() == 1 && b.coords().begin()->first == k);
    Integer rc = b.coord(static_cast<unsigned>(k));
    if (!g_ok || !b_ok || lc != rc) {
      coords = Check::failed(coords.identity, Defect{k, rc.get_str(), lc.get_str()});
      break;
    }
  }
  rep.add(coords);

  auto ring = beta_ring();
  auto qinv = q_inverse_series(order);
  auto lhs = series_inverse(TruncSeries<MultiPoly>::constant(ring, ring.one, order) - qinv.shifted(1));
  auto rhs = binom.map_coefficients([](const NumericalPoly& p) { return p.to_polynomial("beta"); }, ring);
  rep.add(compare_series("(1 - q^-1 T)^-1 = (1 + T)^beta with q^-1 = (1 - (1 + T)^-beta)/T", rhs, lhs, order));
  return rep;
}

/// q = T (1 - (1 + T)^-beta)^-1 over Q(beta), the reciprocal of the solved q^-1.
inline TruncSeries<RationalFunction> q_series(long order) {
  auto qinv = q_inverse_series(order).map_coefficients(
      [](const MultiPoly& p) { return RationalFunction::from_poly(p); }, beta_field());
  return series_inverse(qinv);
}

/// q^-1 lifted to Q(beta), for products with q_series.
inline TruncSeries<RationalFunction> q_inverse_series_rf(long order) {
  return q_inverse_series(order).map_coefficients(
      [](const MultiPoly& p) { return RationalFunction::from_poly(p); }, beta_field());
}

struct IntegralityEntry {
  std::string series;  // "q" or "beta*q"
  long k = 0;
  std::string value;
  bool polynomial = false;
  std::optional<bool> integer_coords;  // set when polynomial
  std::vector<Rational> coords;        // binomial-basis coordinates when polynomial
};

/// For each T^k coefficient of q and of beta*q: whether it is a polynomial in
/// beta, and if so whether its binomial-basis coordinates are integers.
/// Descriptive only.
inline std::vector<IntegralityEntry> integrality_report(long order) {
  if (order < 0) throw PreconditionError("integrality_report: negative order");
  auto q = q_series(order);
  auto beta = RationalFunction::from_poly(MultiPoly::generator({"beta"}, 0));
  std::vector<IntegralityEntry> out;
  for (const char* name : {"q", "beta*q"}) {
    bool scaled = std::string(name) == "beta*q";
    for (long k = 0; k <= order; ++k) {
      RationalFunction f = scaled ? q[k] * beta : q[k];
      IntegralityEntry e{name, k, f.to_string(), f.is_polynomial(), std::nullopt, {}};
      if (e.polynomial) {
        auto basis = to_binomial_basis(f.as_polynomial());
        e.integer_coords = std::holds_alternative<NumericalPoly>(basis);
        e.coords = binomial_coordinates(f.as_polynomial());
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

inline std::string describe(const IntegralityEntry& e) {
  std::string s = "[" + e.series + "] T^" + std::to_string(e.k) + ": " + e.value + "; ";
  if (!e.polynomial) return s + "not a polynomial in beta";
  s += "polynomial, binomial coordinates (";
  for (std::size_t i = 0; i < e.coords.size(); ++i) s += (i ? ", " : "") + e.coords[i].to_string();
  s += ") ";
  return s + (*e.integer_coords ? "integral" : "not integral");
}

}  // namespace tatecirc::tate_k
