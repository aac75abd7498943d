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
#include <optional>
#include <string>
#include <vector>

#include "tatecirc/bernoulli.hpp"
#include "tatecirc/divided_power.hpp"
#include "tatecirc/laurent_poly.hpp"
#include "tatecirc/multi_poly.hpp"
#include "tatecirc/report.hpp"
#include "tatecirc/trunc_series.hpp"

/// Tate cohomology of the circle with integer coefficients: the split exact
/// sequence 0 -> Z[c] -> Z[c, c^-1] -> c^-1 Z[c^-1] -> 0, its boundary map
/// into the divided power algebra Z[b_*], and the T-graded series built on it.
namespace tatecirc::tate_h {

/// Element of Z[c, c^-1]; c^k sits in cohomological degree 2k.
class TateHElem {
 public:
  TateHElem() : poly_("c", CoeffMode::integer) {}
  explicit TateHElem(const LaurentPoly& p) : poly_(p.with_mode(CoeffMode::integer)) {
    if (p.variable() != "c") throw VariableMismatch("TateHElem expects variable c, got " + p.variable());
  }
  /// coeff * c^k.
  static TateHElem c(long k, const Integer& coeff = 1) {
    return TateHElem(LaurentPoly::monomial("c", k, Rational(coeff)));
  }

  const LaurentPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  Integer coefficient(long k) const { return poly_.coefficient(k).numerator(); }

  friend TateHElem operator+(const TateHElem& a, const TateHElem& b) { return TateHElem(a.poly_ + b.poly_); }
  friend TateHElem operator-(const TateHElem& a, const TateHElem& b) { return TateHElem(a.poly_ - b.poly_); }
  friend TateHElem operator*(const TateHElem& a, const TateHElem& b) { return TateHElem(a.poly_ * b.poly_); }
  friend bool operator==(const TateHElem&, const TateHElem&) = default;

  std::string to_string() const { return poly_.to_string(); }

 private:
  LaurentPoly poly_;
};

/// Projection onto the split image c^-1 Z[c^-1] of the quotient: keeps the
/// strictly negative powers of c.
inline TateHElem pi_minus(const TateHElem& x) {
  LaurentPoly r("c");
  for (const auto& [e, c] : x.poly().terms())
    if (e < 0) r.add_term(e, c);
  return TateHElem(r);
}

/// Quotient isomorphism composed with pi_minus: c^-k -> b_{k-1} for k >= 1,
/// c^k -> 0 for k >= 0.
inline DividedPowerElem boundary(const TateHElem& x) {
  DividedPowerElem r;
  for (const auto& [e, c] : x.poly().terms())
    if (e < 0) r.add(static_cast<unsigned>(-e - 1), c.numerator());
  return r;
}

/// The inclusion Z[c] -> Z[c, c^-1]; rejects negative exponents.
inline TateHElem include_cohomology(const LaurentPoly& p) {
  if (!p.is_zero() && p.min_exponent() < 0)
    throw PreconditionError("include_cohomology: " + p.to_string() + " has negative powers of c");
  return TateHElem(p);
}

/// P(x)P(y) + P(xy) - P(P(x)y) - P(xP(y)) for P = pi_minus. A weight -1
/// Rota-Baxter operator makes this vanish for all x, y.
inline TateHElem rota_baxter_defect(const TateHElem& x, const TateHElem& y) {
  TateHElem px = pi_minus(x), py = pi_minus(y);
  return px * py + pi_minus(x * y) - pi_minus(px * y) - pi_minus(x * py);
}

/// Kronecker pairing between Z[c] and Z[b_*]: (c^i, b_j) = delta_ij.
inline Integer kronecker_pairing(const LaurentPoly& cohomology, const DividedPowerElem& homology) {
  if (!cohomology.is_zero() && cohomology.min_exponent() < 0)
    throw PreconditionError("kronecker_pairing: cohomology class must lie in Z[c]");
  Integer r = 0;
  for (const auto& [e, c] : cohomology.terms()) r += c.numerator() * homology.coord(static_cast<unsigned>(e));
  return r;
}

/// Which graded module a T-series takes its coefficients in.
enum class ModuleTag {
  TateH,  // T^k carries a multiple of c^-k in Z[c, c^-1]
  CohH,   // as TateH but supported on k <= 0, i.e. in Z[c]
  HomH,   // T^k carries a multiple of b_k in Z[b_*] (b_-1 := 0)
};

inline const char* to_string(ModuleTag t) {
  switch (t) {
    case ModuleTag::TateH: return "TateH";
    case ModuleTag::CohH: return "CohH";
    case ModuleTag::HomH: return "HomH";
  }
  return "?";
}

/// A degree-zero series sum_k v_k T^k with v_k in the degree -2k piece of
/// the tagged module. Each piece has rank one (or zero), so one integer per
/// k records the coefficient and the degree constraint holds by construction.
class GradedTSeries {
 public:
  GradedTSeries(ModuleTag tag, long low, long order, std::vector<Integer> coords = {})
      : tag_(tag), low_(low), order_(order), coords_(std::move(coords)) {
    if (order_ < low_) throw PreconditionError("GradedTSeries: order below lowest index");
    coords_.resize(static_cast<std::size_t>(order_ - low_ + 1), Integer(0));
    for (long k = low_; k <= order_; ++k) {
      if (coord(k) == 0) continue;
      if (tag_ == ModuleTag::CohH && k > 0)
        throw PreconditionError("GradedTSeries[CohH]: support must satisfy k <= 0");
      if (tag_ == ModuleTag::HomH && k < 0)
        throw PreconditionError("GradedTSeries[HomH]: b_k vanishes for k < 0");
    }
  }

  ModuleTag tag() const { return tag_; }
  long low() const { return low_; }
  long order() const { return order_; }
  const std::vector<Integer>& coords() const { return coords_; }

  Integer coord(long k) const {
    if (k > order_) throw TruncationError("GradedTSeries: T^" + std::to_string(k) + " beyond order");
    if (k < low_) return 0;
    return coords_[static_cast<std::size_t>(k - low_)];
  }
  void set_coord(long k, const Integer& v) {
    if (k < low_ || k > order_) throw std::out_of_range("GradedTSeries::set_coord");
    coords_[static_cast<std::size_t>(k - low_)] = v;
    *this = GradedTSeries(tag_, low_, order_, coords_);
  }

  /// The element of the tagged module multiplying T^k.
  std::string term_string(long k) const {
    Integer v = coord(k);
    if (tag_ == ModuleTag::HomH) return DividedPowerElem::basis(static_cast<unsigned>(std::max(k, 0L)), v).to_string();
    return TateHElem::c(-k, v).to_string();
  }

  friend GradedTSeries operator-(const GradedTSeries& a, const GradedTSeries& b) {
    if (a.tag_ != b.tag_) throw PreconditionError("GradedTSeries: module tags differ");
    long low = std::min(a.low_, b.low_), order = std::min(a.order_, b.order_);
    std::vector<Integer> c;
    for (long k = low; k <= order; ++k) c.push_back(a.coord(k) - b.coord(k));
    return GradedTSeries(a.tag_, low, order, std::move(c));
  }

  friend bool operator==(const GradedTSeries&, const GradedTSeries&) = default;

  std::string to_string() const {
    auto ring = Ring<LaurentPoly>::of(LaurentPoly("c"));
    if (tag_ == ModuleTag::HomH) {
      auto dr = Ring<DividedPowerElem>::of(DividedPowerElem{});
      std::vector<DividedPowerElem> c;
      for (long k = low_; k <= order_; ++k) c.push_back(DividedPowerElem::basis(static_cast<unsigned>(std::max(k, 0L)), coord(k)));
      return TruncSeries<DividedPowerElem>(dr, low_, order_, std::move(c)).to_string();
    }
    std::vector<LaurentPoly> c;
    for (long k = low_; k <= order_; ++k) c.push_back(TateHElem::c(-k, coord(k)).poly());
    return TruncSeries<LaurentPoly>(ring, low_, order_, std::move(c)).to_string();
  }

 private:
  ModuleTag tag_;
  long low_;
  long order_;
  std::vector<Integer> coords_;
};

inline const Ring<MultiPoly>& poly_ring(const std::string& gen) {
  static thread_local std::map<std::string, Ring<MultiPoly>> rings;
  auto it = rings.find(gen);
  if (it == rings.end()) it = rings.emplace(gen, Ring<MultiPoly>::of(MultiPoly({gen}))).first;
  return it->second;
}

/// exp(bT) = sum_k b^k/k! T^k, computed in Q[b][[T]] and read back in the
/// divided power basis (b^k/k! = b_k).
inline GradedTSeries exp_bT(long order) {
  if (order < 0) throw PreconditionError("exp_bT: negative order");
  const auto& ring = poly_ring("b");
  auto e = series_exp(TruncSeries<MultiPoly>::monomial(ring, MultiPoly::generator({"b"}, 0), 1, order));
  std::vector<Integer> coords;
  for (long k = 0; k <= order; ++k) {
    const MultiPoly& p = e[k];
    Rational a = p.coefficient(Monomial({static_cast<unsigned>(k)}));
    if (!(MultiPoly::generator({"b"}, 0, static_cast<unsigned>(k), a) == p))
      throw std::logic_error("exp_bT: coefficient of T^" + std::to_string(k) + " is not homogeneous");
    Rational coord = a * Rational(factorial(static_cast<unsigned long>(k)));
    if (!coord.is_integer()) throw NotIntegral("exp_bT: non-integral divided power coordinate");
    coords.push_back(coord.numerator());
  }
  return GradedTSeries(ModuleTag::HomH, 0, order, std::move(coords));
}

/// (1 - c^-1 T)^-1 inverted in Z[c, c^-1][[T]], read as multiples of c^-k T^k.
inline GradedTSeries geom_cinv(long order) {
  if (order < 0) throw PreconditionError("geom_cinv: negative order");
  auto ring = Ring<LaurentPoly>::of(LaurentPoly("c"));
  auto one_minus = TruncSeries<LaurentPoly>::constant(ring, ring.one, order) -
                   TruncSeries<LaurentPoly>::monomial(ring, LaurentPoly::monomial("c", -1), 1, order);
  auto g = series_inverse(one_minus);
  std::vector<Integer> coords;
  for (long k = 0; k <= order; ++k) {
    const LaurentPoly& p = g[k];
    if (!(p.is_zero() || (p.terms().size() == 1 && p.min_exponent() == -k)))
      throw std::logic_error("geom_cinv: coefficient of T^" + std::to_string(k) + " leaves degree 0");
    coords.push_back(p.coefficient(-k).numerator());
  }
  return GradedTSeries(ModuleTag::TateH, 0, order, std::move(coords));
}

/// The coordinate relabeling b_k -> c^-k from homology series to Tate series.
/// A module map only; it does not respect products.
inline GradedTSeries identify(const GradedTSeries& hom) {
  if (hom.tag() != ModuleTag::HomH) throw PreconditionError("identify: expects a HomH series");
  return GradedTSeries(ModuleTag::TateH, hom.low(), hom.order(), hom.coords());
}

/// Termwise boundary of a Tate series: coefficient c^-k T^k goes to b_{k-1} T^k.
inline TruncSeries<DividedPowerElem> boundary_termwise(const GradedTSeries& s) {
  if (s.tag() == ModuleTag::HomH) throw PreconditionError("boundary_termwise: expects a Tate series");
  auto ring = Ring<DividedPowerElem>::of(DividedPowerElem{});
  std::vector<DividedPowerElem> c;
  for (long k = s.low(); k <= s.order(); ++k) c.push_back(boundary(TateHElem::c(-k, s.coord(k))));
  return TruncSeries<DividedPowerElem>(ring, s.low(), s.order(), std::move(c));
}

/// Restricts a Tate series to the kernel description Z[c] tagged CohH; fails
/// (returns nullopt) if any T^k with k >= 1 is nonzero.
inline std::optional<GradedTSeries> as_cohomology(const GradedTSeries& s) {
  for (long k = std::max(s.low(), 1L); k <= s.order(); ++k)
    if (s.coord(k) != 0) return std::nullopt;
  return GradedTSeries(ModuleTag::CohH, s.low(), s.order(), s.coords());
}

/// Mechanical check of exp(bT) = (1 - c^-1 T)^-1: forms the difference under
/// b_k -> c^-k, compares termwise boundaries, and checks that a difference in
/// the kernel of the boundary has no T^k, k >= 1 terms. `defect` overwrites
/// the difference's T^defect coordinate with 1 for fault injection.
inline Report verify_prop1(long order, std::optional<long> defect = std::nullopt) {
  if (order < 1) throw PreconditionError("verify_prop1: order must be >= 1");
  Report rep{"prop1", order, 0, {}, {}};
  GradedTSeries lhs = identify(exp_bT(order));
  GradedTSeries rhs = geom_cinv(order);
  GradedTSeries eps = lhs - rhs;
  if (defect) eps.set_coord(*defect, 1);

  Check zero = Check::ok("exp(bT) - (1 - c^-1 T)^-1 = 0");
  for (long k = eps.low(); k <= order; ++k) {
    if (eps.coord(k) != 0) {
      zero = Check::failed(zero.identity, Defect{k, "0", eps.term_string(k)});
      break;
    }
  }
  rep.add(zero);

  rep.add(compare_series("boundary termwise: d(exp(bT)) = d((1 - c^-1 T)^-1) = sum b_{k-1} T^k",
                         boundary_termwise(lhs), boundary_termwise(rhs), order));

  auto d_eps = boundary_termwise(eps);
  bool in_kernel = d_eps.valuation() > d_eps.order();
  bool lemma = !in_kernel || as_cohomology(eps).has_value();
  rep.add(Check::that("kernel of d has no T^k, k > 0 terms", lemma));
  return rep;
}

/// b as a series in T over Q[x] with x = c^-1: -T^-1 log(1 - x T), together
/// with the check exp(b T)(1 - x T) = 1.
struct BFromC {
  TruncSeries<MultiPoly> b;
  Check check;
};

inline BFromC b_series_from_c(long order) {
  if (order < 0) throw PreconditionError("b_series_from_c: negative order");
  const auto& ring = poly_ring("x");
  auto x = MultiPoly::generator({"x"}, 0);
  auto one_minus_xT = TruncSeries<MultiPoly>::constant(ring, ring.one, order + 1) -
                      TruncSeries<MultiPoly>::monomial(ring, x, 1, order + 1);
  auto shifted = (-series_log(one_minus_xT)).shifted(-1);  // T^-1 term is log's zero constant
  auto b = TruncSeries<MultiPoly>::from_function(ring, 0, order, [&](long k) { return shifted[k]; });
  auto lhs = series_exp(b.shifted(1)) * one_minus_xT;
  auto one = TruncSeries<MultiPoly>::constant(ring, ring.one, lhs.order());
  return {b, compare_series("exp(b T) (1 - c^-1 T) = 1", one, lhs, order)};
}

/// c as a series over Q[b]: c = b^-1 w(T) with w = (c^-1 / b)^-1 and
/// c^-1 = (1 - e^{-bT})/T. Also reports which sign s makes
/// c = s b^-1 B^-(-bT) hold, with B^-(D) = D/(e^D - 1).
struct CFromB {
  TruncSeries<MultiPoly> c_inverse;  // c^-1 = (1 - e^{-bT})/T
  TruncSeries<MultiPoly> unit;       // w, so that c = b^-1 w
  int matching_sign = 0;             // +1, -1, 0 (neither) or 2 (both)
  Report report;

  /// c itself, over Q[b, b^-1].
  TruncSeries<LaurentPoly> c_laurent() const {
    auto ring = Ring<LaurentPoly>::of(LaurentPoly("b", CoeffMode::rational));
    std::vector<LaurentPoly> c;
    for (long k = 0; k <= unit.order(); ++k) {
      LaurentPoly p("b", CoeffMode::rational);
      for (const auto& [m, a] : unit[k].terms()) p.add_term(static_cast<long>(m[0]) - 1, a);
      c.push_back(p);
    }
    return TruncSeries<LaurentPoly>(ring, 0, unit.order(), std::move(c));
  }
};

/// s * B^-(-bT) over Q[b].
inline TruncSeries<MultiPoly> signed_bernoulli_in_b(int sign, long order) {
  const auto& ring = poly_ring("b");
  auto bern = bernoulli_minus(order);
  return TruncSeries<MultiPoly>::from_function(ring, 0, order, [&](long k) {
    Rational a = bern[k] * Rational(sign) * Rational(k % 2 == 0 ? 1 : -1);
    return MultiPoly::generator({"b"}, 0, static_cast<unsigned>(k), a);
  });
}

inline CFromB c_series_from_b(long order) {
  if (order < 0) throw PreconditionError("c_series_from_b: negative order");
  const auto& ring = poly_ring("b");
  auto b = MultiPoly::generator({"b"}, 0);
  Monomial b1({1});
  auto e = series_exp(TruncSeries<MultiPoly>::monomial(ring, -b, 1, order + 1));
  auto c_inv = (TruncSeries<MultiPoly>::constant(ring, ring.one, order + 1) - e).shifted(-1).truncated(order);
  c_inv = TruncSeries<MultiPoly>::from_function(ring, 0, order, [&](long k) { return c_inv[k]; });
  // c^-1 = b (1 - bT/2 + ...); strip the non-unit factor b before inverting.
  auto u = TruncSeries<MultiPoly>::from_function(ring, 0, order,
                                                [&](long k) { return c_inv[k].divided_by_term(b1, 1); });
  auto w = series_inverse(u);

  CFromB out{c_inv, w, 0, Report{"corollary", order, 0, {}, {}}};
  bool plus = !first_difference(w, signed_bernoulli_in_b(+1, order), order);
  bool minus = !first_difference(w, signed_bernoulli_in_b(-1, order), order);
  out.matching_sign = plus && minus ? 2 : (plus ? 1 : (minus ? -1 : 0));
  out.report.add(Check::that("exactly one sign s gives c = s b^-1 B^-(-bT)", plus != minus,
                             "matching signs: +1 " + std::string(plus ? "yes" : "no") + ", -1 " +
                                 (minus ? "yes" : "no")));
  if (plus != minus)
    out.report.notes.push_back("order " + std::to_string(order) + ": c = " + (plus ? "+" : "-") +
                               "b^-1 B^-(-bT); the displayed form carries the sign -1");

  // Round trip: rebuild c^-1 = b w^-1 from c and check -T^-1 log(1 - c^-1 T) = b.
  auto c_inv_again = series_inverse(w).scaled(b);
  auto one_minus = TruncSeries<MultiPoly>::constant(ring, ring.one, order + 1) - c_inv_again.shifted(1);
  auto recovered = (-series_log(one_minus)).shifted(-1);
  auto expected = TruncSeries<MultiPoly>::constant(ring, b, order);
  out.report.add(compare_series("-T^-1 log(1 - c^-1 T) = b", expected, recovered, order));
  return out;
}

}  // namespace tatecirc::tate_h
