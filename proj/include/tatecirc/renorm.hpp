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
#include <vector>

#include "tatecirc/report.hpp"
#include "tatecirc/trunc_series.hpp"

/// The three ratio series b/c^-1, beta/q^-1 and b/beta as truncated series in
/// T over Q[x, y], with x standing for c^-1 and y for q^-1. Every quotient is
/// formed by stripping a monomial factor and inverting a series with
/// constant term 1, then checked by multiplying back.
namespace tatecirc::renorm {

using RatioSeries = TruncSeries<MultiPoly>;

inline const std::vector<std::string>& generators() {
  static const std::vector<std::string> g{"x", "y"};
  return g;
}

inline const Ring<MultiPoly>& ring() {
  static const Ring<MultiPoly> r = Ring<MultiPoly>::of(MultiPoly(generators()));
  return r;
}

inline MultiPoly gen(std::size_t i) { return MultiPoly::generator(generators(), i); }
inline MultiPoly constant(const Rational& c) { return MultiPoly::constant(generators(), c); }

namespace detail {

/// log(1 + a T) for a polynomial a, through T^order.
inline RatioSeries log_one_plus(const MultiPoly& a, long order) {
  return series_log(RatioSeries::constant(ring(), ring().one, order) + RatioSeries::monomial(ring(), a, 1, order));
}

/// s / T with s of valuation >= 1, re-indexed from 0.
inline RatioSeries drop_t(const RatioSeries& s) {
  auto sh = s.shifted(-1);
  return RatioSeries::from_function(ring(), 0, sh.order(), [&](long k) { return sh[k]; });
}

/// Divides every coefficient by the generator `i`.
inline RatioSeries divide_by_generator(const RatioSeries& s, std::size_t i) {
  Monomial m;
  m.set(i, 1);
  return RatioSeries::from_function(ring(), s.low(), s.order(), [&](long k) { return s[k].divided_by_term(m, 1); });
}

/// -log(1 - g T)/(g T) for generator g, with its multiply-back check.
inline RatioSeries log_ratio(std::size_t i, long order, Report* rep) {
  auto numerator = -log_one_plus(-gen(i), order + 1);
  auto r = divide_by_generator(drop_t(numerator), i);
  if (rep) {
    auto back = r * RatioSeries::monomial(ring(), gen(i), 1, order + 1);
    rep->add(compare_series("(" + generators()[i] + " T) * [-log(1 - " + generators()[i] + " T)/(" + generators()[i] +
                                " T)] = -log(1 - " + generators()[i] + " T)",
                            numerator, back, order + 1));
  }
  return r;
}

/// T^-1 log(1 + T).
inline RatioSeries log1p_over_t(long order) { return drop_t(log_one_plus(constant(1), order + 1)); }

}  // namespace detail

struct RatioResult {
  RatioSeries series;
  Report report;
};

/// b/c^-1 ~ -log(1 - x T)/(x T): coefficient of T^k is x^k/(k+1).
inline RatioResult b_over_cinv(long order) {
  if (order < 0) throw PreconditionError("b_over_cinv: negative order");
  RatioResult out{RatioSeries(ring(), 0, 0), Report{"renorm", order, 0, {}, {}}};
  out.series = detail::log_ratio(0, order, &out.report);
  return out;
}

/// beta/q^-1 ~ -log(1 - y T)/(y log(1 + T)).
inline RatioResult beta_over_qinv(long order) {
  if (order < 0) throw PreconditionError("beta_over_qinv: negative order");
  RatioResult out{RatioSeries(ring(), 0, 0), Report{"renorm", order, 0, {}, {}}};
  auto numerator = -detail::log_one_plus(-gen(1), order + 1);
  auto y_log = detail::log_one_plus(constant(1), order + 1).scaled(gen(1));
  auto stripped = detail::divide_by_generator(detail::drop_t(numerator), 1);
  out.series = stripped * series_inverse(detail::log1p_over_t(order));
  auto back = out.series * y_log.normalized();
  out.report.add(compare_series("[beta/q^-1] * y log(1 + T) = -log(1 - y T)", numerator, back, order + 1));
  return out;
}

/// b/beta ~ T^-1 log(1 + T) * log(1 - x T)/log(1 - y T), with the scale
/// factor x/y of the log quotient removed so the series has constant term 1.
inline RatioResult b_over_beta(long order) {
  if (order < 0) throw PreconditionError("b_over_beta: negative order");
  RatioResult out{RatioSeries(ring(), 0, 0), Report{"renorm", order, 0, {}, {}}};
  auto rx = detail::log_ratio(0, order, nullptr);
  auto ry = detail::log_ratio(1, order, nullptr);
  auto l = detail::log1p_over_t(order);
  out.series = l * rx * series_inverse(ry);
  out.report.add(compare_series("[b/beta] * [-log(1 - y T)/(y T)] = T^-1 log(1 + T) * [-log(1 - x T)/(x T)]",
                                l * rx, out.series * ry, order));
  auto via_ratios = b_over_cinv(order).series * series_inverse(beta_over_qinv(order).series);
  out.report.add(compare_series("b/beta = (b/c^-1) (beta/q^-1)^-1 after removing scales", via_ratios, out.series, order));
  return out;
}

/// Substitutes y := x in every coefficient.
inline RatioSeries diagonal(const RatioSeries& s) {
  return RatioSeries::from_function(ring(), s.low(), s.order(), [&](long k) { return s[k].substitute(1, gen(0)); });
}

/// All renormalization identities at one order.
inline Report verify_renorm(long order) {
  Report rep{"renorm", order, 0, {}, {}};
  auto bc = b_over_cinv(order);
  auto bq = beta_over_qinv(order);
  auto bb = b_over_beta(order);
  rep.append(bc.report);
  rep.append(bq.report);
  rep.append(bb.report);

  auto l = detail::log1p_over_t(order);
  rep.add(compare_series("b/beta at y := x equals T^-1 log(1 + T)", l, diagonal(bb.series), order));

  // (x/y) b/beta * beta/q^-1 * y = b/c^-1 * x, cleared of the y denominator.
  auto lhs = (bb.series * bq.series).scaled(gen(0));
  auto rhs = bc.series.scaled(gen(0));
  rep.add(compare_series("(b/beta)(beta/q^-1) q^-1 = (b/c^-1) c^-1", rhs, lhs, order));

  for (const auto* s : {&bc.series, &bq.series, &bb.series})
    rep.add(Check::that("ratio series has constant term 1", (*s)[0] == ring().one, (*s)[0].to_string()));
  return rep;
}

}  // namespace tatecirc::renorm
