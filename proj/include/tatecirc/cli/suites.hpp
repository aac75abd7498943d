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
#include <random>
#include <string>
#include <vector>

#include "tatecirc/bernoulli.hpp"
#include "tatecirc/expansions.hpp"
#include "tatecirc/renorm.hpp"
#include "tatecirc/report.hpp"
#include "tatecirc/tate_h.hpp"
#include "tatecirc/tate_k.hpp"

/// Named verification suites over every module.
namespace tatecirc::cli {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"prop1",       "corollary",   "bernoulli",   "divided-powers",
                                              "rota-baxter", "exactness-h", "prop2",       "q-series",
                                              "cartier",     "exactness-k", "expansions",  "adams",
                                              "renorm"};
  return names;
}

inline bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

/// Suites that accept an injected defect.
inline bool accepts_defect(const std::string& name) { return name == "prop1" || name == "prop2" || name == "all"; }

struct SuiteOptions {
  long order = 16;
  std::uint64_t seed = 1;
  std::optional<long> defect;
  int samples = 200;
};

namespace suites {

inline long capped(Report& rep, long order, long cap) {
  if (order <= cap) return order;
  rep.notes.push_back("checked at order " + std::to_string(cap) + " (suite cap) instead of " + std::to_string(order));
  return cap;
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, const std::string& var, long lo, long hi, int max_terms) {
  std::uniform_int_distribution<long> e(lo, hi);
  std::uniform_int_distribution<int> c(-5, 5), n(0, max_terms);
  LaurentPoly p(var);
  int terms = n(rng);
  for (int i = 0; i < terms; ++i) p.add_term(e(rng), c(rng));
  return p;
}

inline Report prop1(const SuiteOptions& o) {
  auto rep = tate_h::verify_prop1(o.order, o.defect);
  rep.suite = "prop1";
  return rep;
}

inline Report corollary(const SuiteOptions& o) {
  Report rep{"corollary", o.order, o.seed, {}, {}};
  long n = capped(rep, o.order, 32);
  rep.add(tate_h::b_series_from_c(n).check);
  auto top = tate_h::c_series_from_b(n);
  for (const auto& c : top.report.checks)
    if (c.identity.find("log") != std::string::npos) rep.add(c);
  std::vector<long> plus, minus, other;
  for (long k = std::min(4L, n); k <= n; ++k) {
    int s = tate_h::c_series_from_b(k).matching_sign;
    (s == 1 ? plus : s == -1 ? minus : other).push_back(k);
  }
  bool one_sign = other.empty() && (plus.empty() || minus.empty());
  rep.add(Check::that("exactly one sign s gives c = s b^-1 B^-(-bT) at every order " + std::to_string(std::min(4L, n)) +
                          ".." + std::to_string(n),
                      one_sign, std::to_string(other.size()) + " orders with no unique sign"));
  if (one_sign && !plus.empty())
    rep.notes.push_back("sign finding: c = +b^-1 B^-(-bT) at every checked order; the displayed form with a leading "
                        "minus sign does not match");
  else if (one_sign && !minus.empty())
    rep.notes.push_back("sign finding: c = -b^-1 B^-(-bT) at every checked order, as displayed");
  return rep;
}

/// B^-(D) = D/(e^D - 1) against the Pascal-recurrence Bernoulli numbers.
inline Report bernoulli(const SuiteOptions& o) {
  Report rep{"bernoulli", o.order, o.seed, {}, {}};
  long n = capped(rep, o.order, 24);
  auto series = bernoulli_minus(n);
  std::vector<Rational> pascal(static_cast<std::size_t>(n + 1), Rational(0));
  pascal[0] = Rational(1);
  for (long m = 1; m <= n; ++m) {
    Rational s(0);
    for (long k = 0; k < m; ++k) s = s + Rational(binomial(m + 1, k)) * pascal[static_cast<std::size_t>(k)];
    pascal[static_cast<std::size_t>(m)] = -s / Rational(m + 1);
  }
  Check agree = Check::ok("n! [D^n] D/(e^D - 1) = B_n (sum_k binom(n+1,k) B_k = 0)");
  Check odd = Check::ok("[D^n] D/(e^D - 1) = 0 for odd n > 1");
  for (long m = 0; m <= n; ++m) {
    Rational scaled = series[m] * Rational(factorial(static_cast<unsigned long>(m)));
    if (agree.pass && scaled != pascal[static_cast<std::size_t>(m)])
      agree = Check::failed(agree.identity, Defect{m, pascal[static_cast<std::size_t>(m)].to_string(), scaled.to_string()});
    if (odd.pass && m > 1 && m % 2 == 1 && !series[m].is_zero())
      odd = Check::failed(odd.identity, Defect{m, "0", series[m].to_string()});
  }
  rep.add(agree);
  rep.add(odd);
  return rep;
}

inline Report divided_powers(const SuiteOptions& o) {
  Report rep{"divided-powers", o.order, o.seed, {}, {}};
  Check c = Check::ok("b_1^k = k! b_k");
  DividedPowerElem p = DividedPowerElem::one();
  for (long k = 1; k <= o.order && c.pass; ++k) {
    p = p * DividedPowerElem::basis(1);
    auto expected = DividedPowerElem::basis(static_cast<unsigned>(k), factorial(static_cast<unsigned long>(k)));
    if (p != expected) c = Check::failed(c.identity, Defect{k, expected.to_string(), p.to_string()});
  }
  rep.add(c);
  Check prod = Check::ok("b_i b_j = binom(i+j,i) b_{i+j}");
  for (long i = 0; i <= std::min(o.order, 24L) && prod.pass; ++i)
    for (long j = 0; i + j <= std::min(o.order, 24L) && prod.pass; ++j) {
      auto ui = static_cast<unsigned>(i), uj = static_cast<unsigned>(j);
      auto lhs = DividedPowerElem::basis(ui) * DividedPowerElem::basis(uj);
      auto rhs = DividedPowerElem::basis(ui + uj, binomial(i + j, i));
      if (lhs != rhs) prod = Check::failed(prod.identity, Defect{i + j, rhs.to_string(), lhs.to_string()});
    }
  rep.add(prod);
  return rep;
}

inline Report rota_baxter(const SuiteOptions& o) {
  Report rep{"rota-baxter", o.order, o.seed, {}, {}};
  std::mt19937_64 rng(o.seed);
  Check rb = Check::ok("P(x)P(y) + P(xy) = P(P(x)y) + P(xP(y)) for P = pi_minus (weight -1)");
  Check idem = Check::ok("pi_minus is idempotent");
  for (int i = 0; i < o.samples; ++i) {
    tate_h::TateHElem x(random_laurent(rng, "c", -8, 8, 6)), y(random_laurent(rng, "c", -8, 8, 6));
    auto d = tate_h::rota_baxter_defect(x, y);
    if (rb.pass && !d.is_zero())
      rb = Check::failed(rb.identity, Defect{i, "0", d.to_string()}, "x = " + x.to_string() + ", y = " + y.to_string());
    if (idem.pass && tate_h::pi_minus(tate_h::pi_minus(x)) != tate_h::pi_minus(x))
      idem = Check::that(idem.identity, false, "x = " + x.to_string());
  }
  rep.add(rb);
  rep.add(idem);
  rep.notes.push_back(std::to_string(o.samples) + " random pairs, exponents in [-8, 8]");
  return rep;
}

inline Report exactness_h(const SuiteOptions& o) {
  Report rep{"exactness-h", o.order, o.seed, {}, {}};
  std::mt19937_64 rng(o.seed ^ 0x68ULL);
  Check kernel = Check::ok("ker(boundary) = Z[c] on random Laurent polynomials");
  Check image = Check::ok("boundary of Z[c] is zero");
  Check section = Check::ok("boundary(sum d_k c^-(k+1)) = sum d_k b_k");
  Check pairing = Check::ok("Kronecker pairing (c^i, b_j) = delta_ij");
  for (int i = 0; i < o.samples; ++i) {
    tate_h::TateHElem x(random_laurent(rng, "c", -8, 8, 6));
    bool in_zc = x.is_zero() || x.poly().min_exponent() >= 0;
    if (kernel.pass && tate_h::boundary(x).is_zero() != in_zc)
      kernel = Check::that(kernel.identity, false, "x = " + x.to_string());
    auto p = random_laurent(rng, "c", 0, 8, 6);
    if (image.pass && !tate_h::boundary(tate_h::include_cohomology(p)).is_zero())
      image = Check::that(image.identity, false, "x = " + p.to_string());
    DividedPowerElem d;
    LaurentPoly pre("c");
    std::uniform_int_distribution<unsigned> k(0, 8);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int t = 0; t < 4; ++t) {
      unsigned kk = k(rng);
      int cc = c(rng);
      d.add(kk, cc);
      pre.add_term(-static_cast<long>(kk) - 1, cc);
    }
    if (section.pass && tate_h::boundary(tate_h::TateHElem(pre)) != d)
      section = Check::that(section.identity, false, "d = " + d.to_string());
  }
  for (unsigned i = 0; i <= 8; ++i)
    for (unsigned j = 0; j <= 8; ++j)
      if (pairing.pass &&
          tate_h::kronecker_pairing(LaurentPoly::monomial("c", i), DividedPowerElem::basis(j)) != (i == j ? 1 : 0))
        pairing = Check::that(pairing.identity, false, "i = " + std::to_string(i) + ", j = " + std::to_string(j));
  rep.add(kernel);
  rep.add(image);
  rep.add(section);
  rep.add(pairing);
  return rep;
}

inline Report prop2(const SuiteOptions& o) {
  auto rep = tate_k::verify_prop2(o.order, o.defect);
  rep.seed = o.seed;
  return rep;
}

inline Report q_series(const SuiteOptions& o) {
  Report rep{"q-series", o.order, o.seed, {}, {}};
  long n = capped(rep, o.order, 32);
  auto q = tate_k::q_series(n);
  auto beta = RationalFunction::from_poly(MultiPoly::generator({"beta"}, 0));
  rep.add(Check::that("q = beta^-1 + O(T)", q.low() == 0 && q[0] == beta.inverse(), q[0].to_string()));
  auto prod = q * tate_k::q_inverse_series_rf(n);
  auto one = TruncSeries<RationalFunction>::constant(tate_k::beta_field(), tate_k::beta_field().one, n);
  rep.add(compare_series("q q^-1 = 1", one, prod, n));
  long m = std::min(n, 16L);
  for (const auto& e : tate_k::integrality_report(m)) rep.notes.push_back("integrality " + tate_k::describe(e));
  return rep;
}

inline Report cartier(const SuiteOptions& o) {
  Report rep{"cartier", o.order, o.seed, {}, {}};
  long n = capped(rep, o.order, 12);
  rep.append(tate_k::cartier_check(n, n).report);
  return rep;
}

inline Report exactness_k(const SuiteOptions& o) {
  Report rep{"exactness-k", o.order, o.seed, {}, {}};
  std::mt19937_64 rng(o.seed ^ 0x6bULL);
  Check kernel = Check::ok("ker(quotient) = Z[q, q^-1] on random elements");
  Check laurent = Check::ok("quotient vanishes on Z[q, q^-1]");
  Check recon = Check::ok("partial fractions reconstruct the element with integer pole coefficients");
  Check surj = Check::ok("quotient((1 - q)^-(j+1)) = beta_j");
  std::uniform_int_distribution<unsigned> kd(0, 6);
  for (int i = 0; i < o.samples; ++i) {
    tate_k::TateKElem x(random_laurent(rng, "q", -6, 6, 5), kd(rng));
    bool in_laurent = x.is_laurent();
    if (kernel.pass && tate_k::quotient_to_betas(x).is_zero() != in_laurent)
      kernel = Check::that(kernel.identity, false, "x = " + x.to_string());
    auto p = random_laurent(rng, "q", -6, 6, 5);
    if (laurent.pass && !tate_k::quotient_to_betas(tate_k::TateKElem(p, 0)).is_zero())
      laurent = Check::that(laurent.identity, false, "x = " + p.to_string());
    if (recon.pass) {
      auto pf = tate_k::partial_fractions(x);
      if (pf.reconstruct() != x) recon = Check::that(recon.identity, false, "x = " + x.to_string());
    }
  }
  for (unsigned j = 0; j <= 12 && surj.pass; ++j)
    if (tate_k::quotient_to_betas(tate_k::TateKElem::pole(j + 1)) != NumericalPoly::basis(j))
      surj = Check::that(surj.identity, false, "j = " + std::to_string(j));
  rep.add(kernel);
  rep.add(laurent);
  rep.add(recon);
  rep.add(surj);
  return rep;
}

inline Report expansions_suite(const SuiteOptions& o) {
  return expansions::verify_expansions(o.order, o.seed, std::min(o.samples, 100));
}

inline Report adams(const SuiteOptions& o) { return expansions::verify_adams(o.order, o.seed); }

inline Report renorm(const SuiteOptions& o) {
  Report rep{"renorm", o.order, o.seed, {}, {}};
  long n = capped(rep, o.order, 32);
  rep.append(renorm::verify_renorm(n));
  return rep;
}

}  // namespace suites

inline Report run_single(const std::string& name, const SuiteOptions& o) {
  if (name == "prop1") return suites::prop1(o);
  if (name == "corollary") return suites::corollary(o);
  if (name == "bernoulli") return suites::bernoulli(o);
  if (name == "divided-powers") return suites::divided_powers(o);
  if (name == "rota-baxter") return suites::rota_baxter(o);
  if (name == "exactness-h") return suites::exactness_h(o);
  if (name == "prop2") return suites::prop2(o);
  if (name == "q-series") return suites::q_series(o);
  if (name == "cartier") return suites::cartier(o);
  if (name == "exactness-k") return suites::exactness_k(o);
  if (name == "expansions") return suites::expansions_suite(o);
  if (name == "adams") return suites::adams(o);
  if (name == "renorm") return suites::renorm(o);
  throw PreconditionError("unknown suite '" + name + "'");
}

/// Runs one suite, or every suite for "all" with checks and notes prefixed
/// by the suite name.
inline Report run_suite(const std::string& name, const SuiteOptions& o) {
  if (o.order < 1) throw PreconditionError("suite order must be >= 1");
  if (o.defect && !accepts_defect(name))
    throw PreconditionError("suite '" + name + "' does not take --defect (use prop1, prop2 or all)");
  Report rep;
  if (name != "all") {
    rep = run_single(name, o);
  } else {
    rep = Report{"all", o.order, o.seed, {}, {}};
    for (const auto& s : suite_names()) {
      auto sub = run_single(s, o);
      for (auto& c : sub.checks) c.identity = s + ": " + c.identity;
      for (auto& n : sub.notes) n = s + ": " + n;
      rep.append(sub);
    }
  }
  rep.suite = name;
  rep.order = o.order;
  rep.seed = o.seed;
  return rep;
}
}  // namespace tatecirc::cli
