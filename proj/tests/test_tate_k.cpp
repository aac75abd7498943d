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

#include <chrono>
#include <random>

#include <gtest/gtest.h>

#include "tatecirc/tate_k.hpp"

namespace tatecirc::tate_k {
namespace {

LaurentPoly qpoly(std::initializer_list<std::pair<const long, Rational>> t) {
  return LaurentPoly("q", LaurentPoly::Terms(t));
}

TateKElem random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> e(-6, 6);
  std::uniform_int_distribution<int> c(-4, 4), n(0, 4);
  std::uniform_int_distribution<unsigned> k(0, 6);
  LaurentPoly p("q");
  int terms = n(rng);
  for (int i = 0; i < terms; ++i) p.add_term(e(rng), c(rng));
  return TateKElem(p, k(rng));
}

void expect_normalized(const TateKElem& x) {
  EXPECT_TRUE(x.denom_power() == 0 || !x.numerator().evaluate(1).is_zero()) << x.to_string();
  for (const auto& [e, c] : x.numerator().terms()) EXPECT_TRUE(c.is_integer());
}

TEST(TateK, ArithmeticExamples) {
  auto one_minus_q = TateKElem(TateKElem::one_minus_q());
  auto r = TateKElem::pole(1) * one_minus_q;
  EXPECT_EQ(r, TateKElem::constant(1));
  EXPECT_EQ(r.denom_power(), 0u);

  auto s = TateKElem::q(1) * TateKElem::pole(1) + TateKElem::constant(1);
  EXPECT_EQ(s.numerator(), LaurentPoly::constant("q", 1));
  EXPECT_EQ(s.denom_power(), 1u);

  EXPECT_EQ(TateKElem::q(-1) * TateKElem::q(1), TateKElem::constant(1));
}

TEST(TateK, NormalizationInvariant) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    auto a = random_elem(rng), b = random_elem(rng);
    expect_normalized(a + b);
    expect_normalized(a - b);
    expect_normalized(a * b);
  }
}

TEST(TateK, UnitsAndPowers) {
  auto u = TateKElem(TateKElem::one_minus_q());
  EXPECT_EQ(u.pow(-1), TateKElem::pole(1));
  EXPECT_EQ(TateKElem::pole(2).pow(-1), TateKElem(TateKElem::one_minus_q().pow(2)));
  EXPECT_FALSE(TateKElem(qpoly({{0, 1}, {1, 1}})).inverse().has_value());
  EXPECT_THROW(TateKElem::constant(2).pow(-1), RingCapabilityError);
}

TEST(PartialFractions, Examples) {
  auto a = partial_fractions(TateKElem::pole(1));
  EXPECT_TRUE(a.poly_part.is_zero());
  EXPECT_EQ(a.pole_coeffs, std::vector<Integer>{1});

  // 1/(q(1-q)) = 1/q + 1/(1-q)
  auto b = partial_fractions(TateKElem::q(-1) * TateKElem::pole(1));
  EXPECT_EQ(b.poly_part, LaurentPoly::monomial("q", -1));
  EXPECT_EQ(b.pole_coeffs, std::vector<Integer>{1});

  auto c = partial_fractions(TateKElem::q(3));
  EXPECT_EQ(c.poly_part, LaurentPoly::monomial("q", 3));
  EXPECT_TRUE(c.pole_coeffs.empty());
}

TEST(PartialFractions, ReconstructionIsExact) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 200; ++i) {
    auto x = random_elem(rng);
    auto pf = partial_fractions(x);
    EXPECT_EQ(pf.reconstruct(), x) << x.to_string();
    EXPECT_EQ(pf.pole_coeffs.size(), x.denom_power());
  }
}

TEST(Quotient, Examples) {
  EXPECT_EQ(quotient_to_betas(TateKElem::pole(1)), NumericalPoly::one());
  EXPECT_EQ(quotient_to_betas(TateKElem::pole(2)), NumericalPoly::basis(1));
  EXPECT_TRUE(quotient_to_betas(TateKElem(qpoly({{-3, 2}, {0, 1}, {5, -7}}))).is_zero());
}

TEST(Quotient, ExactnessAndAdditivity) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    auto x = random_elem(rng), y = random_elem(rng);
    EXPECT_EQ(quotient_to_betas(x).is_zero(), x.denom_power() == 0) << x.to_string();
    EXPECT_EQ(quotient_to_betas(x + y), quotient_to_betas(x) + quotient_to_betas(y));
  }
}

TEST(BinomialSeries, Coefficients) {
  auto s = binomial_series(6);
  EXPECT_EQ(s[0], NumericalPoly::one());
  EXPECT_EQ(s[2], NumericalPoly::basis(2));
  auto beta = MultiPoly::generator({"beta"}, 0), one = MultiPoly::constant({"beta"}, 1);
  EXPECT_EQ(s[2].to_polynomial(), (beta * (beta - one)).scaled(Rational(1, 2)));
  EXPECT_EQ(s[2].evaluate(Integer(4)), 6);
}

TEST(Cartier, LowOrderCoefficients) {
  auto r = cartier_check(2, 2);
  NumericalPoly expected({{1, 1}, {2, 2}});
  EXPECT_EQ(r.lhs[1][1], expected);
  EXPECT_EQ(r.rhs[1][1], expected);
  EXPECT_EQ(r.lhs[1][0], NumericalPoly::basis(1));
  EXPECT_EQ(r.rhs[1][0], NumericalPoly::basis(1));
  EXPECT_TRUE(r.report.pass());
}

TEST(Cartier, FullCheckAgainstEvaluationOracle) {
  auto start = std::chrono::steady_clock::now();
  auto r = cartier_check(12, 12);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(r.report.pass());
  EXPECT_LT(secs, 5.0);
  // (1+T0)^n (1+T1)^n: the T0^i T1^j coefficient is binom(n,i) binom(n,j).
  for (long n = 0; n <= 30; ++n)
    for (unsigned i = 0; i <= 12; ++i)
      for (unsigned j = 0; j <= 12; ++j)
        EXPECT_EQ(r.lhs[i][j].evaluate(Integer(n)), Integer(binomial(n, i) * binomial(n, j)));
}

TEST(BinomialIdentity, Passes) {
  EXPECT_TRUE(verify_prop2(1).pass());
  auto start = std::chrono::steady_clock::now();
  EXPECT_TRUE(verify_prop2(64).pass());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 10.0);
}

TEST(BinomialIdentity, DefectDetected) {
  auto rep = verify_prop2(8, 3);
  ASSERT_FALSE(rep.pass());
  EXPECT_EQ(rep.first_failure()->first_defect->index, 3);
}

TEST(BinomialIdentity, SolvedQInverse) {
  auto qi = q_inverse_series(4);
  auto beta = MultiPoly::generator({"beta"}, 0), one = MultiPoly::constant({"beta"}, 1);
  EXPECT_EQ(qi[0], beta);
  EXPECT_EQ(qi[1], (beta * (beta + one)).scaled(Rational(-1, 2)));
}

TEST(QSeries, LeadingCoefficients) {
  auto q = q_series(6);
  auto beta = MultiPoly::generator({"beta"}, 0), one = MultiPoly::constant({"beta"}, 1);
  EXPECT_EQ(q[0], RationalFunction(one, beta));
  EXPECT_EQ(q[1], RationalFunction(beta + one, beta.scaled(2)));
  EXPECT_EQ(q[2], RationalFunction((beta + one) * (beta - one), beta.scaled(12)));
}

TEST(QSeries, ReciprocalProduct) {
  auto q = q_series(32);
  auto prod = q * q_inverse_series_rf(32);
  EXPECT_EQ(prod.order(), 32);
  EXPECT_EQ(prod, TruncSeries<RationalFunction>::constant(beta_field(), beta_field().one, 32));
}

TEST(QSeries, IntegrityReport) {
  auto rep = integrality_report(4);
  ASSERT_EQ(rep.size(), 10u);
  const auto& q1 = rep[1];
  EXPECT_EQ(q1.series, "q");
  EXPECT_FALSE(q1.polynomial);
  const auto& bq0 = rep[5];
  EXPECT_EQ(bq0.series, "beta*q");
  EXPECT_TRUE(bq0.polynomial);
  EXPECT_EQ(bq0.coords, std::vector<Rational>{1});
  EXPECT_TRUE(*bq0.integer_coords);
  const auto& bq1 = rep[6];
  EXPECT_TRUE(bq1.polynomial);
  EXPECT_FALSE(*bq1.integer_coords);
  EXPECT_EQ(bq1.coords.at(0), Rational(1, 2));
  EXPECT_EQ(bq1.value, "1/2 + 1/2*beta");
}

TEST(Adams, Examples) {
  EXPECT_EQ(adams_on_laurent(2, qpoly({{1, 1}, {-1, 1}})), qpoly({{2, 1}, {-2, 1}}));
  auto x = qpoly({{3, 2}, {-4, 1}});
  EXPECT_EQ(adams_on_laurent(1, x), x);
  EXPECT_EQ(adams_on_laurent(2, adams_on_laurent(3, LaurentPoly::monomial("q", 5))), LaurentPoly::monomial("q", 30));
  EXPECT_THROW(adams_on_laurent(0, x), PreconditionError);
}

TEST(Adams, HomomorphismAndComposition) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 50; ++i) {
    auto x = random_elem(rng).numerator(), y = random_elem(rng).numerator();
    for (long k = 1; k <= 5; ++k) {
      EXPECT_EQ(adams_on_laurent(k, x * y), adams_on_laurent(k, x) * adams_on_laurent(k, y));
      EXPECT_EQ(adams_on_laurent(k, x + y), adams_on_laurent(k, x) + adams_on_laurent(k, y));
      for (long l = 1; l <= 5; ++l)
        EXPECT_EQ(adams_on_laurent(k, adams_on_laurent(l, x)), adams_on_laurent(k * l, x));
    }
  }
}

}  // namespace
}  // namespace tatecirc::tate_k
