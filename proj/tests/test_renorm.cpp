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

#include <vector>

#include <gtest/gtest.h>

#include "tatecirc/renorm.hpp"

namespace tatecirc::renorm {
namespace {

// Dense rational power series for pointwise oracles.
using Dense = std::vector<Rational>;

Dense mul(const Dense& a, const Dense& b) {
  Dense r(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

Dense inv(const Dense& a) {
  Dense r(a.size(), Rational(0));
  r[0] = a[0].inverse();
  for (std::size_t n = 1; n < a.size(); ++n) {
    Rational s(0);
    for (std::size_t k = 1; k <= n; ++k) s = s + a[k] * r[n - k];
    r[n] = -s / a[0];
  }
  return r;
}

// -log(1 - aT)/(aT) = sum a^k T^k/(k+1); at a = -1 this is T^-1 log(1 + T).
Dense log_ratio(const Rational& a, std::size_t n) {
  Dense r(n);
  for (std::size_t k = 0; k < n; ++k) r[k] = a.pow(static_cast<long>(k)) / Rational(static_cast<long>(k + 1));
  return r;
}

void expect_matches(const RatioSeries& s, const Dense& d, const Rational& x, const Rational& y) {
  for (std::size_t k = 0; k < d.size(); ++k)
    EXPECT_EQ(s[static_cast<long>(k)].evaluate({x, y}), d[k]) << "k=" << k;
}

TEST(Renorm, BOverCinvCoefficients) {
  auto r = b_over_cinv(12);
  EXPECT_TRUE(r.report.pass());
  for (long k = 0; k <= 12; ++k) {
    auto expected = MultiPoly::generator(generators(), 0, static_cast<unsigned>(k), Rational(1, k + 1));
    EXPECT_EQ(r.series[k], expected) << k;
  }
}

TEST(Renorm, BetaOverQinvLowTerms) {
  auto r = beta_over_qinv(6);
  EXPECT_TRUE(r.report.pass());
  EXPECT_EQ(r.series[0], constant(1));
  EXPECT_EQ(r.series[1], gen(1).scaled(Rational(1, 2)) + constant(Rational(1, 2)));
  auto t2 = gen(1).pow(2).scaled(Rational(1, 3)) + gen(1).scaled(Rational(1, 4)) - constant(Rational(1, 12));
  EXPECT_EQ(r.series[2], t2);
}

TEST(Renorm, BOverBetaLowTerms) {
  auto r = b_over_beta(6);
  EXPECT_TRUE(r.report.pass());
  EXPECT_EQ(r.series[1], gen(0).scaled(Rational(1, 2)) - gen(1).scaled(Rational(1, 2)) - constant(Rational(1, 2)));
}

TEST(Renorm, PointwiseOracle) {
  const std::size_t n = 10;
  for (auto [x, y] : {std::pair{Rational(2), Rational(3)}, std::pair{Rational(-1), Rational(5, 2)},
                      std::pair{Rational(1, 3), Rational(-4)}}) {
    auto lt = log_ratio(Rational(-1), n);
    auto bc = log_ratio(x, n);
    auto bq = mul(log_ratio(y, n), inv(lt));
    auto bb = mul(mul(lt, bc), inv(log_ratio(y, n)));
    expect_matches(b_over_cinv(n - 1).series, bc, x, y);
    expect_matches(beta_over_qinv(n - 1).series, bq, x, y);
    expect_matches(b_over_beta(n - 1).series, bb, x, y);
  }
}

TEST(Renorm, DiagonalCollapses) {
  auto d = diagonal(b_over_beta(24).series);
  auto lt = log_ratio(Rational(-1), 25);
  for (long k = 0; k <= 24; ++k) EXPECT_EQ(d[k], constant(lt[static_cast<std::size_t>(k)])) << k;
}

TEST(Renorm, VerifyAllIdentities) {
  for (long n : {0L, 1L, 5L, 16L}) {
    auto rep = verify_renorm(n);
    EXPECT_TRUE(rep.pass()) << n << " " << (rep.first_failure() ? rep.first_failure()->identity : "");
    EXPECT_GE(rep.checks.size(), 8u);
  }
}

TEST(Renorm, NegativeOrderRejected) { EXPECT_THROW(b_over_beta(-1), PreconditionError); }

}  // namespace
}  // namespace tatecirc::renorm
