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
#include <random>
#include <string>
#include <vector>

#include "tatecirc/report.hpp"
#include "tatecirc/tate_k.hpp"
#include "tatecirc/trunc_series.hpp"

/// Expansion homomorphisms Z[q, q^-1, (1-q)^-1] -> Z((t)) at the punctures
/// q = 0 (t = q), q = 1 (t = u = 1 - q) and q = inf (t = s = (1-q)^-1),
/// plus Adams operations on q-expansions.
namespace tatecirc::expansions {

using tate_k::TateKElem;

enum class Puncture { zero, one, infinity };

inline std::string variable(Puncture p) {
  switch (p) {
    case Puncture::zero: return "q";
    case Puncture::one: return "u";
    case Puncture::infinity: return "s";
  }
  return "?";
}

inline std::string puncture_name(Puncture p) {
  switch (p) {
    case Puncture::zero: return "0";
    case Puncture::one: return "1";
    case Puncture::infinity: return "inf";
  }
  return "?";
}

inline Puncture parse_puncture(const std::string& s) {
  if (s == "0") return Puncture::zero;
  if (s == "1") return Puncture::one;
  if (s == "inf" || s == "s") return Puncture::infinity;
  throw PreconditionError("unknown puncture '" + s + "' (expected 0, 1 or inf)");
}

using SeriesZ = TruncSeries<Integer>;

inline const Ring<Integer>& integer_ring() {
  static const Ring<Integer> r = Ring<Integer>::of(Integer(0));
  return r;
}

struct LaurentSeriesZ {
  Puncture puncture = Puncture::zero;
  SeriesZ series{integer_ring(), 0, 0};

  std::string var() const { return variable(puncture); }
  long low() const { return series.low(); }
  long order() const { return series.order(); }
  Integer coeff(long k) const { return series[k]; }
  std::string to_string() const {
    return series.to_string([](const Integer& c) { return c.get_str(); }, var());
  }
  bool operator==(const LaurentSeriesZ& o) const { return puncture == o.puncture && series == o.series; }
};

namespace detail {

inline SeriesZ poly_series(const LaurentPoly& p, long order) {
  if (p.is_zero()) return SeriesZ(integer_ring(), 0, order);
  long lo = std::min(p.min_exponent(), order);
  return SeriesZ::from_function(integer_ring(), lo, order,
                                [&](long k) { return p.coefficient(k).numerator(); });
}

/// Image of q at a puncture, as an exact Laurent polynomial in the local variable.
inline LaurentPoly image_of_q(Puncture p) {
  const auto v = variable(p);
  switch (p) {
    case Puncture::zero: return LaurentPoly::monomial(v, 1);
    case Puncture::one: return LaurentPoly(v, LaurentPoly::Terms{{0, 1}, {1, -1}});
    case Puncture::infinity: return LaurentPoly(v, LaurentPoly::Terms{{-1, -1}, {0, 1}});
  }
  return LaurentPoly(v);
}

struct Images {
  SeriesZ q, q_inv, pole;
};

/// Images of the three generators at working order w. q^-1 and (1-q)^-1 are
/// obtained by inverting the images of q and 1 - q.
inline Images images(Puncture p, long w) {
  LaurentPoly q = image_of_q(p);
  LaurentPoly one_minus = LaurentPoly::constant(q.variable(), 1) - q;
  auto sq = poly_series(q, w);
  auto som = poly_series(one_minus, w + 2);
  return Images{sq, series_inverse(poly_series(q, w + 2)).truncated(w), series_inverse(som).truncated(w)};
}

inline SeriesZ power(SeriesZ base, unsigned e, long w) {
  SeriesZ r = SeriesZ::constant(integer_ring(), 1, w);
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

inline SeriesZ expand_at(const TateKElem& x, Puncture p, long w) {
  auto im = images(p, w);
  SeriesZ acc(integer_ring(), 0, w);
  for (const auto& [e, c] : x.numerator().terms()) {
    auto term = e >= 0 ? power(im.q, static_cast<unsigned>(e), w) : power(im.q_inv, static_cast<unsigned>(-e), w);
    acc = acc + term.scaled(c.numerator());
  }
  if (x.denom_power() > 0) acc = acc * power(im.pole, x.denom_power(), w);
  return acc;
}

}  // namespace detail

/// The expansion of x at puncture p, reliable to order n.
inline LaurentSeriesZ expand(const TateKElem& x, Puncture p, long n) {
  if (n < 0) throw PreconditionError("expand: negative order");
  long w = n + 4;
  for (;;) {
    auto s = detail::expand_at(x, p, w);
    if (s.order() >= n) return LaurentSeriesZ{p, s.truncated(n).normalized()};
    w += n - s.order() + 1;
  }
}

inline LaurentSeriesZ expand_at_zero(const TateKElem& x, long n) { return expand(x, Puncture::zero, n); }
inline LaurentSeriesZ expand_at_one(const TateKElem& x, long n) { return expand(x, Puncture::one, n); }
inline LaurentSeriesZ expand_at_s(const TateKElem& x, long n) { return expand(x, Puncture::infinity, n); }

/// psi^k on a q-expansion: q^n -> q^(kn). Input reliable to order m gives
/// output reliable to order k(m+1) - 1, which must reach n.
inline LaurentSeriesZ adams_on_series(long k, const LaurentSeriesZ& x, long n) {
  if (k < 1) throw PreconditionError("adams_on_series: k must be positive");
  if (x.puncture != Puncture::zero) throw PreconditionError("adams_on_series: input must be a series in q");
  long reach = k * (x.order() + 1) - 1;
  if (reach < n)
    throw TruncationError("adams_on_series: input reliable to order " + std::to_string(x.order()) +
                          " gives psi^" + std::to_string(k) + " only to order " + std::to_string(reach) +
                          ", below " + std::to_string(n));
  long lo = std::min(k * x.low(), n);
  auto s = SeriesZ::from_function(integer_ring(), lo, n, [&](long e) {
    if (e % k != 0) return Integer(0);
    return x.coeff(e / k);
  });
  return LaurentSeriesZ{Puncture::zero, s};
}

/// Random element of Z[q, q^-1, (1-q)^-1] for property checks.
inline TateKElem random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> e(-3, 3);
  std::uniform_int_distribution<int> c(-3, 3), n(1, 3), k(0, 3);
  LaurentPoly p("q");
  int terms = n(rng);
  for (int i = 0; i < terms; ++i) p.add_term(e(rng), c(rng));
  return TateKElem(p, static_cast<unsigned>(k(rng)));
}

inline LaurentPoly random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> e(-4, 4);
  std::uniform_int_distribution<int> c(-3, 3), n(0, 4);
  LaurentPoly p("q");
  int terms = n(rng);
  for (int i = 0; i < terms; ++i) p.add_term(e(rng), c(rng));
  return p;
}

namespace detail {

inline Check compare(const std::string& identity, const LaurentSeriesZ& expected, const LaurentSeriesZ& actual,
                     long upto) {
  return compare_series(identity, expected.series, actual.series, upto);
}

}  // namespace detail

/// Homomorphism, unit and display checks for every puncture.
inline Report verify_expansions(long n, std::uint64_t seed, int pairs = 100) {
  Report rep{"expansions", n, seed, {}, {}};
  std::mt19937_64 rng(seed);
  const TateKElem one = TateKElem::constant(1), q = TateKElem::q(1), qinv = TateKElem::q(-1);
  const TateKElem omq(TateKElem::one_minus_q(), 0), pole = TateKElem::pole(1);
  for (Puncture p : {Puncture::zero, Puncture::one, Puncture::infinity}) {
    const std::string at = " at " + puncture_name(p);
    Check add = Check::ok("phi(x + y) = phi(x) + phi(y)" + at), mul = Check::ok("phi(x y) = phi(x) phi(y)" + at);
    for (int i = 0; i < pairs; ++i) {
      auto x = random_element(rng), y = random_element(rng);
      auto ex = expand(x, p, n), ey = expand(y, p, n);
      if (add.pass) {
        auto c = detail::compare(add.identity, expand(x + y, p, n),
                                 LaurentSeriesZ{p, ex.series + ey.series}, n);
        if (!c.pass) add = c, add.note = "x = " + x.to_string() + ", y = " + y.to_string();
      }
      if (mul.pass) {
        // Products of Laurent tails lose reliable order; expand the factors further.
        long lx = std::min(ex.low(), 0L), ly = std::min(ey.low(), 0L);
        auto fx = expand(x, p, n - ly), fy = expand(y, p, n - lx);
        auto c = detail::compare(mul.identity, expand(x * y, p, n), LaurentSeriesZ{p, fx.series * fy.series}, n);
        if (!c.pass) mul = c, mul.note = "x = " + x.to_string() + ", y = " + y.to_string();
      }
    }
    rep.add(add);
    rep.add(mul);
    auto unit = LaurentSeriesZ{p, SeriesZ::constant(integer_ring(), 1, n)};
    rep.add(detail::compare("phi(1) = 1" + at, unit, expand(one, p, n), n));
    auto prod = [&](const TateKElem& a, const TateKElem& b) {
      auto ea = expand(a, p, n + 2), eb = expand(b, p, n + 2);
      return LaurentSeriesZ{p, ea.series * eb.series};
    };
    rep.add(detail::compare("phi(q) phi(q^-1) = 1" + at, unit, prod(q, qinv), n));
    rep.add(detail::compare("phi(1 - q) phi((1 - q)^-1) = 1" + at, unit, prod(omq, pole), n));
  }

  // Displayed defining formulas.
  auto geometric = [&](long from, int sign) {
    return SeriesZ::from_function(integer_ring(), 0, n, [=](long k) { return Integer(k >= from ? sign : 0); });
  };
  rep.add(compare_series("(1 - q)^-1 -> sum_{k>=0} q^k at 0", geometric(0, 1), expand_at_zero(pole, n).series, n));
  rep.add(compare_series("q^-1 -> sum_{k>=0} u^k at 1", geometric(0, 1), expand_at_one(qinv, n).series, n));
  auto s_image = expand_at_s(qinv, n);
  rep.add(compare_series("q^-1 -> -sum_{k>=1} s^k at inf", geometric(1, -1), s_image.series, n));
  bool unsigned_form = n < 1 || compare_series("", geometric(1, 1), s_image.series, n).pass;
  rep.notes.push_back(std::string("s-puncture sign finding: the unsigned form q^-1 = sum_{k>=1} (1-q)^-k ") +
                      (unsigned_form ? "agrees with" : "is not compatible with") +
                      " the ring homomorphism q -> 1 - s^-1; the forced image is q^-1 -> " +
                      expand_at_s(qinv, std::min(n, 4L)).to_string() + " - ...");

  // Identity embedding of Z[q, q^-1] at q = 0.
  Check embed = Check::ok("expand_at_zero restricts to the identity on Z[q, q^-1]");
  for (int i = 0; i < pairs && embed.pass; ++i) {
    auto p = random_laurent(rng);
    auto c = compare_series(embed.identity, detail::poly_series(p, n), expand_at_zero(TateKElem(p, 0), n).series, n);
    if (!c.pass) embed = c;
  }
  rep.add(embed);
  return rep;
}

/// Adams operations on Z[q, q^-1] and on q-expansions, k, l <= kmax.
inline Report verify_adams(long n, std::uint64_t seed, long kmax = 5, int samples = 20) {
  Report rep{"adams", n, seed, {}, {}};
  std::mt19937_64 rng(seed);
  using tate_k::adams_on_laurent;
  for (long k = 1; k <= kmax; ++k) {
    Check hom = Check::ok("psi^" + std::to_string(k) + " is a ring homomorphism on Z[q, q^-1]");
    for (int i = 0; i < samples && hom.pass; ++i) {
      auto x = random_laurent(rng), y = random_laurent(rng);
      bool ok = adams_on_laurent(k, x + y) == adams_on_laurent(k, x) + adams_on_laurent(k, y) &&
                adams_on_laurent(k, x * y) == adams_on_laurent(k, x) * adams_on_laurent(k, y);
      if (!ok) hom = Check::that(hom.identity, false, "x = " + x.to_string() + ", y = " + y.to_string());
    }
    rep.add(hom);
    for (long l = 1; l <= kmax; ++l) {
      const std::string kl = std::to_string(k) + ", " + std::to_string(l);
      Check lau = Check::ok("psi^k psi^l = psi^kl on Z[q, q^-1] (k, l = " + kl + ")");
      Check ser = Check::ok("psi^k psi^l = psi^kl on q-expansions (k, l = " + kl + ")");
      Check hs = Check::ok("psi^k is multiplicative on q-expansions (k, l = " + kl + ")");
      for (int i = 0; i < samples; ++i) {
        auto x = random_laurent(rng);
        if (lau.pass && adams_on_laurent(k, adams_on_laurent(l, x)) != adams_on_laurent(k * l, x))
          lau = Check::that(lau.identity, false, "x = " + x.to_string());
        auto a = random_element(rng), b = random_element(rng);
        long m = (n + k * l) / (k * l);
        auto ea = expand_at_zero(a, m + 2 * k * l);
        if (ser.pass) {
          auto lhs = adams_on_series(k, adams_on_series(l, ea, std::min(n, l * (ea.order() + 1) - 1)), n);
          auto rhs = adams_on_series(k * l, ea, n);
          auto c = compare_series(ser.identity, rhs.series, lhs.series, n);
          if (!c.pass) ser = c, ser.note = "x = " + a.to_string();
        }
        if (hs.pass) {
          long mk = n / k + 8;
          auto fa = expand_at_zero(a, mk), fb = expand_at_zero(b, mk);
          auto prod = LaurentSeriesZ{Puncture::zero, fa.series * fb.series};
          auto lhs = adams_on_series(k, prod, std::min(n, k * (prod.order() + 1) - 1));
          auto rhs = adams_on_series(k, fa, n).series * adams_on_series(k, fb, n).series;
          auto c = compare_series(hs.identity, lhs.series, rhs, std::min({n, lhs.order(), rhs.order()}));
          if (!c.pass) hs = c, hs.note = "x = " + a.to_string() + ", y = " + b.to_string();
        }
      }
      rep.add(lau);
      rep.add(ser);
      if (l == 1) rep.add(hs);
    }
  }
  // psi^k commutes with expansion at 0 on Laurent polynomials.
  Check comm = Check::ok("psi^k expand_at_zero = expand_at_zero psi^k on Z[q, q^-1]");
  for (long k = 1; k <= kmax && comm.pass; ++k) {
    for (int i = 0; i < samples && comm.pass; ++i) {
      auto x = random_laurent(rng);
      auto lhs = adams_on_series(k, expand_at_zero(TateKElem(x, 0), n), n);
      auto rhs = expand_at_zero(TateKElem(adams_on_laurent(k, x), 0), n);
      auto c = compare_series(comm.identity, rhs.series, lhs.series, n);
      if (!c.pass) comm = c, comm.note = "k = " + std::to_string(k) + ", x = " + x.to_string();
    }
  }
  rep.add(comm);
  return rep;
}

}  // namespace tatecirc::expansions
