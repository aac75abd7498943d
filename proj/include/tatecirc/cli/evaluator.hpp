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
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tatecirc/bernoulli.hpp"
#include "tatecirc/cli/parser.hpp"
#include "tatecirc/expansions.hpp"
#include "tatecirc/tate_h.hpp"
#include "tatecirc/tate_k.hpp"

/// Evaluation of parsed expressions into exact values.
namespace tatecirc::cli {

class EvalError : public std::runtime_error {
 public:
  EvalError(std::size_t offset, const std::string& what)
      : std::runtime_error("evaluation error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class RingHint { automatic, tate_h, tate_k, rationals, integers };

inline RingHint parse_ring_hint(const std::string& s) {
  if (s.empty() || s == "auto") return RingHint::automatic;
  if (s == "tate_h") return RingHint::tate_h;
  if (s == "tate_k") return RingHint::tate_k;
  if (s == "Q") return RingHint::rationals;
  if (s == "Z") return RingHint::integers;
  throw PreconditionError("unknown ring hint '" + s + "' (expected auto, tate_h, tate_k, Q or Z)");
}

using tate_k::TateKElem;
using expansions::LaurentSeriesZ;
using expansions::Puncture;

/// Series in T whose coefficients are polynomials in a set of generators
/// drawn from b, beta, c, cinv, q, qinv.
struct SeriesValue {
  TruncSeries<MultiPoly> s;
};

/// Output that is only rendered, never combined further.
struct TextValue {
  std::string kind;
  std::string text;
};

using Value = std::variant<Rational, LaurentPoly, TateKElem, DividedPowerElem, NumericalPoly, SeriesValue,
                           LaurentSeriesZ, Puncture, TextValue>;

inline std::string kind_name(const Value& v) {
  switch (v.index()) {
    case 0: return "rational number";
    case 1: return "Laurent polynomial in c";
    case 2: return "element of Z[q, q^-1, (1 - q)^-1]";
    case 3: return "divided power element";
    case 4: return "numerical polynomial";
    case 5: return "series in T";
    case 6: return "Laurent series expansion";
    case 7: return "puncture";
    default: return std::get<TextValue>(v).kind;
  }
}

namespace detail {

inline const std::vector<std::string>& generator_order() {
  static const std::vector<std::string> g{"b", "beta", "c", "cinv", "q", "qinv"};
  return g;
}

inline std::string render_power(const std::string& gen, unsigned e) {
  if (gen == "cinv") return "c^-" + std::to_string(e);
  if (gen == "qinv") return "q^-" + std::to_string(e);
  return e == 1 ? gen : gen + "^" + std::to_string(e);
}

inline std::string render_coefficient(const MultiPoly& p) { return p.to_string(render_power); }

inline std::vector<std::string> merge_generators(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& g : generator_order())
    if (std::find(a.begin(), a.end(), g) != a.end() || std::find(b.begin(), b.end(), g) != b.end()) out.push_back(g);
  return out;
}

inline Ring<MultiPoly> series_ring(const std::vector<std::string>& gens) {
  return Ring<MultiPoly>::of(MultiPoly(gens));
}

inline TruncSeries<MultiPoly> embed_series(const TruncSeries<MultiPoly>& s, const std::vector<std::string>& gens) {
  auto ring = series_ring(gens);
  return TruncSeries<MultiPoly>::from_function(ring, s.low(), s.order(), [&](long k) { return s[k].embedded(gens); });
}

/// Laurent polynomial with one-signed exponents as a polynomial in `pos` or `neg`.
inline MultiPoly laurent_to_poly(const LaurentPoly& p, const std::string& pos, const std::string& neg,
                                 std::size_t offset) {
  if (p.is_zero()) return MultiPoly(std::vector<std::string>{});
  if (p.min_exponent() < 0 && p.max_exponent() > 0)
    throw EvalError(offset, p.to_string() + " mixes positive and negative powers; series coefficients use either " +
                                pos + " or " + neg + ", not both");
  const std::string& g = p.min_exponent() < 0 ? neg : pos;
  MultiPoly r({g});
  for (const auto& [e, c] : p.terms()) {
    Monomial m;
    m.set(0, static_cast<unsigned>(e < 0 ? -e : e));
    r.add_term(m, c);
  }
  return r;
}

}  // namespace detail

inline std::string render(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using V = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<V, SeriesValue>) return x.s.to_string(detail::render_coefficient, "T");
        else if constexpr (std::is_same_v<V, Puncture>) return expansions::puncture_name(x);
        else if constexpr (std::is_same_v<V, TextValue>) return x.text;
        else return x.to_string();
      },
      v);
}

class Evaluator {
 public:
  explicit Evaluator(long order, RingHint hint = RingHint::automatic) : order_(order), hint_(hint) {
    if (order < 0) throw PreconditionError("order must be non-negative");
  }

  Value eval(const Expr& e) const {
    Value v = std::visit([&](const auto& n) { return eval_node(n, e.offset); }, e.node);
    return v;
  }

  /// Evaluates and checks the result against the ring hint.
  Value evaluate(const Expr& e) const {
    Value v = eval(e);
    check_hint(v, e.offset);
    return v;
  }

 private:
  // --- leaves -------------------------------------------------------------

  Value eval_node(const NumberNode& n, std::size_t) const { return Rational(n.value); }

  Value eval_node(const SymbolNode& n, std::size_t offset) const {
    const auto& s = n.name;
    if (s == "c") return LaurentPoly::monomial("c", 1, 1, CoeffMode::rational);
    if (s == "cinv") return LaurentPoly::monomial("c", -1, 1, CoeffMode::rational);
    if (s == "q") return TateKElem::q(1);
    if (s == "qinv") return TateKElem::q(-1);
    if (s == "u") return TateKElem(TateKElem::one_minus_q(), 0);
    if (s == "s") return TateKElem::pole(1);
    if (s == "b") return DividedPowerElem::basis(1);
    if (s == "beta") return NumericalPoly::basis(1);
    if (s == "inf") return Puncture::infinity;
    if (s == "T") {
      auto ring = detail::series_ring({});
      return SeriesValue{TruncSeries<MultiPoly>::monomial(ring, ring.one, 1, order_)};
    }
    auto idx = s.find('_');
    if (idx != std::string::npos) {
      unsigned k = static_cast<unsigned>(std::stoul(s.substr(idx + 1)));
      if (s.compare(0, idx, "b") == 0) return DividedPowerElem::basis(k);
      return NumericalPoly::basis(k);
    }
    throw EvalError(offset, "unknown symbol '" + s + "'");
  }

  Value eval_node(const NegNode& n, std::size_t offset) const {
    return binary('-', Rational(0), eval(*n.operand), offset);
  }

  Value eval_node(const BinaryNode& n, std::size_t offset) const {
    return binary(n.op, eval(*n.lhs), eval(*n.rhs), offset);
  }

  Value eval_node(const PowerNode& n, std::size_t offset) const { return power(eval(*n.base), n.exponent, offset); }

  Value eval_node(const ApplyNode& n, std::size_t offset) const {
    std::vector<Value> args;
    for (const auto& a : n.args) args.push_back(eval(*a));
    return apply(n.function, args, offset);
  }

  // --- coercions ----------------------------------------------------------

  [[noreturn]] static void mismatch(std::size_t offset, const std::string& what, const Value& a, const Value& b) {
    throw EvalError(offset, "type mismatch in " + what + ": " + kind_name(a) + " and " + kind_name(b));
  }

  static Integer require_integer(const Rational& r, std::size_t offset, const std::string& what) {
    if (!r.is_integer()) throw EvalError(offset, what + " must be an integer, got " + r.to_string());
    return r.numerator();
  }

  static long require_small(const Value& v, std::size_t offset, const std::string& what) {
    const auto* r = std::get_if<Rational>(&v);
    if (!r) throw EvalError(offset, what + " must be an integer literal, got a " + kind_name(v));
    Integer z = require_integer(*r, offset, what);
    if (!z.fits_slong_p()) throw EvalError(offset, what + " is out of range");
    return z.get_si();
  }

  /// Coefficient polynomial for a non-series value.
  static MultiPoly to_coefficient(const Value& v, std::size_t offset) {
    if (const auto* r = std::get_if<Rational>(&v)) return MultiPoly::constant({}, *r);
    if (const auto* p = std::get_if<LaurentPoly>(&v)) return detail::laurent_to_poly(*p, "c", "cinv", offset);
    if (const auto* k = std::get_if<TateKElem>(&v)) {
      if (!k->is_laurent())
        throw EvalError(offset, k->to_string() + " has a pole at q = 1 and is not a series coefficient; use expand");
      return detail::laurent_to_poly(k->numerator(), "q", "qinv", offset);
    }
    if (const auto* d = std::get_if<DividedPowerElem>(&v)) return d->to_polynomial("b");
    if (const auto* n = std::get_if<NumericalPoly>(&v)) return n->to_polynomial("beta");
    throw EvalError(offset, "a " + kind_name(v) + " cannot be a series coefficient");
  }

  TruncSeries<MultiPoly> to_series(const Value& v, std::size_t offset) const {
    if (const auto* s = std::get_if<SeriesValue>(&v)) return s->s;
    auto c = to_coefficient(v, offset);
    return TruncSeries<MultiPoly>::constant(detail::series_ring(c.generators()), c, order_);
  }

  static std::pair<TruncSeries<MultiPoly>, TruncSeries<MultiPoly>> unify(const TruncSeries<MultiPoly>& a,
                                                                         const TruncSeries<MultiPoly>& b) {
    auto gens = detail::merge_generators(a.ring().zero.generators(), b.ring().zero.generators());
    return {detail::embed_series(a, gens), detail::embed_series(b, gens)};
  }

  template <class T>
  static T lift(const Rational& r, std::size_t offset) {
    if constexpr (std::is_same_v<T, LaurentPoly>) return LaurentPoly::constant("c", r, CoeffMode::rational);
    else if constexpr (std::is_same_v<T, TateKElem>) return TateKElem::constant(require_integer(r, offset, "constant in Z[q, q^-1, (1 - q)^-1]"));
    else if constexpr (std::is_same_v<T, DividedPowerElem>) return DividedPowerElem::basis(0, require_integer(r, offset, "constant in Z[b_*]"));
    else return NumericalPoly::basis(0, require_integer(r, offset, "constant in Z[beta_*]"));
  }

  // --- arithmetic ---------------------------------------------------------

  Value binary(char op, const Value& a, const Value& b, std::size_t offset) const {
    const std::string what = std::string("'") + op + "'";
    auto bad = [&](const Value& v) { return v.index() >= 6; };
    if (bad(a) || bad(b)) mismatch(offset, what, a, b);
    if (std::holds_alternative<SeriesValue>(a) || std::holds_alternative<SeriesValue>(b)) {
      auto [x, y] = unify(to_series(a, offset), to_series(b, offset));
      switch (op) {
        case '+': return SeriesValue{x + y};
        case '-': return SeriesValue{x - y};
        case '*': return SeriesValue{x * y};
        default: return SeriesValue{series_divide(x, y)};
      }
    }
    if (const auto* ra = std::get_if<Rational>(&a)) {
      if (const auto* rb = std::get_if<Rational>(&b)) {
        switch (op) {
          case '+': return *ra + *rb;
          case '-': return *ra - *rb;
          case '*': return *ra * *rb;
          default:
            if (rb->is_zero()) throw EvalError(offset, "division by zero");
            return *ra / *rb;
        }
      }
      return std::visit([&](const auto& y) -> Value {
        using T = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, SeriesValue> || std::is_same_v<T, LaurentSeriesZ> ||
                      std::is_same_v<T, Puncture> || std::is_same_v<T, TextValue>)
          mismatch(offset, what, a, b);
        else
          return same_kind(op, lift<T>(*ra, offset), y, offset);
      }, b);
    }
    if (const auto* rb = std::get_if<Rational>(&b)) {
      return std::visit([&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, SeriesValue> || std::is_same_v<T, LaurentSeriesZ> ||
                      std::is_same_v<T, Puncture> || std::is_same_v<T, TextValue>)
          mismatch(offset, what, a, b);
        else {
          if (op == '/' && !std::is_same_v<T, LaurentPoly>) {
            if (rb->is_zero()) throw EvalError(offset, "division by zero");
            if (*rb != Rational(1) && *rb != Rational(-1))
              throw EvalError(offset, "division by " + rb->to_string() + ", which is not a unit in the " + kind_name(a) + " ring");
          }
          return same_kind(op, x, lift<T>(*rb, offset), offset);
        }
      }, a);
    }
    if (a.index() != b.index()) mismatch(offset, what, a, b);
    return std::visit([&](const auto& x) -> Value {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, SeriesValue> || std::is_same_v<T, LaurentSeriesZ> ||
                    std::is_same_v<T, Puncture> || std::is_same_v<T, TextValue>)
        mismatch(offset, what, a, b);
      else
        return same_kind(op, x, std::get<T>(b), offset);
    }, a);
  }

  template <class T>
  static Value same_kind(char op, const T& x, const T& y, std::size_t offset) {
    switch (op) {
      case '+': return T(x + y);
      case '-': return T(x - y);
      case '*': return T(x * y);
      default: break;
    }
    if constexpr (std::is_same_v<T, LaurentPoly>) {
      if (!y.with_mode(CoeffMode::rational).is_unit())
        throw EvalError(offset, "division by " + y.to_string() + ", which is not a unit of Q[c, c^-1]");
      return LaurentPoly(x * y.with_mode(CoeffMode::rational).inverse());
    } else if constexpr (std::is_same_v<T, TateKElem>) {
      auto inv = y.inverse();
      if (!inv) throw EvalError(offset, "division by " + y.to_string() + ", which is not a unit of Z[q, q^-1, (1 - q)^-1]");
      return TateKElem(x * *inv);
    } else {
      if (y == T::one()) return x;
      if (y == -T::one()) return T(-x);
      throw EvalError(offset, "division by " + y.to_string() + ", which is not a unit");
    }
  }

  Value power(const Value& v, long e, std::size_t offset) const {
    if (const auto* r = std::get_if<Rational>(&v)) {
      if (r->is_zero() && e < 0) throw EvalError(offset, "division by zero");
      return r->pow(e);
    }
    if (const auto* p = std::get_if<LaurentPoly>(&v)) {
      if (e >= 0) return p->pow(static_cast<unsigned long>(e));
      if (!p->is_unit()) throw EvalError(offset, p->to_string() + " is not a unit of Q[c, c^-1]");
      return p->inverse().pow(static_cast<unsigned long>(-e));
    }
    if (const auto* k = std::get_if<TateKElem>(&v)) {
      try {
        return k->pow(e);
      } catch (const RingCapabilityError& err) {
        throw EvalError(offset, err.what());
      }
    }
    if (const auto* s = std::get_if<SeriesValue>(&v)) {
      auto base = e < 0 ? series_inverse(s->s) : s->s;
      auto r = TruncSeries<MultiPoly>::constant(base.ring(), base.ring().one, order_);
      for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
      return SeriesValue{r};
    }
    if (e < 0) throw EvalError(offset, "negative power of a " + kind_name(v));
    return std::visit([&](const auto& x) -> Value {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, DividedPowerElem> || std::is_same_v<T, NumericalPoly>) {
        T r = T::one();
        for (long i = 0; i < e; ++i) r = r * x;
        return r;
      } else {
        throw EvalError(offset, "cannot raise a " + kind_name(v) + " to a power");
      }
    }, v);
  }

  // --- functions ----------------------------------------------------------

  void require_q_algebra(const std::string& f, std::size_t offset) const {
    if (hint_ == RingHint::integers)
      throw EvalError(offset, f + " needs a Q-algebra of coefficients; the ring hint is Z");
  }

  TruncSeries<MultiPoly> require_series(const Value& v, const std::string& f, std::size_t offset) const {
    const auto* s = std::get_if<SeriesValue>(&v);
    if (!s) throw EvalError(offset, f + " expects a series in T, got a " + kind_name(v));
    return s->s;
  }

  Value apply(const std::string& f, const std::vector<Value>& args, std::size_t offset) const {
    try {
      return apply_unchecked(f, args, offset);
    } catch (const EvalError&) {
      throw;
    } catch (const std::exception& err) {
      throw EvalError(offset, f + ": " + err.what());
    }
  }

  Value apply_unchecked(const std::string& f, const std::vector<Value>& args, std::size_t offset) const {
    if (f == "exp") {
      require_q_algebra(f, offset);
      return SeriesValue{series_exp(require_series(args[0], f, offset))};
    }
    if (f == "log") {
      require_q_algebra(f, offset);
      return SeriesValue{series_log(require_series(args[0], f, offset))};
    }
    if (f == "geom") {
      if (!std::holds_alternative<SeriesValue>(args[0])) {
        auto x = to_coefficient(args[0], offset);
        auto ring = detail::series_ring(x.generators());
        return SeriesValue{TruncSeries<MultiPoly>::from_function(ring, 0, order_, [&](long k) {
          return x.pow(static_cast<unsigned>(k));
        })};
      }
      auto x = std::get<SeriesValue>(args[0]).s;
      auto one = TruncSeries<MultiPoly>::constant(x.ring(), x.ring().one, order_);
      return SeriesValue{series_inverse(one - x.shifted(1))};
    }
    if (f == "binomial_series") {
      auto s = tate_k::binomial_series(order_);
      return TextValue{"series in T over Z[beta_*]", s.to_string([](const NumericalPoly& p) { return p.to_string(); }, "T")};
    }
    if (f == "bernoulli") {
      if (args.empty()) {
        require_q_algebra(f, offset);
        auto s = bernoulli_minus(order_);
        return TextValue{"series in D over Q", s.to_string([](const Rational& r) { return r.to_string(); }, "D")};
      }
      long n = require_small(args[0], offset, "bernoulli index");
      if (n < 0) throw EvalError(offset, "bernoulli index must be non-negative");
      return BernoulliCache::global().get(static_cast<std::size_t>(n));
    }
    if (f == "boundary" || f == "pi_minus") {
      tate_h::TateHElem x;
      if (const auto* r = std::get_if<Rational>(&args[0])) x = tate_h::TateHElem(lift<LaurentPoly>(*r, offset));
      else if (const auto* p = std::get_if<LaurentPoly>(&args[0])) x = tate_h::TateHElem(*p);
      else throw EvalError(offset, f + " expects a Laurent polynomial in c, got a " + kind_name(args[0]));
      if (f == "boundary") return tate_h::boundary(x);
      return tate_h::pi_minus(x).poly().with_mode(CoeffMode::rational);
    }
    if (f == "partial_fractions" || f == "quotient") {
      TateKElem x = as_tate_k(args[0], f, offset);
      if (f == "quotient") return tate_k::quotient_to_betas(x);
      return TextValue{"partial fraction form", tate_k::partial_fractions(x).to_string()};
    }
    if (f == "adams") {
      long k = require_small(args[0], offset, "adams degree");
      if (k < 1) throw EvalError(offset, "adams degree must be positive");
      const Value& x = args[1];
      if (std::holds_alternative<Rational>(x)) return x;
      if (const auto* p = std::get_if<LaurentPoly>(&x)) return tate_k::adams_on_laurent(k, *p);
      if (const auto* q = std::get_if<TateKElem>(&x)) {
        if (!q->is_laurent())
          throw EvalError(offset, "adams acts on Z[q, q^-1] and on q-expansions; expand " + q->to_string() + " at 0 first");
        return TateKElem(tate_k::adams_on_laurent(k, q->numerator()), 0);
      }
      if (const auto* e = std::get_if<LaurentSeriesZ>(&x)) return expansions::adams_on_series(k, *e, order_);
      throw EvalError(offset, "adams expects a Laurent polynomial or a q-expansion, got a " + kind_name(x));
    }
    if (f == "expand") {
      TateKElem x = as_tate_k(args[0], f, offset);
      Puncture p;
      if (const auto* pp = std::get_if<Puncture>(&args[1])) p = *pp;
      else {
        long at = require_small(args[1], offset, "puncture");
        if (at != 0 && at != 1) throw EvalError(offset, "puncture must be 0, 1 or inf");
        p = at == 0 ? Puncture::zero : Puncture::one;
      }
      return expansions::expand(x, p, order_);
    }
    if (f == "binom") {
      long k = require_small(args[1], offset, "binom index");
      if (k < 0) throw EvalError(offset, "binom index must be non-negative");
      auto uk = static_cast<unsigned>(k);
      if (const auto* r = std::get_if<Rational>(&args[0])) return binom_scalar(*r, uk);
      if (const auto* n = std::get_if<NumericalPoly>(&args[0])) {
        if (*n == NumericalPoly::basis(1)) return NumericalPoly::basis(uk);
        std::vector<Integer> values;
        for (unsigned i = 0; i <= n->degree() * uk; ++i)
          values.push_back(binom_scalar(Rational(n->evaluate(Integer(i))), uk).numerator());
        return NumericalPoly::from_values(std::move(values));
      }
      throw EvalError(offset, "binom expects a number or a numerical polynomial, got a " + kind_name(args[0]));
    }
    if (f == "exp_bT") return TextValue{"graded series", tate_h::exp_bT(order_).to_string()};
    if (f == "geom_cinv") return TextValue{"graded series", tate_h::geom_cinv(order_).to_string()};
    throw EvalError(offset, "unknown function '" + f + "'");
  }

  static TateKElem as_tate_k(const Value& v, const std::string& f, std::size_t offset) {
    if (const auto* k = std::get_if<TateKElem>(&v)) return *k;
    if (const auto* r = std::get_if<Rational>(&v)) return lift<TateKElem>(*r, offset);
    throw EvalError(offset, f + " expects an element of Z[q, q^-1, (1 - q)^-1], got a " + kind_name(v));
  }

  void check_hint(const Value& v, std::size_t offset) const {
    auto fail = [&](const std::string& want) {
      throw EvalError(offset, "result is a " + kind_name(v) + ", not " + want + " as the ring hint requires");
    };
    switch (hint_) {
      case RingHint::automatic: return;
      case RingHint::tate_h:
        if (!std::holds_alternative<LaurentPoly>(v) && !std::holds_alternative<DividedPowerElem>(v) &&
            !std::holds_alternative<Rational>(v))
          fail("an element of the cohomology sequence");
        return;
      case RingHint::tate_k:
        if (!std::holds_alternative<TateKElem>(v) && !std::holds_alternative<NumericalPoly>(v) &&
            !std::holds_alternative<Rational>(v))
          fail("an element of the K-theory sequence");
        return;
      case RingHint::rationals:
        if (!std::holds_alternative<SeriesValue>(v) && !std::holds_alternative<Rational>(v)) fail("a series over Q");
        return;
      case RingHint::integers: {
        bool ok = true;
        if (const auto* s = std::get_if<SeriesValue>(&v)) {
          for (long k = s->s.low(); k <= s->s.order() && ok; ++k)
            for (const auto& [m, c] : s->s[k].terms()) ok = ok && c.is_integer();
        } else if (const auto* r = std::get_if<Rational>(&v)) {
          ok = r->is_integer();
        } else {
          ok = false;
        }
        if (!ok) fail("a series with integer coefficients");
        return;
      }
    }
  }

  long order_;
  RingHint hint_;
};

/// Parses, evaluates and renders.
inline std::string eval_to_string(const std::string& input, long order, RingHint hint = RingHint::automatic) {
  auto e = parse(input);
  return render(Evaluator(order, hint).evaluate(*e));
}

}  // namespace tatecirc::cli
