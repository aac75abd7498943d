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

#include <concepts>
#include <optional>
#include <string>

#include "tatecirc/divided_power.hpp"
#include "tatecirc/errors.hpp"
#include "tatecirc/laurent_poly.hpp"
#include "tatecirc/multi_poly.hpp"
#include "tatecirc/numerical_poly.hpp"
#include "tatecirc/rational.hpp"
#include "tatecirc/rational_function.hpp"

namespace tatecirc {

/// Per-type coefficient ring contract used by the series engine. Rings whose
/// zero needs context (generator names, a variable) take a prototype element.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static std::string name(const Rational&) { return "Q"; }
  static bool q_algebra(const Rational&) { return true; }
  static Rational zero(const Rational&) { return 0; }
  static Rational one(const Rational&) { return 1; }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static std::optional<Rational> inverse(const Rational& a) {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
  }
  static Rational divide_int(const Rational& a, long n) { return a / Rational(n); }
  static Rational times_int(const Rational& a, long n) { return a * Rational(n); }
  static std::string render(const Rational& a) { return a.to_string(); }
};

template <>
struct ring_traits<Integer> {
  static std::string name(const Integer&) { return "Z"; }
  static bool q_algebra(const Integer&) { return false; }
  static Integer zero(const Integer&) { return 0; }
  static Integer one(const Integer&) { return 1; }
  static bool is_zero(const Integer& a) { return a == 0; }
  static std::optional<Integer> inverse(const Integer& a) {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }
  static Integer divide_int(const Integer&, long) { throw RingCapabilityError("Z is not a Q-algebra"); }
  static Integer times_int(const Integer& a, long n) { return Integer(a * n); }
  static std::string render(const Integer& a) { return a.get_str(); }
};

template <>
struct ring_traits<MultiPoly> {
  static std::string name(const MultiPoly& p) { return p.ring_name(); }
  static bool q_algebra(const MultiPoly&) { return true; }
  static MultiPoly zero(const MultiPoly& p) { return MultiPoly(p.generators()); }
  static MultiPoly one(const MultiPoly& p) { return MultiPoly::constant(p.generators(), 1); }
  static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
  static std::optional<MultiPoly> inverse(const MultiPoly& a) {
    if (a.is_zero() || !a.is_constant()) return std::nullopt;
    return MultiPoly::constant(a.generators(), a.constant_term().inverse());
  }
  static MultiPoly divide_int(const MultiPoly& a, long n) { return a.scaled(Rational(1) / Rational(n)); }
  static MultiPoly times_int(const MultiPoly& a, long n) { return a.scaled(Rational(n)); }
  static std::string render(const MultiPoly& a) { return a.to_string(); }
};

template <>
struct ring_traits<RationalFunction> {
  static std::string name(const RationalFunction& f) { return "Q(" + f.variable() + ")"; }
  static bool q_algebra(const RationalFunction&) { return true; }
  static RationalFunction zero(const RationalFunction& f) { return RationalFunction(f.variable()); }
  static RationalFunction one(const RationalFunction& f) { return RationalFunction::constant(f.variable(), 1); }
  static bool is_zero(const RationalFunction& a) { return a.is_zero(); }
  static std::optional<RationalFunction> inverse(const RationalFunction& a) {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
  }
  static RationalFunction divide_int(const RationalFunction& a, long n) { return a.scaled(Rational(1) / Rational(n)); }
  static RationalFunction times_int(const RationalFunction& a, long n) { return a.scaled(Rational(n)); }
  static std::string render(const RationalFunction& a) { return a.to_string(); }
};

template <>
struct ring_traits<LaurentPoly> {
  static std::string name(const LaurentPoly& p) {
    return std::string(p.mode() == CoeffMode::integer ? "Z[" : "Q[") + p.variable() + "," + p.variable() + "^-1]";
  }
  static bool q_algebra(const LaurentPoly& p) { return p.mode() == CoeffMode::rational; }
  static LaurentPoly zero(const LaurentPoly& p) { return LaurentPoly(p.variable(), p.mode()); }
  static LaurentPoly one(const LaurentPoly& p) { return LaurentPoly::constant(p.variable(), 1, p.mode()); }
  static bool is_zero(const LaurentPoly& a) { return a.is_zero(); }
  static std::optional<LaurentPoly> inverse(const LaurentPoly& a) {
    if (!a.is_unit()) return std::nullopt;
    return a.inverse();
  }
  static LaurentPoly divide_int(const LaurentPoly& a, long n) {
    if (a.mode() == CoeffMode::integer) throw RingCapabilityError(name(a) + " is not a Q-algebra");
    return a.scaled(Rational(1) / Rational(n));
  }
  static LaurentPoly times_int(const LaurentPoly& a, long n) { return a.scaled(Rational(n)); }
  static std::string render(const LaurentPoly& a) { return a.to_string(); }
};

template <>
struct ring_traits<DividedPowerElem> {
  static std::string name(const DividedPowerElem&) { return "Z[b_*]"; }
  static bool q_algebra(const DividedPowerElem&) { return false; }
  static DividedPowerElem zero(const DividedPowerElem&) { return {}; }
  static DividedPowerElem one(const DividedPowerElem&) { return DividedPowerElem::one(); }
  static bool is_zero(const DividedPowerElem& a) { return a.is_zero(); }
  static std::optional<DividedPowerElem> inverse(const DividedPowerElem& a) {
    if (a == DividedPowerElem::one() || a == -DividedPowerElem::one()) return a;
    return std::nullopt;
  }
  static DividedPowerElem divide_int(const DividedPowerElem&, long) {
    throw RingCapabilityError("Z[b_*] is not a Q-algebra");
  }
  static DividedPowerElem times_int(const DividedPowerElem& a, long n) {
    DividedPowerElem r;
    for (const auto& [k, c] : a.coords()) r.add(k, Integer(c * n));
    return r;
  }
  static std::string render(const DividedPowerElem& a) { return a.to_string(); }
};

template <>
struct ring_traits<NumericalPoly> {
  static std::string name(const NumericalPoly&) { return "Z[beta_*]"; }
  static bool q_algebra(const NumericalPoly&) { return false; }
  static NumericalPoly zero(const NumericalPoly&) { return {}; }
  static NumericalPoly one(const NumericalPoly&) { return NumericalPoly::one(); }
  static bool is_zero(const NumericalPoly& a) { return a.is_zero(); }
  static std::optional<NumericalPoly> inverse(const NumericalPoly& a) {
    if (a == NumericalPoly::one() || a == -NumericalPoly::one()) return a;
    return std::nullopt;
  }
  static NumericalPoly divide_int(const NumericalPoly&, long) {
    throw RingCapabilityError("Z[beta_*] is not a Q-algebra");
  }
  static NumericalPoly times_int(const NumericalPoly& a, long n) {
    NumericalPoly r;
    for (const auto& [k, c] : a.coords()) r.add(k, Integer(c * n));
    return r;
  }
  static std::string render(const NumericalPoly& a) { return a.to_string(); }
};

template <class R>
concept CoefficientRing = requires(const R a, const R b, long n) {
  { R(a + b) };
  { R(a - b) };
  { R(a * b) };
  { R(-a) };
  { a == b } -> std::convertible_to<bool>;
  { ring_traits<R>::name(a) } -> std::convertible_to<std::string>;
  { ring_traits<R>::is_zero(a) } -> std::convertible_to<bool>;
  { ring_traits<R>::inverse(a) } -> std::same_as<std::optional<R>>;
  { ring_traits<R>::divide_int(a, n) } -> std::convertible_to<R>;
  { ring_traits<R>::times_int(a, n) } -> std::convertible_to<R>;
};

/// Coefficient ring descriptor: a name plus context-carrying zero and one.
/// Two series may be combined only when their ring names agree.
template <CoefficientRing R>
struct Ring {
  std::string name;
  R zero;
  R one;
  bool q_algebra = false;

  static Ring of(const R& prototype) {
    using T = ring_traits<R>;
    return Ring{T::name(prototype), T::zero(prototype), T::one(prototype), T::q_algebra(prototype)};
  }
};

}  // namespace tatecirc
