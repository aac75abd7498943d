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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tatecirc/errors.hpp"
#include "tatecirc/ring.hpp"

namespace tatecirc {

/// Truncated series sum_{k=low}^{order} a_k T^k over a coefficient ring R.
///
/// `order` is the reliable order: every coefficient up to it is exact and
/// nothing beyond it is known. Reading past it throws TruncationError, and
/// binary operations derive the result's order from their inputs.
template <CoefficientRing R>
class TruncSeries {
 public:
  TruncSeries(Ring<R> ring, long low, long order, std::vector<R> coeffs = {})
      : ring_(std::move(ring)), low_(low), order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < low_) throw PreconditionError("TruncSeries: order below lowest index");
    std::size_t n = static_cast<std::size_t>(order_ - low_ + 1);
    if (coeffs_.size() > n) throw PreconditionError("TruncSeries: more coefficients than the order allows");
    coeffs_.resize(n, ring_.zero);
  }

  static TruncSeries constant(const Ring<R>& ring, const R& c, long order) {
    return monomial(ring, c, 0, std::max(order, 0L));
  }
  /// c T^exp, exact through `order`.
  static TruncSeries monomial(const Ring<R>& ring, const R& c, long exp, long order) {
    TruncSeries s(ring, std::min(exp, order), order);
    if (exp <= order) s.coeffs_[static_cast<std::size_t>(exp - s.low_)] = c;
    return s;
  }
  static TruncSeries from_function(const Ring<R>& ring, long low, long order, const std::function<R(long)>& f) {
    TruncSeries s(ring, low, order);
    for (long k = low; k <= order; ++k) s.coeffs_[static_cast<std::size_t>(k - low)] = f(k);
    return s;
  }

  const Ring<R>& ring() const { return ring_; }
  long low() const { return low_; }
  long order() const { return order_; }

  /// Coefficient of T^k; zero below `low`, TruncationError above `order`.
  const R& coeff(long k) const {
    if (k > order_)
      throw TruncationError("coefficient T^" + std::to_string(k) + " requested beyond reliable order " +
                            std::to_string(order_));
    if (k < low_) return ring_.zero;
    return coeffs_[static_cast<std::size_t>(k - low_)];
  }
  const R& operator[](long k) const { return coeff(k); }

  /// Lowest exponent with a nonzero coefficient, or order + 1 if none is known.
  long valuation() const {
    for (long k = low_; k <= order_; ++k)
      if (!ring_traits<R>::is_zero(coeffs_[static_cast<std::size_t>(k - low_)])) return k;
    return order_ + 1;
  }

  TruncSeries truncated(long n) const {
    if (n >= order_) return *this;
    if (n < low_) return TruncSeries(ring_, n, n);
    std::vector<R> c(coeffs_.begin(), coeffs_.begin() + (n - low_ + 1));
    return TruncSeries(ring_, low_, n, std::move(c));
  }

  /// Multiplication by T^s.
  TruncSeries shifted(long s) const { return TruncSeries(ring_, low_ + s, order_ + s, coeffs_); }

  /// Drops stored leading zeros so that low() equals the valuation.
  TruncSeries normalized() const {
    long v = valuation();
    if (v > order_ || v == low_) return *this;
    std::vector<R> c(coeffs_.begin() + (v - low_), coeffs_.end());
    return TruncSeries(ring_, v, order_, std::move(c));
  }

  template <class F>
  auto map_coefficients(F&& f, const Ring<std::invoke_result_t<F, const R&>>& target) const {
    using S = std::invoke_result_t<F, const R&>;
    std::vector<S> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(f(a));
    return TruncSeries<S>(target, low_, order_, std::move(c));
  }

  TruncSeries scaled(const R& s) const {
    TruncSeries r = *this;
    for (auto& a : r.coeffs_) a = R(a * s);
    return r;
  }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& a : r.coeffs_) a = R(-a);
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, 1); }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, -1); }

  /// Product with reliable order min(Na + low_b, Nb + low_a).
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_ring(a, b);
    long low = a.low_ + b.low_;
    long order = std::min(a.order_ + b.low_, b.order_ + a.low_);
    TruncSeries r(a.ring_, low, order);
    for (long i = a.low_; i <= a.order_; ++i) {
      const R& ai = a.coeffs_[static_cast<std::size_t>(i - a.low_)];
      if (ring_traits<R>::is_zero(ai)) continue;
      for (long j = b.low_; i + j <= order && j <= b.order_; ++j) {
        const R& bj = b.coeffs_[static_cast<std::size_t>(j - b.low_)];
        if (ring_traits<R>::is_zero(bj)) continue;
        R& slot = r.coeffs_[static_cast<std::size_t>(i + j - low)];
        slot = R(slot + ai * bj);
      }
    }
    return r;
  }

  /// First exponent k <= min(orders, upto) at which the coefficients differ.
  friend std::optional<long> first_difference(const TruncSeries& a, const TruncSeries& b, long upto) {
    check_ring(a, b);
    long hi = std::min({a.order_, b.order_, upto});
    for (long k = std::min(a.low_, b.low_); k <= hi; ++k)
      if (!(a.coeff(k) == b.coeff(k))) return k;
    return std::nullopt;
  }

  /// Coefficientwise equality through the smaller of the two orders.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.ring_.name == b.ring_.name && !first_difference(a, b, std::min(a.order_, b.order_));
  }

  /// `a_{-1} T^-1 + a_0 + a_1 T + ...`: a coefficient of 1 is omitted and
  /// compound coefficients are parenthesized.
  std::string to_string(const std::function<std::string(const R&)>& render = ring_traits<R>::render,
                        const std::string& var = "T") const {
    std::string out;
    for (long k = low_; k <= order_; ++k) {
      const R& a = coeffs_[static_cast<std::size_t>(k - low_)];
      if (ring_traits<R>::is_zero(a)) continue;
      std::string c = render(a);
      bool sum = c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos;
      bool negative = !sum && !c.empty() && c[0] == '-';
      if (negative) c = c.substr(1);
      std::string atom = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      std::string body = sum ? "(" + c + ")" : c;
      std::string term;
      if (atom.empty()) {
        term = body;
      } else if (c == "1") {
        term = atom;
      } else {
        term = body + " " + atom;
      }
      if (out.empty()) {
        out = negative ? "-" + term : term;
      } else {
        out += negative ? " - " : " + ";
        out += term;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  static void check_ring(const TruncSeries& a, const TruncSeries& b) {
    if (a.ring_.name != b.ring_.name) throw RingMismatch("series over " + a.ring_.name + " and " + b.ring_.name);
  }

  static TruncSeries combine(const TruncSeries& a, const TruncSeries& b, int sign) {
    check_ring(a, b);
    long low = std::min(a.low_, b.low_);
    long order = std::min(a.order_, b.order_);
    if (order < low) return TruncSeries(a.ring_, order, order);
    TruncSeries r(a.ring_, low, order);
    for (long k = low; k <= order; ++k) {
      R& slot = r.coeffs_[static_cast<std::size_t>(k - low)];
      slot = sign > 0 ? R(a.coeff(k) + b.coeff(k)) : R(a.coeff(k) - b.coeff(k));
    }
    return r;
  }

  Ring<R> ring_;
  long low_;
  long order_;
  std::vector<R> coeffs_;
};

/// Multiplicative inverse. Writes a = a_v T^v (1 + ...) and requires a_v to
/// be a unit of the coefficient ring; the result starts at T^-v and is
/// reliable to order N - 2v.
template <CoefficientRing R>
TruncSeries<R> series_inverse(const TruncSeries<R>& a) {
  long v = a.valuation();
  if (v > a.order()) throw RingCapabilityError("series_inverse: series is zero to its reliable order");
  std::optional<R> lead_inv = ring_traits<R>::inverse(a.coeff(v));
  if (!lead_inv)
    throw RingCapabilityError("series_inverse: leading coefficient " + ring_traits<R>::render(a.coeff(v)) +
                              " is not invertible in " + a.ring().name);
  long m = a.order() - v;  // unit part u(T) = a(T)/T^v known to order m
  std::vector<R> c;
  c.reserve(static_cast<std::size_t>(m + 1));
  c.push_back(*lead_inv);
  for (long n = 1; n <= m; ++n) {
    R acc = a.ring().zero;
    for (long k = 1; k <= n; ++k) {
      const R& uk = a.coeff(v + k);
      if (ring_traits<R>::is_zero(uk)) continue;
      acc = R(acc + uk * c[static_cast<std::size_t>(n - k)]);
    }
    c.push_back(R(-(acc * *lead_inv)));
  }
  return TruncSeries<R>(a.ring(), -v, m - v, std::move(c));
}

/// Quotient a/b by multiplying with series_inverse(b).
template <CoefficientRing R>
TruncSeries<R> series_divide(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  return a * series_inverse(b);
}

namespace detail {

template <CoefficientRing R>
void require_q_algebra(const TruncSeries<R>& a, const char* op) {
  if (!a.ring().q_algebra)
    throw RingCapabilityError(std::string(op) + " needs a Q-algebra coefficient ring, got " + a.ring().name);
}

template <CoefficientRing R>
void require_no_tail(const TruncSeries<R>& a, long from, const char* what) {
  for (long k = a.low(); k < from && k <= a.order(); ++k)
    if (!ring_traits<R>::is_zero(a.coeff(k)))
      throw PreconditionError(std::string(what) + ": nonzero coefficient at T^" + std::to_string(k));
}

}  // namespace detail

/// exp(a) for a with no Laurent tail and zero constant term, from
/// n f_n = sum_{k=1}^n k a_k f_{n-k}.
template <CoefficientRing R>
TruncSeries<R> series_exp(const TruncSeries<R>& a) {
  detail::require_q_algebra(a, "series_exp");
  detail::require_no_tail(a, 1, "series_exp");
  long n_max = a.order();
  if (n_max < 0) throw PreconditionError("series_exp: argument order is negative");
  std::vector<R> weighted;  // k a_k
  for (long k = 0; k <= n_max; ++k) weighted.push_back(k == 0 ? a.ring().zero : ring_traits<R>::times_int(a.coeff(k), k));
  std::vector<R> f;
  f.reserve(static_cast<std::size_t>(n_max + 1));
  f.push_back(a.ring().one);
  for (long n = 1; n <= n_max; ++n) {
    R acc = a.ring().zero;
    for (long k = 1; k <= n; ++k) {
      const R& wk = weighted[static_cast<std::size_t>(k)];
      if (ring_traits<R>::is_zero(wk)) continue;
      acc = R(acc + wk * f[static_cast<std::size_t>(n - k)]);
    }
    f.push_back(ring_traits<R>::divide_int(acc, n));
  }
  return TruncSeries<R>(a.ring(), 0, n_max, std::move(f));
}

/// log(a) for a = 1 + O(T) with no Laurent tail, from
/// n g_n = n a_n - sum_{k=1}^{n-1} k g_k a_{n-k}.
template <CoefficientRing R>
TruncSeries<R> series_log(const TruncSeries<R>& a) {
  detail::require_q_algebra(a, "series_log");
  detail::require_no_tail(a, 0, "series_log");
  long n_max = a.order();
  if (n_max < 0 || !(a.coeff(0) == a.ring().one))
    throw PreconditionError("series_log: constant term must be 1");
  std::vector<R> g;
  g.reserve(static_cast<std::size_t>(n_max + 1));
  g.push_back(a.ring().zero);
  std::vector<R> weighted{a.ring().zero};  // k g_k
  for (long n = 1; n <= n_max; ++n) {
    R acc = ring_traits<R>::times_int(a.coeff(n), n);
    for (long k = 1; k < n; ++k) {
      const R& an = a.coeff(n - k);
      if (ring_traits<R>::is_zero(an)) continue;
      acc = R(acc - weighted[static_cast<std::size_t>(k)] * an);
    }
    R gn = ring_traits<R>::divide_int(acc, n);
    weighted.push_back(ring_traits<R>::times_int(gn, n));
    g.push_back(std::move(gn));
  }
  return TruncSeries<R>(a.ring(), 0, n_max, std::move(g));
}

/// outer(inner(T)) by Horner's rule. inner must have zero constant term and
/// no Laurent tail, outer no Laurent tail. With v the valuation of inner, the
/// result is reliable to min(N_inner, (N_outer + 1) v - 1).
template <CoefficientRing R>
TruncSeries<R> series_compose(const TruncSeries<R>& outer, const TruncSeries<R>& inner) {
  if (outer.ring().name != inner.ring().name) throw RingMismatch("series_compose: rings differ");
  detail::require_no_tail(inner, 1, "series_compose (inner)");
  detail::require_no_tail(outer, 0, "series_compose (outer)");
  if (outer.order() < 0) throw PreconditionError("series_compose: outer order is negative");
  long v = inner.valuation();
  if (v > inner.order()) return TruncSeries<R>::constant(outer.ring(), outer.coeff(0), inner.order());
  long target = std::min(inner.order(), (outer.order() + 1) * v - 1);
  TruncSeries<R> in = inner.normalized().truncated(target);
  TruncSeries<R> r = TruncSeries<R>::constant(outer.ring(), outer.coeff(outer.order()), target);
  for (long k = outer.order() - 1; k >= 0; --k) {
    r = r * in + TruncSeries<R>::constant(outer.ring(), outer.coeff(k), target);
    r = r.truncated(target);
  }
  return r.truncated(target);
}

}  // namespace tatecirc
