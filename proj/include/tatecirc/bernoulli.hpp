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
#include <mutex>
#include <vector>

#include "tatecirc/trunc_series.hpp"

namespace tatecirc {

inline const Ring<Rational>& rational_ring() {
  static const Ring<Rational> ring = Ring<Rational>::of(Rational(0));
  return ring;
}

/// D/(e^D - 1) through D^N, as the inverse of (e^D - 1)/D = sum_k D^k/(k+1)!.
inline TruncSeries<Rational> bernoulli_minus(long order) {
  if (order < 0) throw PreconditionError("bernoulli_minus: negative order");
  auto shifted_exp = TruncSeries<Rational>::from_function(
      rational_ring(), 0, order,
      [](long k) { return Rational(Integer(1), factorial(static_cast<unsigned long>(k + 1))); });
  return series_inverse(shifted_exp);
}

/// Memoized Bernoulli numbers B_n = n! [D^n] D/(e^D - 1), so B_1 = -1/2.
/// Safe to share between threads.
class BernoulliCache {
 public:
  Rational get(unsigned n) const {
    std::lock_guard lock(mu_);
    if (n >= values_.size()) extend(n);
    return values_[n];
  }

  std::vector<Rational> first(unsigned count) const {
    std::vector<Rational> out;
    if (count == 0) return out;
    get(count - 1);
    std::lock_guard lock(mu_);
    out.assign(values_.begin(), values_.begin() + count);
    return out;
  }

  static BernoulliCache& global() {
    static BernoulliCache cache;
    return cache;
  }

 private:
  void extend(unsigned n) const {
    // Double the target so repeated small extensions stay cheap.
    unsigned target = std::max<unsigned>(n, 2 * static_cast<unsigned>(values_.size()));
    auto series = bernoulli_minus(target);
    values_.clear();
    for (unsigned k = 0; k <= target; ++k) values_.push_back(series[k] * Rational(factorial(k)));
  }

  mutable std::mutex mu_;
  mutable std::vector<Rational> values_;
};

}  // namespace tatecirc
