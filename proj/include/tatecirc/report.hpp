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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tatecirc/trunc_series.hpp"

namespace tatecirc {

/// Where a checked identity first fails: term index plus both renderings.
struct Defect {
  long index = 0;
  std::string expected;
  std::string actual;
};

struct Check {
  std::string identity;
  bool pass = true;
  std::optional<Defect> first_defect;
  std::optional<std::string> note;

  static Check ok(std::string identity, std::optional<std::string> note = std::nullopt) {
    return Check{std::move(identity), true, std::nullopt, std::move(note)};
  }
  static Check failed(std::string identity, Defect d, std::optional<std::string> note = std::nullopt) {
    return Check{std::move(identity), false, std::move(d), std::move(note)};
  }
  /// Passing check when `holds`, otherwise a failure without a term index.
  static Check that(std::string identity, bool holds, std::string detail = {}) {
    if (holds) return ok(std::move(identity));
    return failed(std::move(identity), Defect{-1, "true", detail.empty() ? "false" : detail});
  }
};

/// Outcome of one verification suite. pass() is true iff every check passed.
struct Report {
  std::string suite;
  long order = 0;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

/// Coefficientwise comparison through `upto`, reporting the first mismatch.
template <CoefficientRing R>
Check compare_series(std::string identity, const TruncSeries<R>& expected, const TruncSeries<R>& actual, long upto) {
  if (expected.order() < upto || actual.order() < upto) {
    return Check::failed(std::move(identity),
                         Defect{upto, "order >= " + std::to_string(upto),
                                "orders " + std::to_string(expected.order()) + ", " + std::to_string(actual.order())});
  }
  if (auto k = first_difference(expected, actual, upto)) {
    return Check::failed(std::move(identity), Defect{*k, ring_traits<R>::render(expected.coeff(*k)),
                                                     ring_traits<R>::render(actual.coeff(*k))});
  }
  return Check::ok(std::move(identity));
}

}  // namespace tatecirc
