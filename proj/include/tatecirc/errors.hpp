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

#include <stdexcept>
#include <string>

namespace tatecirc {

/// Operands live in rings over different variables or generator lists.
class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value would leave an integer-restricted ring.
class NotIntegral : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two truncated series are over different coefficient rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The coefficient ring lacks an operation the caller needs
/// (exact division by integers for exp/log, an inverse for a leading term).
class RingCapabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A coefficient beyond the reliable truncation order was requested.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An operation's precondition does not hold for its arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tatecirc
