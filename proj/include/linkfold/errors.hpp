// Copyright 2026 The Linkfold Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace linkfold {

/// Caller supplied data that violates an operation's precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extension bars whose endpoints cannot be merged.
class InvalidReductionError : public InputError {
 public:
  using InputError::InputError;
};

/// A perturbation radius outside (0, delta_bound).
class BoundError : public InputError {
 public:
  using InputError::InputError;
};

/// Closed chain whose longest bar exceeds the sum of the others.
class InfeasibleError : public InputError {
 public:
  using InputError::InputError;
};

/// Turning direction of a polygon with zero signed area.
class IndeterminateError : public InputError {
 public:
  using InputError::InputError;
};

/// A construction that should be unreachable for valid input failed its own
/// exact verification.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace linkfold
