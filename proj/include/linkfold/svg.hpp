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

#include <string>

#include "linkfold/errors.hpp"
#include "linkfold/linkage.hpp"
#include "linkfold/order.hpp"

namespace linkfold {

/// Validation failure raised while rendering a perturbed view.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

struct SvgOptions {
  /// Positive: draw the delta-perturbation so stacked layers separate.
  Rational display_delta{0};
  bool labels = false;
};

/// Deterministic SVG 1.1. Bars are chained into one path per maximal run
/// through degree-2 vertices; extension bars are drawn as thin lines. Throws
/// ValidationError carrying the first witness when display_delta > 0 and
/// (C, A) does not validate.
std::string render_svg(const Linkage& linkage, const Configuration& c, const AnnotationMatrix& a,
                       const SvgOptions& options = {});

/// Shortest fixed-point text with at most `digits` decimals; never "-0".
std::string format_number(double value, int digits = 6);

}  // namespace linkfold
