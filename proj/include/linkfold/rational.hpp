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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace linkfold {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q", "-p/q" or a plain decimal such as "0.25" or "-1.5e-3".
/// Throws std::invalid_argument with a message describing the offending text.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" (lowest terms) otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Nearest rational with the given denominator.
Rational from_double(double value, const Integer& denominator);

int sign(const Rational& value);

Rational abs(const Rational& value);

/// Exact square root when the argument is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

/// Bracketing square roots with denominator 10^digits (exact when possible).
Rational sqrt_lower(const Rational& value, unsigned digits = 12);
Rational sqrt_upper(const Rational& value, unsigned digits = 12);

Integer pow10(unsigned exponent);

}  // namespace linkfold
