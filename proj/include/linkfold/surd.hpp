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
#include <string_view>

#include "linkfold/rational.hpp"

namespace linkfold {

/// An exact real of the form coeff * sqrt(radicand) with rational coeff and
/// nonnegative rational radicand.
///
/// Order-function values are (rational) * len(e1), and len(e1) is the square
/// root of a rational, so every annotation and every overlap length fits this
/// form. Sign, equality and ordering are decidable without approximation.
/// Sums of surds with different radicands are not representable and are not
/// offered.
class Surd {
 public:
  Surd() = default;
  explicit Surd(Rational value);
  Surd(Rational coeff, Rational radicand);

  const Rational& coeff() const { return coeff_; }
  const Rational& radicand() const { return radicand_; }

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Surd operator-() const;
  Surd abs() const;
  double to_double() const;

  /// Text form "c" or "c*sqrt(r)".
  std::string to_string() const;
  static Surd parse(std::string_view text);

  friend bool operator==(const Surd& a, const Surd& b);
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }
  friend bool operator<(const Surd& a, const Surd& b);
  friend bool operator>(const Surd& a, const Surd& b) { return b < a; }
  friend bool operator<=(const Surd& a, const Surd& b) { return !(b < a); }
  friend bool operator>=(const Surd& a, const Surd& b) { return !(a < b); }

 private:
  void normalize();

  Rational coeff_{0};
  Rational radicand_{1};
};

}  // namespace linkfold
