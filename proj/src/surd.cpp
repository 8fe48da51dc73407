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

#include "linkfold/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace linkfold {

Surd::Surd(Rational value) : coeff_(std::move(value)), radicand_(1) { normalize(); }

Surd::Surd(Rational coeff, Rational radicand) : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  if (sgn(radicand_) < 0) throw std::invalid_argument("negative radicand");
  normalize();
}

void Surd::normalize() {
  if (sgn(coeff_) == 0 || sgn(radicand_) == 0) {
    coeff_ = 0;
    radicand_ = 1;
    return;
  }
  if (auto root = exact_sqrt(radicand_)) {
    coeff_ *= *root;
    radicand_ = 1;
    return;
  }
  // sqrt(p/q) = sqrt(p*q)/q keeps the radicand integral
  const Integer den = radicand_.get_den();
  if (den != 1) {
    radicand_ = Rational(Integer(radicand_.get_num() * den));
    coeff_ /= den;
  }
  // pull out small square factors so equal values print alike
  Integer r = radicand_.get_num();
  Integer pulled = 1;
  for (unsigned long p = 2; p <= 997 && p * p <= r; ++p) {
    const unsigned long p2 = p * p;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p2) != 0) {
      r /= p2;
      pulled *= p;
    }
  }
  if (pulled != 1) {
    radicand_ = Rational(r);
    coeff_ *= Rational(pulled);
  }
}

int Surd::sign() const { return sgn(coeff_); }

Surd Surd::operator-() const {
  Surd out = *this;
  out.coeff_ = -out.coeff_;
  return out;
}

Surd Surd::abs() const { return sign() < 0 ? -*this : *this; }

double Surd::to_double() const { return coeff_.get_d() * std::sqrt(radicand_.get_d()); }

std::string Surd::to_string() const {
  if (radicand_ == 1) return linkfold::to_string(coeff_);
  return linkfold::to_string(coeff_) + "*sqrt(" + linkfold::to_string(radicand_) + ")";
}

Surd Surd::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto open = text.find("sqrt(");
  if (open == std::string_view::npos) return Surd(parse_rational(text));
  if (text.back() != ')') throw std::invalid_argument("malformed surd \"" + std::string(text) + "\"");
  std::string_view head = text.substr(0, open);
  const std::string_view inner = text.substr(open + 5, text.size() - open - 6);
  Rational coeff(1);
  if (head == "-") {
    coeff = -1;
  } else if (!head.empty()) {
    if (head.back() != '*') throw std::invalid_argument("malformed surd \"" + std::string(text) + "\"");
    head.remove_suffix(1);
    coeff = parse_rational(head);
  }
  return Surd(coeff, parse_rational(inner));
}

bool operator==(const Surd& a, const Surd& b) {
  if (a.sign() != b.sign()) return false;
  return a.coeff_ * a.coeff_ * a.radicand_ == b.coeff_ * b.coeff_ * b.radicand_;
}

bool operator<(const Surd& a, const Surd& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa < sb;
  if (sa == 0) return false;
  const Rational a2 = a.coeff_ * a.coeff_ * a.radicand_;
  const Rational b2 = b.coeff_ * b.coeff_ * b.radicand_;
  return sa > 0 ? a2 < b2 : a2 > b2;
}

}  // namespace linkfold
