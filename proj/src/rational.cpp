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

#include "linkfold/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace linkfold {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  auto fail = [&] {
    throw std::invalid_argument("malformed number \"" + std::string(original) + "\"");
  };
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    bool negative = false;
    if (!exp_part.empty() && (exp_part[0] == '+' || exp_part[0] == '-')) {
      negative = exp_part[0] == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) fail();
    exponent = std::stol(std::string(exp_part));
    if (negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail();
    if (!whole.empty() && !all_digits(whole)) fail();
    if (!frac.empty() && !all_digits(frac)) fail();
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(text)) fail();
    digits = std::string(text);
  }
  Rational value{Integer(digits, 10)};
  if (exponent > 0) {
    value *= pow10(static_cast<unsigned>(exponent));
  } else if (exponent < 0) {
    value /= pow10(static_cast<unsigned>(-exponent));
  }
  value.canonicalize();
  return value;
}

}  // namespace

Integer pow10(unsigned exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty number");
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction \"" + std::string(original) + "\"");
    }
    Integer d(std::string{den}, 10);
    if (d == 0) {
      throw std::invalid_argument("zero denominator in \"" + std::string(original) + "\"");
    }
    value = Rational(Integer(std::string{num}, 10), d);
    value.canonicalize();
  } else {
    value = parse_decimal(text, original);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

double to_double(const Rational& value) {
  return value.get_d();
}

Rational from_double(double value, const Integer& denominator) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite coordinate");
  // exact binary value, then round to the grid
  Rational exact(value);
  Rational scaled = exact * denominator;
  Integer floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational remainder = scaled - floor_part;
  if (remainder * 2 >= 1) floor_part += 1;
  Rational result(floor_part, denominator);
  result.canonicalize();
  return result;
}

int sign(const Rational& value) {
  return sgn(value);
}

Rational abs(const Rational& value) {
  return sgn(value) < 0 ? Rational(-value) : value;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(value.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer num;
  Integer den;
  mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
  Rational root(num, den);
  root.canonicalize();
  return root;
}

Rational sqrt_lower(const Rational& value, unsigned digits) {
  if (sgn(value) < 0) throw std::invalid_argument("sqrt of negative value");
  if (auto exact = exact_sqrt(value)) return *exact;
  // floor(sqrt(v * 10^(2d))) / 10^d
  const Integer scale = pow10(digits);
  Rational scaled = value * scale * scale;
  Integer floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Integer root;
  mpz_sqrt(root.get_mpz_t(), floor_part.get_mpz_t());
  Rational result(root, scale);
  result.canonicalize();
  return result;
}

Rational sqrt_upper(const Rational& value, unsigned digits) {
  if (auto exact = exact_sqrt(value)) return *exact;
  Rational result = sqrt_lower(value, digits) + Rational(1, pow10(digits));
  result.canonicalize();
  return result;
}

}  // namespace linkfold
