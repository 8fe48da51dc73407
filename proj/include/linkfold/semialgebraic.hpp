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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linkfold/linkage.hpp"

namespace linkfold {

/// Variable 2v is x_v, 2v + 1 is y_v.
using Variable = std::uint32_t;
inline Variable x_var(VertexId v) { return static_cast<Variable>(2 * v); }
inline Variable y_var(VertexId v) { return static_cast<Variable>(2 * v + 1); }
std::string variable_name(Variable v);

/// Sparse polynomial with rational coefficients. A monomial is its sorted
/// list of variables (with repetition); zero coefficients are never stored.
class Polynomial {
 public:
  using Monomial = std::vector<Variable>;

  Polynomial() = default;
  explicit Polynomial(Rational constant);
  static Polynomial variable(Variable v);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t degree() const;

  Rational evaluate(std::span<const Rational> values) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

enum class Relation { kEq, kLt, kLe, kGt, kGe };

/// p REL 0.
struct Atom {
  Polynomial polynomial;
  Relation relation = Relation::kEq;
};

/// Quantifier-free boolean combination of atoms.
struct Formula {
  enum class Kind { kTrue, kFalse, kAtom, kAnd, kOr, kNot };
  Kind kind = Kind::kTrue;
  Atom atom;
  std::vector<Formula> children;

  static Formula truth(bool value);
  /// Constant polynomials fold to true/false.
  static Formula make_atom(Polynomial p, Relation r);
  static Formula conjunction(std::vector<Formula> parts);
  static Formula disjunction(std::vector<Formula> parts);
  static Formula negation(Formula f);

  bool evaluate(std::span<const Rational> values) const;
  friend bool operator==(const Formula& a, const Formula& b);
};

struct Assertion {
  std::string family;
  std::string subject;  // e.g. "e0", "v1 v2", "e0 e3"
  Formula formula;
};

struct ConstraintSystem {
  std::string kind;  // "conf" or "nconf"
  Rational epsilon;
  std::size_t vertex_count = 0;
  std::vector<Assertion> assertions;
  std::map<std::string, std::string> metadata;
};

/// Conf_eps(L): one equality per bar when eps = 0, otherwise an upper band
/// per bar and a lower band when the rest length is at least eps.
ConstraintSystem emit_conf(const Linkage& linkage, const Rational& epsilon);

/// NConf_eps(L): emit_conf plus separation of coincident vertices by
/// zero-length paths, endpoint-only contact per bar pair, and no vertex in
/// the relative interior of a bar.
ConstraintSystem emit_nconf(const Linkage& linkage, const Rational& epsilon);

/// Deterministic SMT-LIB2 (QF_NRA) text.
std::string serialize(const ConstraintSystem& system);

/// Reads text produced by serialize. Throws InputError on malformed input.
ConstraintSystem parse_system(std::string_view text);

/// Exact evaluation. Throws InputError when the placement does not cover
/// every vertex.
bool eval(const ConstraintSystem& system, std::span<const Point> placement);

/// Cap on enumerated zero-length paths per vertex pair.
inline constexpr std::size_t kMaxZeroPaths = 64;

}  // namespace linkfold
