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

#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "linkfold/errors.hpp"
#include "linkfold/semialgebraic.hpp"

using namespace linkfold;
using namespace linkfold::testing;

namespace {

std::size_t count_family(const ConstraintSystem& s, const std::string& family) {
  std::size_t n = 0;
  for (const Assertion& a : s.assertions) n += a.family == family;
  return n;
}

Linkage unit_bar() { return Linkage(2, {Edge{0, 0, 1, Rational(1)}}); }

}  // namespace

TEST_SUITE("semialgebraic") {

TEST_CASE("polynomials") {
  const Polynomial x = Polynomial::variable(x_var(0));
  const Polynomial y = Polynomial::variable(y_var(0));
  const Polynomial p = (x - y) * (x + y);
  CHECK(p.degree() == 2);
  CHECK(p.terms().size() == 2);
  const std::vector<Rational> values{Rational(3), Rational(2)};
  CHECK(p.evaluate(values) == 5);
  CHECK((p - p).terms().empty());
  CHECK(Polynomial(Rational(3)).is_constant());
  CHECK(variable_name(x_var(4)) == "x4");
  CHECK(variable_name(y_var(4)) == "y4");
}

TEST_CASE("formulas fold constants") {
  CHECK(Formula::make_atom(Polynomial(Rational(1)), Relation::kGt).kind == Formula::Kind::kTrue);
  CHECK(Formula::make_atom(Polynomial(Rational(0)), Relation::kLt).kind == Formula::Kind::kFalse);
  CHECK(Formula::conjunction({}).kind == Formula::Kind::kTrue);
  CHECK(Formula::disjunction({}).kind == Formula::Kind::kFalse);
  const Formula f = Formula::negation(Formula::truth(true));
  CHECK_FALSE(f.evaluate({}));
}

TEST_CASE("emit_conf") {
  const ConstraintSystem single = emit_conf(unit_bar(), Rational(0));
  REQUIRE(single.assertions.size() == 1);
  CHECK(single.assertions[0].formula.kind == Formula::Kind::kAtom);
  CHECK(single.assertions[0].formula.atom.relation == Relation::kEq);
  CHECK(single.vertex_count == 2);

  const Linkage chain(3, {Edge{0, 0, 1, Rational(1)}, Edge{1, 1, 2, Rational(1)}});
  const ConstraintSystem band = emit_conf(chain, Rational(1, 10));
  CHECK(band.assertions.size() == 4);
  CHECK(count_family(band, "bar-upper") == 2);
  CHECK(count_family(band, "bar-lower") == 2);

  const Linkage tiny(2, {Edge{0, 0, 1, Rational(1, 20)}});
  CHECK(emit_conf(tiny, Rational(1, 10)).assertions.size() == 1);

  const std::vector<Point> good{pt("0", "0"), pt("1", "0")};
  const std::vector<Point> bad{pt("0", "0"), pt("2", "0")};
  CHECK(eval(single, good));
  CHECK_FALSE(eval(single, bad));
  const std::vector<Point> short_placement{pt("0", "0")};
  CHECK_THROWS_AS(eval(single, short_placement), InputError);
}

TEST_CASE("emit_nconf") {
  const ConstraintSystem single = emit_nconf(unit_bar(), Rational(0));
  CHECK(single.assertions.size() == 2);
  CHECK(count_family(single, "bar-length") == 1);
  CHECK(count_family(single, "vertex-separation") == 1);

  const Linkage chain(3, {Edge{0, 0, 1, Rational(1)}, Edge{1, 1, 2, Rational(1)}});
  const ConstraintSystem s = emit_nconf(chain, Rational(0));
  const std::vector<Point> straight{pt("0", "0"), pt("1", "0"), pt("2", "0")};
  CHECK(eval(s, straight));
  const std::vector<Point> folded{pt("0", "0"), pt("1", "0"), pt("0", "0")};
  CHECK_FALSE(eval(s, folded));

  const Linkage two(4, {Edge{0, 0, 1, Rational(2)}, Edge{1, 2, 3, Rational(2)}});
  const ConstraintSystem t = emit_nconf(two, Rational(0));
  const std::vector<Point> crossing{pt("0", "0"), pt("2", "0"), pt("1", "-1"), pt("1", "1")};
  CHECK_FALSE(eval(t, crossing));
  const std::vector<Point> apart{pt("0", "0"), pt("2", "0"), pt("0", "1"), pt("2", "1")};
  CHECK(eval(t, apart));
}

TEST_CASE("serialization") {
  const ConstraintSystem empty = emit_nconf(Linkage(), Rational(0));
  const std::string text = serialize(empty);
  CHECK(text.find("(assert") == std::string::npos);
  CHECK(text.find("(check-sat)") != std::string::npos);

  const std::string one = serialize(emit_conf(unit_bar(), Rational(0)));
  std::size_t asserts = 0;
  for (std::size_t at = one.find("(assert"); at != std::string::npos; at = one.find("(assert", at + 1)) ++asserts;
  CHECK(asserts == 1);
  CHECK(one.find("(assert (=") != std::string::npos);
  CHECK(one.find("(declare-const x1 Real)") != std::string::npos);
  CHECK(one.find("(set-logic QF_NRA)") != std::string::npos);

  const Linkage frac(2, {Edge{0, 0, 1, Rational(3, 7)}});
  CHECK(serialize(emit_conf(frac, Rational(0))).find("(- (/ 9.0 49.0))") != std::string::npos);

  CHECK_THROWS_AS(parse_system("(assert (= x0"), InputError);
}

TEST_CASE("round trip and byte stability") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 200; ++k) {
    const Case c = random_small_instance(rng);
    for (const ConstraintSystem& s :
         {emit_conf(c.linkage, c.configuration.epsilon), emit_nconf(c.linkage, c.configuration.epsilon)}) {
      const std::string text = serialize(s);
      CHECK(text == serialize(s));
      const ConstraintSystem back = parse_system(text);
      CHECK(back.kind == s.kind);
      CHECK(back.epsilon == s.epsilon);
      CHECK(back.vertex_count == s.vertex_count);
      REQUIRE(back.assertions.size() == s.assertions.size());
      for (std::size_t a = 0; a < s.assertions.size(); ++a) {
        CHECK(back.assertions[a].family == s.assertions[a].family);
        CHECK(back.assertions[a].subject == s.assertions[a].subject);
        CHECK(back.assertions[a].formula == s.assertions[a].formula);
      }
      CHECK(serialize(back) == text);
    }
  }
}

TEST_CASE("oracle equivalence") {
  std::mt19937_64 rng(103);
  int touching = 0, members = 0;
  for (int k = 0; k < 1000; ++k) {
    const Case c = random_small_instance(rng);
    const bool member = configuration_membership(c.linkage, c.configuration);
    const bool expected = member && is_nontouching(c.linkage, c.configuration);
    members += member;
    touching += member && !expected;
    CHECK(eval(emit_conf(c.linkage, c.configuration.epsilon), c.configuration.placement) == member);
    CHECK(eval(emit_nconf(c.linkage, c.configuration.epsilon), c.configuration.placement) == expected);
  }
  // the corpus exercises both outcomes
  CHECK(members > 100);
  CHECK(touching > 50);
}

TEST_CASE("band nesting") {
  std::mt19937_64 rng(107);
  const std::vector<Rational> eps{Rational(0), Rational(1, 20), Rational(1, 10), Rational(1, 2), Rational(2)};
  for (int k = 0; k < 300; ++k) {
    const Case c = random_small_instance(rng);
    bool seen = false;
    for (const Rational& e : eps) {
      const bool now = eval(emit_conf(c.linkage, e), c.configuration.placement);
      if (seen) CHECK(now);
      seen = seen || now;
    }
  }
}

TEST_CASE("zero-length paths") {
  // a triangle of zero-length bars: any two corners may coincide
  const Linkage tri(3, {Edge{0, 0, 1, Rational(0)}, Edge{1, 1, 2, Rational(0)}, Edge{2, 2, 0, Rational(0)}});
  const ConstraintSystem s = emit_nconf(tri, Rational(0));
  const std::vector<Point> together{pt("1", "1"), pt("1", "1"), pt("1", "1")};
  CHECK(eval(s, together));
  CHECK(s.metadata.count("zero-distance-paths") == 1);
}

}
