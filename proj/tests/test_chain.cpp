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

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "linkfold/chain.hpp"
#include "linkfold/errors.hpp"

using namespace linkfold;
using namespace linkfold::testing;

namespace {

Linkage cycle(const std::vector<Rational>& lengths) {
  std::vector<Edge> edges;
  const std::size_t n = lengths.size();
  for (std::size_t k = 0; k < n; ++k) edges.push_back(Edge{k, k, (k + 1) % n, lengths[k]});
  return Linkage(n, edges);
}

Linkage path(const std::vector<Rational>& lengths) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < lengths.size(); ++k) edges.push_back(Edge{k, k, k + 1, lengths[k]});
  return Linkage(lengths.size() + 1, edges);
}

std::vector<Rational> random_feasible(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> len(1, 40);
  while (true) {
    std::vector<Rational> l;
    Rational total = 0, longest = 0;
    for (int k = 0; k < n; ++k) {
      l.push_back(Rational(len(rng)) / 8);
      total += l.back();
      if (l.back() > longest) longest = l.back();
    }
    if (2 * longest < total) return l;
  }
}

double distance(const PointD& a, const PointD& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

TEST_SUITE("chain") {

TEST_CASE("classification") {
  CHECK(classify_chain(path({Rational(1), Rational(1), Rational(1)})).kind == ChainKind::kOpen);
  CHECK(classify_chain(cycle({Rational(1), Rational(1), Rational(1)})).kind == ChainKind::kClosed);
  const Linkage star(4, {Edge{0, 0, 1, Rational(1)}, Edge{1, 0, 2, Rational(1)}, Edge{2, 0, 3, Rational(1)}});
  CHECK(classify_chain(star).kind == ChainKind::kOther);
  const Linkage reversed(3, {Edge{0, 2, 1, Rational(1)}, Edge{1, 1, 0, Rational(2)}});
  const ChainClass c = classify_chain(reversed);
  CHECK(c.kind == ChainKind::kOpen);
  CHECK(c.vertices == std::vector<VertexId>{0, 1, 2});
  CHECK(c.edges == std::vector<EdgeId>{1, 0});
}

TEST_CASE("canonical open") {
  const CanonicalConfiguration a = canonical_open(path({Rational(1), Rational(2)}));
  REQUIRE(a.exact.has_value());
  CHECK(a.exact->placement == std::vector<Point>{pt("0", "0"), pt("1", "0"), pt("3", "0")});
  const CanonicalConfiguration b = canonical_open(path({Rational(5)}));
  CHECK(b.exact->placement == std::vector<Point>{pt("0", "0"), pt("5", "0")});
  const CanonicalConfiguration c = canonical_open(path({Rational(1), Rational(0), Rational(1)}));
  CHECK(c.exact->placement == std::vector<Point>{pt("0", "0"), pt("1", "0"), pt("1", "0"), pt("2", "0")});
  CHECK(c.kind == CanonicalKind::kStraight);
  CHECK_THROWS_AS(canonical_open(cycle({Rational(1), Rational(1), Rational(1)})), InputError);
}

TEST_CASE("canonical closed") {
  const CanonicalConfiguration t = canonical_closed(cycle({Rational(3), Rational(4), Rational(5)}));
  CHECK(t.kind == CanonicalKind::kConcyclic);
  CHECK(std::abs(*t.radius - 2.5) <= 1e-9);
  const CanonicalConfiguration e = canonical_closed(cycle({Rational(1), Rational(1), Rational(1)}));
  CHECK(std::abs(*e.radius - 1.0 / std::sqrt(3.0)) <= 1e-9);
  const CanonicalConfiguration f = canonical_closed(cycle({Rational(2), Rational(1), Rational(1)}));
  CHECK(f.kind == CanonicalKind::kFlatDegenerate);
  REQUIRE(f.exact.has_value());
  CHECK(f.exact->placement == std::vector<Point>{pt("0", "0"), pt("2", "0"), pt("1", "0")});
  CHECK_THROWS_AS(canonical_closed(cycle({Rational(5), Rational(1), Rational(1)})), InfeasibleError);
  CHECK_THROWS_AS(canonical_closed(path({Rational(1), Rational(1)})), InputError);

  const CanonicalConfiguration ccw = canonical_closed(cycle({Rational(3), Rational(4), Rational(5)}), Turning::kCcw);
  const CanonicalConfiguration cw = canonical_closed(cycle({Rational(3), Rational(4), Rational(5)}), Turning::kCw);
  CHECK(ccw.positions[2].y > 0);
  CHECK(cw.positions[2].y < 0);
  CHECK(*ccw.direction == Turning::kCcw);
  CHECK(*cw.direction == Turning::kCw);
}

TEST_CASE("canonical closed chords match lengths") {
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<int> size(3, 9);
  for (int k = 0; k < 300; ++k) {
    const std::vector<Rational> lengths = random_feasible(rng, size(rng));
    const Linkage l = cycle(lengths);
    const CanonicalConfiguration c = canonical_closed(l);
    REQUIRE(c.radius.has_value());
    const double r = *c.radius;
    double center_angle = 0.0;
    double longest = 0.0;
    for (const Rational& x : lengths) longest = std::max(longest, to_double(x));
    for (const Edge& e : l.edges()) {
      const double want = to_double(e.rest_length);
      CHECK(std::abs(distance(c.positions[e.tail], c.positions[e.head]) - want) <= 1e-9 * want);
      center_angle += 2 * std::asin(std::min(1.0, want / (2 * r)));
    }
    // exactly one branch closes up
    const double reflex = center_angle - 2 * 2 * std::asin(std::min(1.0, longest / (2 * r))) + 2 * M_PI;
    const bool inside = std::abs(center_angle - 2 * M_PI) <= 1e-8;
    const bool outside = std::abs(reflex - 2 * M_PI) <= 1e-8;
    CHECK(inside != outside);
    CHECK(in_convex_position(c.positions));
  }
}

TEST_CASE("cyclic circumradius") {
  CHECK(cyclic_circumradius({3, 4, 5}) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(cyclic_circumradius({1, 1, 1, 1}) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  // center outside: obtuse triangle 1, 1, 1.9
  const double a = 1, b = 1, c = 1.9;
  const double s = (a + b + c) / 2;
  const double area = std::sqrt(s * (s - a) * (s - b) * (s - c));
  CHECK(cyclic_circumradius({a, b, c}) == doctest::Approx(a * b * c / (4 * area)).epsilon(1e-10));
}

TEST_CASE("turning direction") {
  const Linkage square = cycle({Rational(1), Rational(1), Rational(1), Rational(1)});
  const Configuration ccw{{pt("0", "0"), pt("1", "0"), pt("1", "1"), pt("0", "1")}, Rational(0)};
  const Configuration cw{{pt("0", "0"), pt("0", "1"), pt("1", "1"), pt("1", "0")}, Rational(0)};
  CHECK(turning_direction(square, ccw) == Turning::kCcw);
  CHECK(turning_direction(square, cw) == Turning::kCw);
  const Case flat = degenerate_triangle();
  CHECK_THROWS_AS(turning_direction(flat.linkage, flat.configuration), IndeterminateError);
}

TEST_CASE("convex interpolation") {
  const CanonicalConfiguration a = canonical_closed(cycle({Rational(3), Rational(4), Rational(5)}));
  const CanonicalConfiguration b =
      canonical_closed(cycle({Rational(31, 10), Rational(4), Rational(49, 10)}));
  const Interpolation at0 = convex_interpolate(a, b, 0.0);
  const Interpolation at1 = convex_interpolate(a, b, 1.0);
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(at0.positions[v].x == doctest::Approx(a.positions[v].x));
    CHECK(at0.positions[v].y == doctest::Approx(a.positions[v].y));
    CHECK(at1.positions[v].x == doctest::Approx(b.positions[v].x));
    CHECK(at1.positions[v].y == doctest::Approx(b.positions[v].y));
  }
  // two concyclic squares of radii 1 and 1.1
  const Rational side1 = sqrt_lower(Rational(2), 12);
  const Rational side2 = sqrt_lower(Rational(121, 50), 12);
  const CanonicalConfiguration s1 = canonical_closed(cycle({side1, side1, side1, side1}));
  const CanonicalConfiguration s2 = canonical_closed(cycle({side2, side2, side2, side2}));
  CHECK(*s1.radius == doctest::Approx(1.0));
  CHECK(*s2.radius == doctest::Approx(1.1));
  CHECK(convex_interpolate(s1, s2, 0.5).convex);

  CHECK_THROWS_AS(convex_interpolate(a, s1, 0.5), InputError);
  CHECK_THROWS_AS(convex_interpolate(a, b, 1.5), InputError);
}

TEST_CASE("interpolated canonical configurations stay convex") {
  std::mt19937_64 rng(91);
  std::uniform_int_distribution<int> size(3, 9);
  std::uniform_int_distribution<int> jitter(-8, 8);
  for (int k = 0; k < 200; ++k) {
    const std::vector<Rational> la = random_feasible(rng, size(rng));
    std::vector<Rational> lb;
    Rational total = 0, longest = 0;
    for (const Rational& x : la) {
      lb.push_back(x + Rational(jitter(rng)) / 100);
      total += lb.back();
      longest = std::max(longest, lb.back());
    }
    if (2 * longest >= total) continue;
    for (Turning dir : {Turning::kCcw, Turning::kCw}) {
      const CanonicalConfiguration a = canonical_closed(cycle(la), dir);
      const CanonicalConfiguration b = canonical_closed(cycle(lb), dir);
      for (int s = 0; s <= 10; ++s) CHECK(convex_interpolate(a, b, s / 10.0).convex);
    }
  }
}

TEST_CASE("convex position predicate") {
  CHECK(in_convex_position({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK(in_convex_position({{0, 0}, {0, 1}, {1, 1}, {1, 0}}));
  CHECK_FALSE(in_convex_position({{0, 0}, {2, 0}, {1, 0.5}, {2, 2}, {0, 2}}));
  // a star pentagon turns twice
  std::vector<PointD> star;
  for (int k = 0; k < 5; ++k) star.push_back({std::cos(k * 4 * M_PI / 5), std::sin(k * 4 * M_PI / 5)});
  CHECK_FALSE(in_convex_position(star));
}

}
