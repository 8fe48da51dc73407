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

#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "linkfold/errors.hpp"
#include "linkfold/validator.hpp"

using namespace linkfold;
using namespace linkfold::testing;

namespace {

const MagnifiedView& view_at(const std::vector<MagnifiedView>& views, const Point& p) {
  for (const MagnifiedView& v : views) {
    if (v.location == p) return v;
  }
  throw std::logic_error("no view");
}

// Relabels edges by a permutation; returns the relabeled case.
Case permuted(const Case& c, const std::vector<EdgeId>& perm) {
  std::vector<Edge> edges(c.linkage.edge_count());
  for (const Edge& e : c.linkage.edges()) {
    edges[perm[e.id]] = Edge{perm[e.id], e.tail, e.head, e.rest_length};
  }
  Case out{c.name, Linkage(c.linkage.vertex_count(), edges), c.configuration, AnnotationMatrix(edges.size())};
  for (EdgeId i = 0; i < edges.size(); ++i) {
    for (EdgeId j = 0; j < edges.size(); ++j) out.annotation.at(perm[i], perm[j]) = c.annotation.at(i, j);
  }
  return out;
}

}  // namespace

TEST_SUITE("validator") {

TEST_CASE("interleaving detection") {
  CHECK_FALSE(find_interleaving({}).has_value());
  CHECK_FALSE(find_interleaving({0, 0, 1, 1}).has_value());
  CHECK_FALSE(find_interleaving({0, 1, 1, 0}).has_value());
  CHECK_FALSE(find_interleaving({0, 1, 2, 2, 1, 3, 0}).has_value());
  const auto w = find_interleaving({0, 1, 0, 1});
  REQUIRE(w.has_value());
  CHECK(*w == std::array<std::size_t, 4>{0, 1, 2, 3});
  const auto x = find_interleaving({5, 2, 7, 5, 7, 2});
  REQUIRE(x.has_value());
  const std::vector<std::size_t> labels{5, 2, 7, 5, 7, 2};
  const auto& p = *x;
  CHECK(p[0] < p[1]);
  CHECK(p[1] < p[2]);
  CHECK(p[2] < p[3]);
  CHECK(labels[p[0]] == labels[p[2]]);
  CHECK(labels[p[1]] == labels[p[3]]);
  CHECK(labels[p[0]] != labels[p[1]]);
}

TEST_CASE("interleaving agrees with brute force") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> len(0, 9), lab(0, 3);
  for (int k = 0; k < 2000; ++k) {
    std::vector<std::size_t> labels(len(rng));
    for (auto& l : labels) l = lab(rng);
    bool brute = false;
    const std::size_t n = labels.size();
    for (std::size_t a = 0; a < n && !brute; ++a)
      for (std::size_t b = a + 1; b < n && !brute; ++b)
        for (std::size_t c = b + 1; c < n && !brute; ++c)
          for (std::size_t d = c + 1; d < n && !brute; ++d)
            brute = labels[a] == labels[c] && labels[b] == labels[d] && labels[a] != labels[b];
    CHECK(find_interleaving(labels).has_value() == brute);
  }
}

TEST_CASE("magnified views of the doubled chain") {
  const Case c = doubled_chain();
  const auto views = magnified_views(c.linkage, c.configuration);
  REQUIRE(views.size() == 2);
  const MagnifiedView& right = view_at(views, pt("1", "0"));
  CHECK(right.inbounds.size() == 2);
  CHECK(right.entrances.size() == 1);
  CHECK(right.inbounds[0].connection == right.inbounds[1].connection);
  const MagnifiedView& left = view_at(views, pt("0", "0"));
  CHECK(left.inbounds.size() == 2);
  CHECK(left.entrances.size() == 1);
  CHECK(left.inbounds[0].connection != left.inbounds[1].connection);
}

TEST_CASE("magnified views with pass-through") {
  const Case straight = straight_chain();
  CHECK(magnified_views(straight.linkage, straight.configuration).size() == 4);

  const Case tri = degenerate_triangle();
  const auto views = magnified_views(tri.linkage, tri.configuration);
  const MagnifiedView& mid = view_at(views, pt("1", "0"));
  std::vector<const Inbound*> passing;
  for (const Inbound& in : mid.inbounds) {
    if (in.edge == 0) passing.push_back(&in);
  }
  REQUIRE(passing.size() == 2);
  CHECK(passing[0]->pass_through);
  CHECK(passing[0]->connection == passing[1]->connection);
  CHECK(mid.entrances.size() == 2);
}

TEST_CASE("macroscopic") {
  const Linkage x(4, {Edge{0, 0, 1, Rational(2)}, Edge{1, 2, 3, Rational(2)}});
  const Configuration cross{{pt("0", "0"), pt("2", "0"), pt("1", "-1"), pt("1", "1")}, Rational(0)};
  const ConditionReport r = check_macroscopic(x, cross);
  CHECK(r.status == Status::kFailed);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].edges == std::vector<EdgeId>{0, 1});
  const Case doubled = doubled_chain();
  CHECK(check_macroscopic(doubled.linkage, doubled.configuration).status == Status::kPassed);
  const Linkage t(4, {Edge{0, 0, 1, Rational(2)}, Edge{1, 2, 3, Rational(1)}});
  const Configuration touch{{pt("0", "0"), pt("2", "0"), pt("1", "0"), pt("1", "1")}, Rational(0)};
  CHECK(check_macroscopic(t, touch).status == Status::kPassed);
}

TEST_CASE("well annotated") {
  const Case plus = doubled_chain(1);
  CHECK(check_well_annotated(plus.linkage, plus.configuration, plus.annotation).status == Status::kPassed);
  const Case minus = doubled_chain(-1);
  CHECK(check_well_annotated(minus.linkage, minus.configuration, minus.annotation).status == Status::kPassed);
  const Case zero = doubled_chain_unlayered();
  const ConditionReport r = check_well_annotated(zero.linkage, zero.configuration, zero.annotation);
  CHECK(r.status == Status::kFailed);
  CHECK(r.witnesses.at(0).edges == std::vector<EdgeId>{0, 1});

  // a nonoverlapping pair must carry its Ord
  Case apart = straight_chain();
  CHECK(check_well_annotated(apart.linkage, apart.configuration, apart.annotation).status == Status::kPassed);
  apart.annotation.at(0, 2) = Surd(Rational(1));
  CHECK(check_well_annotated(apart.linkage, apart.configuration, apart.annotation).status == Status::kFailed);
}

TEST_CASE("well ordered") {
  const Case c = doubled_chain(1);
  auto views = magnified_views(c.linkage, c.configuration);
  CHECK(check_well_ordered(views, c.annotation).status == Status::kPassed);
  const MagnifiedView& left = view_at(views, pt("0", "0"));
  REQUIRE(left.order.size() == 2);
  // A_01 * dir(e0) = -1 < 0 puts e1 first
  CHECK(left.inbounds[left.order[0]].edge == 1);
  CHECK(left.inbounds[left.order[1]].edge == 0);

  const Case cyc = cycle_gadget();
  auto cviews = magnified_views(cyc.linkage, cyc.configuration);
  const ConditionReport r = check_well_ordered(cviews, cyc.annotation);
  CHECK(r.status == Status::kFailed);
  CHECK(r.witnesses.at(0).edges.size() == 3);

  // sign-inconsistent pair
  Case bad = doubled_chain(1);
  bad.annotation.at(1, 0) = Surd(Rational(-1));
  auto bviews = magnified_views(bad.linkage, bad.configuration);
  CHECK(check_well_ordered(bviews, bad.annotation).status == Status::kFailed);
}

TEST_CASE("microscopic") {
  const Case gadget = interleave_gadget();
  auto views = magnified_views(gadget.linkage, gadget.configuration);
  REQUIRE(check_well_ordered(views, gadget.annotation).status == Status::kPassed);
  const ConditionReport r = check_microscopic(views);
  CHECK(r.status == Status::kFailed);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].edges.size() == 4);
  CHECK(r.witnesses[0].location == pt("0", "0"));

  // nested classes {0, 3} and {1, 2}
  Case nested = gadget;
  {
    std::vector<Point> placement = gadget.configuration.placement;
    std::vector<Edge> edges(gadget.linkage.edges().begin(), gadget.linkage.edges().begin() + 4);
    edges.push_back(Edge{4, 0, 3, Rational(0)});
    edges.push_back(Edge{5, 1, 2, Rational(0)});
    nested.linkage = Linkage(8, edges);
  }
  const Verdict v = validate(nested.linkage, nested.configuration, nested.annotation);
  CHECK(v.overall);

  const Case doubled = doubled_chain();
  auto dviews = magnified_views(doubled.linkage, doubled.configuration);
  REQUIRE(check_well_ordered(dviews, doubled.annotation).status == Status::kPassed);
  CHECK(check_microscopic(dviews).status == Status::kPassed);
}

TEST_CASE("validate short-circuits and reports") {
  const Verdict ok = validate(doubled_chain().linkage, doubled_chain().configuration, doubled_chain().annotation);
  CHECK(ok.overall);
  CHECK_FALSE(ok.first_failure().has_value());

  const Case zero = doubled_chain_unlayered();
  const Verdict v = validate(zero.linkage, zero.configuration, zero.annotation);
  CHECK_FALSE(v.overall);
  CHECK(*v.first_failure() == Condition::kWellAnnotated);
  CHECK(v.at(Condition::kMacroscopic).status == Status::kPassed);
  CHECK(v.at(Condition::kWellOrdered).status == Status::kSkipped);
  CHECK(v.at(Condition::kMicroscopic).status == Status::kSkipped);

  const Case gadget = interleave_gadget();
  CHECK(*validate(gadget.linkage, gadget.configuration, gadget.annotation).first_failure() ==
        Condition::kMicroscopic);
  const Case cyc = cycle_gadget();
  CHECK(*validate(cyc.linkage, cyc.configuration, cyc.annotation).first_failure() == Condition::kWellOrdered);

  Configuration stretched = zero.configuration;
  stretched.placement[1] = pt("2", "0");
  CHECK_THROWS_AS(validate(zero.linkage, stretched, zero.annotation), InputError);
}

TEST_CASE("layered corpus validates") {
  for (const Case& c : perturbation_corpus()) {
    CAPTURE(c.name);
    CHECK(validate(c.linkage, c.configuration, c.annotation).overall);
  }
}

TEST_CASE("random nontouching configurations validate") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 500; ++k) {
    const Case c = random_nontouching(rng, 2 + k % 7);
    CAPTURE(c.name);
    CHECK(validate(c.linkage, c.configuration, c.annotation).overall);
  }
}

TEST_CASE("verdict is invariant under edge relabeling") {
  std::mt19937_64 rng(41);
  std::vector<Case> cases = perturbation_corpus();
  cases.push_back(interleave_gadget());
  cases.push_back(cycle_gadget());
  cases.push_back(doubled_chain_unlayered());
  for (const Case& c : cases) {
    const Verdict base = validate(c.linkage, c.configuration, c.annotation);
    for (int k = 0; k < 10; ++k) {
      std::vector<EdgeId> perm(c.linkage.edge_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Case p = permuted(c, perm);
      const Verdict v = validate(p.linkage, p.configuration, p.annotation);
      CAPTURE(c.name);
      CHECK(v.overall == base.overall);
      CHECK(v.first_failure() == base.first_failure());
    }
  }
}

TEST_CASE("accepted configurations satisfy the entrance identity") {
  std::vector<Case> cases = perturbation_corpus();
  std::mt19937_64 rng(51);
  for (int k = 0; k < 100; ++k) cases.push_back(random_nontouching(rng, 2 + k % 7));
  for (const Case& c : cases) {
    auto views = magnified_views(c.linkage, c.configuration);
    REQUIRE(check_well_ordered(views, c.annotation).status == Status::kPassed);
    for (const MagnifiedView& view : views) {
      for (const auto& entrance : view.entrances) {
        for (std::size_t x : entrance) {
          for (std::size_t y : entrance) {
            if (x == y) continue;
            const Inbound& i = view.inbounds[x];
            const Inbound& j = view.inbounds[y];
            if (i.edge == j.edge) continue;
            CHECK(i.dir * c.annotation.at(i.edge, j.edge).sign() == -j.dir * c.annotation.at(j.edge, i.edge).sign());
          }
        }
      }
    }
  }
}

}
