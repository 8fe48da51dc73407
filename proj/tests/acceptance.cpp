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
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cli_cases.hpp"
#include "corpus.hpp"
#include "linkfold/adornment.hpp"
#include "linkfold/chain.hpp"
#include "linkfold/corridor.hpp"
#include "linkfold/errors.hpp"
#include "linkfold/semialgebraic.hpp"
#include "linkfold/validator.hpp"

using namespace linkfold;
using namespace linkfold::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (ok) detail << what;
    ok = false;
  }
};

Linkage cycle(const std::vector<Rational>& lengths) {
  std::vector<Edge> edges;
  const std::size_t n = lengths.size();
  for (std::size_t k = 0; k < n; ++k) edges.push_back(Edge{k, k, (k + 1) % n, lengths[k]});
  return Linkage(n, edges);
}

Surd length(const OrientedEdge& e) { return Surd(Rational(1), squared_distance(e.tail, e.head)); }

void order_function(Outcome& o) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 1000; ++k) {
    const OrientedEdge e = random_edge(rng);
    if (!ord(e, e).is_zero()) o.fail("ord(e, e) != 0");
  }
  std::uniform_int_distribution<int> offset(-40, 40);
  int pairs = 0;
  while (pairs < 1000) {
    const OrientedEdge e = random_edge(rng);
    const int s = offset(rng);
    if (e.tail == e.head || s == 0) continue;
    ++pairs;
    const Point d = e.head - e.tail;
    const Point shift = (Rational(s) / 16) * Point{-d.y, d.x};
    const OrientedEdge f{e.tail + shift, e.head + shift};
    if (!(ord(e, f) == (s > 0 ? length(e) : -length(e)))) o.fail("parallel offset ord != +-len");
  }
  const ContinuityResult r = continuity_probe(rng, 1000);
  o.detail << r.monotone << "/" << r.samples << " monotone samples";
  if (!r.ok()) o.fail("; continuity probe failed");
}

void validator_soundness(Outcome& o) {
  std::mt19937_64 rng(31);
  int failures = 0;
  for (int k = 0; k < 500; ++k) {
    const Case c = random_nontouching(rng, 2 + k % 7);
    if (!validate(c.linkage, c.configuration, annotate(c.linkage, c.configuration)).overall) ++failures;
  }
  o.detail << "500 configurations, " << failures << " rejected";
  if (failures != 0) o.ok = false;
}

void validator_rejection(Outcome& o) {
  auto first = [](const Case& c) { return validate(c.linkage, c.configuration, c.annotation).first_failure(); };
  const Case zero = doubled_chain_unlayered();
  if (first(zero) != Condition::kWellAnnotated) o.fail("doubled chain with A01 = 0 not rejected as well-annotated");

  const Case gadget = interleave_gadget();
  const Verdict v = validate(gadget.linkage, gadget.configuration, gadget.annotation);
  const ConditionReport& micro = v.at(Condition::kMicroscopic);
  if (v.first_failure() != Condition::kMicroscopic || micro.witnesses.empty() ||
      micro.witnesses[0].edges.size() != 4) {
    o.fail("interleaving gadget not rejected as microscopic with four edges");
  }
  if (first(cycle_gadget()) != Condition::kWellOrdered) o.fail("cycle gadget not rejected as well-ordered");
  if (!micro.witnesses.empty()) {
    o.detail << "interleaving witness edges";
    for (EdgeId e : micro.witnesses[0].edges) o.detail << " " << e;
  }
  // repeat runs agree
  for (int k = 0; k < 3; ++k) {
    const Verdict again = validate(gadget.linkage, gadget.configuration, gadget.annotation);
    if (again.at(Condition::kMicroscopic).witnesses[0].edges != micro.witnesses[0].edges) o.fail("witness varies");
  }
}

bool within(const Point& p, const Point& q, const Rational& r) { return squared_distance(p, q) <= r * r; }

void perturbation_soundness(Outcome& o) {
  int runs = 0;
  for (const Case& c : perturbation_corpus()) {
    const Rational bound = delta_bound(c.linkage, c.configuration);
    for (const Rational& d : {Rational(1, 10), Rational(1, 40), Rational(1, 160)}) {
      ++runs;
      const PerturbationResult r = perturb(c.linkage, c.configuration, c.annotation, clamp_delta(d, bound));
      const std::string tag = c.name + " at " + to_string(d) + ": ";
      if (!is_nontouching(r.linkage, r.configuration)) o.fail(tag + "touching");
      for (VertexId v = 0; v < r.linkage.vertex_count(); ++v) {
        if (!within(r.configuration.at(v), c.configuration.at(r.map.vertex_to_original[v]), r.delta)) {
          o.fail(tag + "vertex moved more than delta");
        }
      }
      for (const Edge& e : r.linkage.edges()) {
        const Rational d2 = squared_distance(r.configuration.at(e.tail), r.configuration.at(e.head));
        const Rational hi = e.rest_length + 2 * r.delta;
        const Rational lo = e.rest_length - 2 * r.delta;
        if (d2 > hi * hi || (sgn(lo) >= 0 && d2 < lo * lo)) o.fail(tag + "bar drift above 2 delta");
      }
      const AnnotationMatrix after = annotate(r.linkage, r.configuration);
      for (EdgeId i = 0; i < c.linkage.edge_count(); ++i) {
        for (EdgeId j = 0; j < c.linkage.edge_count(); ++j) {
          const int want = c.annotation.at(i, j).sign();
          if (want != 0 && after.at(i, j).sign() != want) o.fail(tag + "annotation sign changed");
        }
      }
    }
  }
  o.detail << runs << " runs over " << perturbation_corpus().size() << " cases";
}

void limit_probe(Outcome& o) {
  std::vector<Rational> deltas;
  for (int k = 1; k <= 6; ++k) deltas.push_back(Rational(1) / (Integer(1) << (2 * k)));
  int pairs = 0;
  for (const Case& c : perturbation_corpus()) {
    const ProbeReport report = convergence_probe(c.linkage, c.configuration, c.annotation, deltas);
    if (!report.ok()) o.fail(c.name + ": probe not ok");
    for (const ProbeStep& s : report.steps) {
      for (const ProbePair& p : s.pairs) {
        if (p.overlap.is_zero()) continue;
        ++pairs;
        const double gap = std::abs(p.value.abs().to_double() - p.overlap.to_double());
        if (gap > 4 * to_double(s.delta)) o.fail(c.name + ": gap above 4 delta");
      }
    }
  }
  o.detail << pairs << " overlapping pair samples";
}

void canonical_closed_chain(Outcome& o) {
  const CanonicalConfiguration t = canonical_closed(cycle({Rational(3), Rational(4), Rational(5)}));
  if (!t.radius || std::abs(*t.radius - 2.5) > 1e-9) o.fail("3-4-5 radius");
  const CanonicalConfiguration e = canonical_closed(cycle({Rational(1), Rational(1), Rational(1)}));
  if (!e.radius || std::abs(*e.radius - 1.0 / std::sqrt(3.0)) > 1e-9) o.fail("1-1-1 radius");
  const CanonicalConfiguration f = canonical_closed(cycle({Rational(2), Rational(1), Rational(1)}));
  if (f.kind != CanonicalKind::kFlatDegenerate) o.fail("2-1-1 not flagged flat");
  o.detail << "r(3,4,5) = " << *t.radius << ", r(1,1,1) = " << *e.radius;
}

void convex_interpolation(Outcome& o) {
  std::mt19937_64 rng(91);
  std::uniform_int_distribution<int> size(3, 9), len(1, 40), jitter(-8, 8);
  auto feasible = [](const std::vector<Rational>& l) {
    Rational total = 0, longest = 0;
    for (const Rational& x : l) total += x, longest = std::max(longest, x);
    return 2 * longest < total;
  };
  int pairs = 0, samples = 0;
  while (pairs < 500) {
    const int n = size(rng);
    std::vector<Rational> la, lb;
    for (int k = 0; k < n; ++k) la.push_back(Rational(len(rng)) / 8);
    for (const Rational& x : la) lb.push_back(x + Rational(jitter(rng)) / 100);
    if (!feasible(la) || !feasible(lb) || sgn(*std::min_element(lb.begin(), lb.end())) <= 0) continue;
    const Turning dir = pairs % 2 == 0 ? Turning::kCcw : Turning::kCw;
    const CanonicalConfiguration a = canonical_closed(cycle(la), dir);
    const CanonicalConfiguration b = canonical_closed(cycle(lb), dir);
    ++pairs;
    for (int s = 0; s <= 10; ++s) {
      ++samples;
      if (!convex_interpolate(a, b, s / 10.0).convex) o.fail("non-convex sample");
    }
  }
  o.detail << pairs << " pairs, " << samples << " samples";
}

void emitter_oracle(Outcome& o) {
  std::mt19937_64 rng(103);
  int mismatches = 0, members = 0, touching = 0;
  for (int k = 0; k < 1000; ++k) {
    const Case c = random_small_instance(rng);
    const bool member = configuration_membership(c.linkage, c.configuration);
    const bool nontouching = member && is_nontouching(c.linkage, c.configuration);
    members += member;
    touching += member && !nontouching;
    mismatches += eval(emit_conf(c.linkage, c.configuration.epsilon), c.configuration.placement) != member;
    mismatches += eval(emit_nconf(c.linkage, c.configuration.epsilon), c.configuration.placement) != nontouching;
  }
  o.detail << "1000 instances (" << members << " members, " << touching << " touching), " << mismatches
           << " mismatches";
  if (mismatches != 0) o.ok = false;
}

void strictly_slender(Outcome& o) {
  auto tri = [](const char* ax, const char* ay) {
    return Adornment{{pt("0", "0"), pt("2", "0"), pt(ax, ay)}, 0, 1};
  };
  if (!is_strictly_slender(tri("1", "1/2"))) o.fail("isoceles triangle rejected");
  const Adornment leg{{pt("0", "0"), pt("1", "0"), pt("0", "1")}, 0, 1};
  if (is_strictly_slender(leg)) o.fail("leg-base right triangle accepted");
  const Adornment square{{pt("0", "0"), pt("1", "0"), pt("1", "1"), pt("0", "1")}, 0, 1};
  if (is_strictly_slender(square)) o.fail("square accepted");

  std::mt19937_64 rng(111);
  std::uniform_int_distribution<int> k(-1000, 1000);
  const Rational h(1, 1000000);
  int kept = 0;
  for (const Adornment& a : {tri("1", "1/2"), tri("1", "1/3")}) {
    for (int n = 0; n < 100; ++n) {
      Adornment moved = a;
      for (Point& p : moved.boundary) p = p + Point{h * Rational(k(rng)) / 1000, h * Rational(k(rng)) / 1000};
      if (is_strictly_slender(moved)) ++kept;
    }
  }
  if (kept != 200) o.fail("open condition broken under small perturbation");
  o.detail << kept << "/200 perturbed slender adornments stay slender";
}

void end_to_end_cli(Outcome& o) {
  int goldens = 0;
  for (const CliCase& c : cli_cases()) {
    const GoldenCheck r = check_cli_case(c);
    if (!r.ok) o.fail(r.message);
    goldens += !c.golden.empty();
  }
  o.detail << cli_cases().size() << " runs, " << goldens << " goldens";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"order function: self ord, parallel offsets, continuity", order_function},
      {"validator soundness on random nontouching configurations", validator_soundness},
      {"validator rejection of the three gadgets", validator_rejection},
      {"perturbation soundness over the corpus", perturbation_soundness},
      {"limit probe converges within 4 delta", limit_probe},
      {"canonical closed chain radii and flat case", canonical_closed_chain},
      {"convex interpolation stays convex", convex_interpolation},
      {"emitter agrees with the exact oracles", emitter_oracle},
      {"strictly slender examples and open condition", strictly_slender},
      {"end-to-end CLI goldens and exit codes", end_to_end_cli},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << " (" << o.detail.str()
              << ")\n";
  }
  return failed == 0 ? 0 : 1;
}
