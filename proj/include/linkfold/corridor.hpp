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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkfold/linkage.hpp"
#include "linkfold/order.hpp"

namespace linkfold {

/// Interval of a corridor between consecutive vertex locations.
struct CorridorSegment {
  Point from;
  Point to;
  std::vector<EdgeId> bars;  // ascending id
};

/// A line containing at least one positive bar.
struct Corridor {
  // a x + b y = c with (a, b) = left normal of `direction`
  Integer a;
  Integer b;
  Rational c;
  /// Primitive integer direction, dx > 0 or (dx = 0 and dy > 0).
  Point direction;
  std::vector<CorridorSegment> segments;  // in increasing position along `direction`
  std::vector<EdgeId> bars;               // ascending id
  std::map<EdgeId, int> sense;            // +1 if tail -> head agrees with `direction`
  std::vector<EdgeId> order;              // filled by corridor_order
  std::map<EdgeId, std::size_t> psi;      // filled by corridor_order
};

/// Groups positive bars by supporting line and cuts each line at the vertex
/// locations lying on it. Requires C in Conf_0. Zero-length bars have no line
/// and belong to no corridor.
std::vector<Corridor> corridors(const Linkage& linkage, const Configuration& c);

struct CorridorOrder {
  std::vector<EdgeId> order;
  std::map<EdgeId, std::size_t> psi;
};

/// Merges the per-segment layer orders into one order over the corridor and
/// assigns offsets 0..m-1. A bar with larger psi sits further along +u (the
/// left normal of the corridor direction). Throws InputError naming a vertex
/// location when the segment orders are inconsistent.
CorridorOrder corridor_order(const Corridor& corridor, const AnnotationMatrix& a);

/// min(1/n, l_min, sin(theta_min) / (2n)), with a rational lower bound for the
/// sine; sin = 1 when no two positive bars are nonparallel, and l_min is
/// omitted when there is no positive bar.
Rational delta_bound(const Linkage& linkage, const Configuration& c);

/// delta itself when 0 < delta < bound, bound / 2 when delta >= bound.
/// Throws BoundError for delta <= 0.
Rational clamp_delta(const Rational& delta, const Rational& bound);

struct CorridorNormal {
  Point direction;
  Point normal;  // rational, parallel to the unit left normal, length <= 1
  PointD unit;
};

struct PerturbationResult {
  Linkage linkage;            // the extension L'
  ExtensionMap map;
  Configuration configuration;  // exact snapshot, epsilon = 2 delta
  std::vector<PointD> coordinates;
  Rational requested_delta;
  Rational delta;             // after retries
  int retries = 0;
  Rational slack;             // 2 delta
  std::vector<Corridor> corridors;
  std::vector<CorridorNormal> normals;  // one per corridor
  bool nontouching = false;
};

/// Nontouching configuration of the extension of L within delta of C per
/// vertex, with the layering of A. Throws InputError when (C, A) does not
/// validate, BoundError unless 0 < delta < delta_bound, InternalError when the
/// exact verification fails after three halvings of delta.
PerturbationResult perturb(const Linkage& linkage, const Configuration& c, const AnnotationMatrix& a,
                           const Rational& delta);

struct ProbePair {
  EdgeId i = 0;
  EdgeId j = 0;
  Surd value;      // annotation of the perturbed configuration
  Surd reference;  // A_ij
  Surd overlap;    // overlap length in C
  bool sign_agrees = true;
};

struct ProbeStep {
  Rational requested_delta;
  Rational delta;
  std::vector<ProbePair> pairs;
  bool signs_agree = true;
  double max_displacement = 0.0;
  double max_drift = 0.0;
  bool displacement_ok = true;  // exact: every vertex within delta
  bool drift_ok = true;         // exact: every bar within 2 delta of rest
};

struct ProbeReport {
  std::vector<ProbeStep> steps;
  bool ok() const;
};

/// Runs perturb and annotate for each delta (clamped to the bound). Pairs are
/// those with A_ij != 0 or positive overlap. Throws InputError unless the
/// sequence is strictly decreasing.
ProbeReport convergence_probe(const Linkage& linkage, const Configuration& c, const AnnotationMatrix& a,
                              const std::vector<Rational>& deltas);

}  // namespace linkfold
