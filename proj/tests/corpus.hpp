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

#include <random>
#include <string>
#include <vector>

#include "linkfold/linkage.hpp"
#include "linkfold/order.hpp"

namespace linkfold::testing {

struct Case {
  std::string name;
  Linkage linkage;
  Configuration configuration;
  AnnotationMatrix annotation;
};

Rational q(const char* text);
Point pt(const char* x, const char* y);

/// Builds a linkage whose rest lengths are the realized lengths (which must
/// be rational).
Linkage realized_linkage(const std::vector<Point>& placement,
                         const std::vector<std::pair<VertexId, VertexId>>& bars);

/// annotate() with the listed overrides applied.
AnnotationMatrix layered(const Linkage& linkage, const Configuration& c,
                         const std::vector<std::tuple<EdgeId, EdgeId, int>>& signs);

Case doubled_chain(int sign = 1);
Case doubled_chain_unlayered();
Case straight_chain();
Case zipper(int bars = 5);
Case spiral_fold();
Case degenerate_triangle();
Case zero_cluster_loop();
Case zero_cluster_star();
Case interleave_gadget();
Case cycle_gadget();

/// Valid self-touching cases used for perturbation and limit probes.
std::vector<Case> perturbation_corpus();

/// Random connected nontouching configuration with `bars` bars, all lengths
/// rational. Occasionally includes zero-length bars.
Case random_nontouching(std::mt19937_64& rng, int bars);

/// Small linkage on a coarse grid, touching or not, with a slack epsilon.
/// Rest lengths are near the realized ones or zero.
Case random_small_instance(std::mt19937_64& rng);

OrientedEdge random_edge(std::mt19937_64& rng);

struct ContinuityResult {
  int samples = 0;
  int monotone = 0;    // |change| at h = 1e-6 no larger than at 1e-3
  int rechecked = 0;
  int recheck_failures = 0;
  bool ok() const { return monotone * 100 >= samples * 95 && recheck_failures == 0; }
};

/// Perturbs random pairs of disjoint edges along one random direction per
/// sample, scaled by h in {1e-3, 1e-6} (and 1e-9 for non-monotone samples).
ContinuityResult continuity_probe(std::mt19937_64& rng, int samples);

/// Random point with coordinates k / d, |k / d| <= range.
Point random_point(std::mt19937_64& rng, int range = 8, int denominator = 4);

}  // namespace linkfold::testing
