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

#include <optional>
#include <vector>

#include "linkfold/linkage.hpp"

namespace linkfold {

enum class ChainKind { kOpen, kClosed, kOther };

struct ChainClass {
  ChainKind kind = ChainKind::kOther;
  /// Traversal order. Open: from the lower-id end. Closed: from vertex 0
  /// along its lowest-id bar; the first vertex is not repeated.
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

const char* chain_kind_name(ChainKind kind);

ChainClass classify_chain(const Linkage& linkage);

enum class CanonicalKind { kStraight, kConcyclic, kFlatDegenerate };
enum class Turning { kCcw, kCw };

const char* canonical_kind_name(CanonicalKind kind);
const char* turning_name(Turning t);

struct CanonicalConfiguration {
  ChainClass chain;
  CanonicalKind kind = CanonicalKind::kStraight;
  std::vector<PointD> positions;  // indexed by vertex id
  std::optional<double> radius;   // concyclic only
  std::optional<Turning> direction;
  double tolerance = 0.0;
  /// Exact placement where one exists (straight and flat-degenerate).
  std::optional<Configuration> exact;

  /// Exact placement when available, otherwise positions rounded to the
  /// given denominator.
  Configuration configuration(const Integer& denominator = pow10(12)) const;
};

/// Straight placement along +x from the origin. Throws InputError unless the
/// linkage is an open chain.
CanonicalConfiguration canonical_open(const Linkage& linkage);

/// Concyclic placement turning in `direction`, anchored with the first chain
/// vertex at the origin and the first positive bar along +x. Throws
/// InputError unless the linkage is a closed chain, InfeasibleError when the
/// longest bar exceeds the sum of the others.
CanonicalConfiguration canonical_closed(const Linkage& linkage, Turning direction = Turning::kCcw);

/// Circumradius of a cyclic polygon with the given side lengths, solved by
/// bisection on the angle-closure equation.
double cyclic_circumradius(const std::vector<double>& lengths);

/// Sign of the exact signed area along the cycle. Throws InputError unless the
/// linkage is a closed chain, IndeterminateError for zero area.
Turning turning_direction(const Linkage& linkage, const Configuration& c);

struct Interpolation {
  std::vector<PointD> positions;
  bool convex = false;
};

/// (1 - t) Ca + t Cb after aligning Cb's anchor to Ca's, with a convex-position
/// flag. Throws InputError for different chains or t outside [0, 1].
Interpolation convex_interpolate(const CanonicalConfiguration& a, const CanonicalConfiguration& b,
                                 double t);

/// Consecutive orientations along the cycle share one sign (zeros allowed,
/// within tolerance) and the turning adds up to one full turn.
bool in_convex_position(const std::vector<PointD>& cycle, double tolerance = 1e-9);

}  // namespace linkfold
