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

#include <array>
#include <optional>
#include <vector>

#include "linkfold/linkage.hpp"

namespace linkfold {

/// Counterclockwise simple polygon with a distinguished base segment between
/// two of its boundary vertices (a boundary edge or an interior diagonal).
struct Adornment {
  std::vector<Point> boundary;
  std::size_t base_from = 0;
  std::size_t base_to = 1;
};

/// Throws InputError unless the polygon is simple, counterclockwise, free of
/// collinear consecutive triples and the base lies in the region.
void check_adornment(const Adornment& a);

enum class SlenderMode {
  /// Closed normal cones at vertices: endpoint normals must hit the open base.
  kClosure,
  /// Normals from relative interiors of edges only.
  kInterior,
};

/// Index i of the first non-base boundary edge (i, i+1) with an inward normal
/// that misses the open base.
std::optional<std::size_t> first_non_slender_edge(const Adornment& a, SlenderMode mode = SlenderMode::kClosure);

bool is_strictly_slender(const Adornment& a, SlenderMode mode = SlenderMode::kClosure);

/// Counterclockwise triangle as boundary indices.
using Triangle = std::array<std::size_t, 3>;

/// Ear clipping with exact predicates. Throws InputError for a non-simple
/// polygon.
std::vector<Triangle> triangulate_polygon(const std::vector<Point>& polygon);

/// Triangulation that keeps the base as an edge.
std::vector<Triangle> triangulate(const Adornment& a);

/// Twice the signed area.
Rational twice_signed_area(const std::vector<Point>& polygon);

struct AdornedChain {
  std::vector<Adornment> adornments;
};

struct AdornedLinkage {
  Linkage linkage;
  Configuration configuration;
  /// vertex_of[k][i]: linkage vertex of boundary vertex i of adornment k.
  std::vector<std::vector<VertexId>> vertex_of;
  std::vector<EdgeId> base_edges;
};

/// Bars: boundary edges and triangulation diagonals of every adornment, with
/// consecutive adornments sharing their common base endpoint. Rest lengths
/// are the realized lengths when rational, otherwise within 1e-12 of them,
/// and the configuration's epsilon covers that gap. Throws InputError when the
/// bases do not form a chain.
AdornedLinkage adorned_chain_to_linkage(const AdornedChain& chain);

}  // namespace linkfold
