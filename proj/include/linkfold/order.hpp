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

#include <vector>

#include "linkfold/geometry.hpp"
#include "linkfold/linkage.hpp"
#include "linkfold/surd.hpp"

namespace linkfold {

/// Oriented segment tail -> head; may be degenerate.
struct OrientedEdge {
  Point tail;
  Point head;
};

/// Signed projection length Ord(e1, e2) = d+ - d-.
///
/// In e1's frame (x along e1, +y to the left of tail -> head), d+ is the length
/// of the projection onto the segment e1 of the part of e2 in the closed upper
/// half-plane, and d- the same for the closed lower half-plane. Points with
/// y = 0 count for both. Zero when e1 is degenerate.
///
/// Arithmetic stays rational by working with X = (z - tail) . (head - tail) and
/// Y = cross(head - tail, z - tail), i.e. e1's frame scaled by len(e1); the
/// clamped projection is then r * len(e1) with r rational.
Surd ord(const OrientedEdge& e1, const OrientedEdge& e2);

/// Length of e1 ∩ e2 when the segments are collinear and share a sub-segment,
/// otherwise zero.
Surd overlap_length(const OrientedEdge& e1, const OrientedEdge& e2);

/// The open segments cross transversally at one interior point. Endpoint
/// contact, T-contact and collinear overlap are not strict crossings.
bool strict_crossing(const OrientedEdge& e1, const OrientedEdge& e2);

/// |E| x |E| matrix of signed values, row-major.
class AnnotationMatrix {
 public:
  AnnotationMatrix() = default;
  explicit AnnotationMatrix(std::size_t size) : size_(size), values_(size * size) {}

  std::size_t size() const { return size_; }
  const Surd& at(EdgeId i, EdgeId j) const { return values_.at(i * size_ + j); }
  Surd& at(EdgeId i, EdgeId j) { return values_.at(i * size_ + j); }

  friend bool operator==(const AnnotationMatrix& a, const AnnotationMatrix& b) {
    return a.size_ == b.size_ && a.values_ == b.values_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Surd> values_;
};

struct AnnotatedConfiguration {
  Configuration configuration;
  AnnotationMatrix annotation;
};

OrientedEdge placed_edge(const Linkage& linkage, std::span<const Point> placement, EdgeId id);

/// A_{i,j} = ord(C(e_i), C(e_j)) under canonical orientations.
AnnotationMatrix annotate(const Linkage& linkage, std::span<const Point> placement);
AnnotationMatrix annotate(const Linkage& linkage, const Configuration& c);

}  // namespace linkfold
