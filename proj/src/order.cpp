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

#include "linkfold/order.hpp"

#include <algorithm>
#include <optional>

namespace linkfold {
namespace {

Rational clamp_unit(const Rational& z) {
  if (z < 0) return Rational(0);
  if (z > 1) return Rational(1);
  return z;
}

struct Frame {
  Point origin;
  Point axis;
  Rational len2;

  Rational x(const Point& p) const { return dot(p - origin, axis); }
  Rational y(const Point& p) const { return cross(axis, p - origin); }
};

// Clamped projection length of e2 ∩ {side * Y >= 0}, in units of len(e1).
Rational half_projection(const Frame& f, const OrientedEdge& e2, int side) {
  const Rational xa = f.x(e2.tail);
  const Rational xb = f.x(e2.head);
  const Rational ya = side * f.y(e2.tail);
  const Rational yb = side * f.y(e2.head);
  const bool in_a = sgn(ya) >= 0;
  const bool in_b = sgn(yb) >= 0;
  if (!in_a && !in_b) return Rational(0);
  Rational x1 = xa;
  Rational x2 = xb;
  if (in_a != in_b) {
    // crossing of Y = 0 at parameter t = ya / (ya - yb)
    const Rational t = ya / (ya - yb);
    const Rational xc = xa + t * (xb - xa);
    if (in_a) {
      x2 = xc;
    } else {
      x1 = xc;
    }
  }
  return abs(Rational(clamp_unit(x2 / f.len2) - clamp_unit(x1 / f.len2)));
}

}  // namespace

Surd ord(const OrientedEdge& e1, const OrientedEdge& e2) {
  const Point axis = e1.head - e1.tail;
  const Rational len2 = squared_norm(axis);
  if (sgn(len2) == 0) return Surd();
  const Frame frame{e1.tail, axis, len2};
  const Rational upper = half_projection(frame, e2, +1);
  const Rational lower = half_projection(frame, e2, -1);
  return Surd(upper - lower, len2);
}

Surd overlap_length(const OrientedEdge& e1, const OrientedEdge& e2) {
  const Point axis = e1.head - e1.tail;
  const Rational len2 = squared_norm(axis);
  if (sgn(len2) == 0 || e2.tail == e2.head) return Surd();
  if (orientation(e1.tail, e1.head, e2.tail) != 0 || orientation(e1.tail, e1.head, e2.head) != 0) {
    return Surd();
  }
  const Rational ta = dot(e2.tail - e1.tail, axis) / len2;
  const Rational tb = dot(e2.head - e1.tail, axis) / len2;
  const Rational lo = std::max(Rational(0), std::min(ta, tb));
  const Rational hi = std::min(Rational(1), std::max(ta, tb));
  if (hi <= lo) return Surd();
  return Surd(hi - lo, len2);
}

bool strict_crossing(const OrientedEdge& e1, const OrientedEdge& e2) {
  const int o1 = orientation(e1.tail, e1.head, e2.tail);
  const int o2 = orientation(e1.tail, e1.head, e2.head);
  const int o3 = orientation(e2.tail, e2.head, e1.tail);
  const int o4 = orientation(e2.tail, e2.head, e1.head);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

OrientedEdge placed_edge(const Linkage& linkage, std::span<const Point> placement, EdgeId id) {
  const Edge& e = linkage.edge(id);
  return {placement[e.tail], placement[e.head]};
}

AnnotationMatrix annotate(const Linkage& linkage, std::span<const Point> placement) {
  const std::size_t m = linkage.edge_count();
  AnnotationMatrix a(m);
  std::vector<OrientedEdge> placed;
  placed.reserve(m);
  for (EdgeId i = 0; i < m; ++i) placed.push_back(placed_edge(linkage, placement, i));
  for (EdgeId i = 0; i < m; ++i) {
    for (EdgeId j = 0; j < m; ++j) {
      if (i != j) a.at(i, j) = ord(placed[i], placed[j]);
    }
  }
  return a;
}

AnnotationMatrix annotate(const Linkage& linkage, const Configuration& c) {
  return annotate(linkage, c.placement);
}

}  // namespace linkfold
