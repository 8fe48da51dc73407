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

#include "linkfold/geometry.hpp"

#include <algorithm>

namespace linkfold {

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

Rational squared_norm(const Point& a) { return dot(a, a); }

Rational squared_distance(const Point& a, const Point& b) { return squared_norm(a - b); }

int orientation(const Point& a, const Point& b, const Point& c) {
  return sgn(Rational(cross(b - a, c - a)));
}

bool on_closed_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return sgn(Rational(dot(p - a, b - a))) >= 0 && sgn(Rational(dot(p - b, a - b))) >= 0;
}

bool in_segment_interior(const Point& p, const Point& a, const Point& b) {
  return p != a && p != b && on_closed_segment(p, a, b);
}

SegmentContact intersect_segments(const Point& a, const Point& b, const Point& c, const Point& d) {
  SegmentContact out;
  if (a == b) {
    if (on_closed_segment(a, c, d)) out = {ContactKind::kPoint, a, a};
    return out;
  }
  if (c == d) {
    if (on_closed_segment(c, a, b)) out = {ContactKind::kPoint, c, c};
    return out;
  }
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 == 0 && o2 == 0) {
    // collinear: intersect parameter intervals along a->b
    const Point dir = b - a;
    const Rational len2 = squared_norm(dir);
    Rational tc = dot(c - a, dir) / len2;
    Rational td = dot(d - a, dir) / len2;
    Point pc = c;
    Point pd = d;
    if (td < tc) {
      std::swap(tc, td);
      std::swap(pc, pd);
    }
    const Rational lo = std::max(Rational(0), tc);
    const Rational hi = std::min(Rational(1), td);
    if (lo > hi) return out;
    const Point p_lo = lo == tc ? pc : (lo == 0 ? a : a + lo * dir);
    const Point p_hi = hi == td ? pd : (hi == 1 ? b : a + hi * dir);
    if (lo == hi) return {ContactKind::kPoint, p_lo, p_lo};
    return {ContactKind::kOverlap, p_lo, p_hi};
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return out;
  // proper or touching single-point intersection
  if (o1 == 0) return {ContactKind::kPoint, c, c};
  if (o2 == 0) return {ContactKind::kPoint, d, d};
  if (o3 == 0) return {ContactKind::kPoint, a, a};
  if (o4 == 0) return {ContactKind::kPoint, b, b};
  const Point r = b - a;
  const Point s = d - c;
  const Rational t = cross(c - a, s) / cross(r, s);
  const Point p = a + t * r;
  return {ContactKind::kPoint, p, p};
}

namespace {
// 0 for angles in [0, pi), 1 for [pi, 2pi)
int half_plane(const Point& v) {
  if (sgn(v.y) > 0 || (sgn(v.y) == 0 && sgn(v.x) > 0)) return 0;
  return 1;
}
}  // namespace

bool angle_less(const Point& u, const Point& v) {
  const int hu = half_plane(u);
  const int hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return sgn(Rational(cross(u, v))) > 0;
}

bool same_direction(const Point& u, const Point& v) {
  return sgn(Rational(cross(u, v))) == 0 && sgn(Rational(dot(u, v))) > 0;
}

PointD to_point_d(const Point& p) { return {p.x.get_d(), p.y.get_d()}; }

Point from_point_d(const PointD& p, const Integer& denominator) {
  return {from_double(p.x, denominator), from_double(p.y, denominator)};
}

std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

}  // namespace linkfold
