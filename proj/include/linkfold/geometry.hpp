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

#include <compare>
#include <ostream>
#include <string>

#include "linkfold/rational.hpp"

namespace linkfold {

/// Exact planar point.
struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
};

/// Lexicographic (x, then y); used to give vertex locations a stable order.
bool lex_less(const Point& a, const Point& b);

struct PointLexLess {
  bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

Rational dot(const Point& a, const Point& b);
Rational cross(const Point& a, const Point& b);
Rational squared_norm(const Point& a);
Rational squared_distance(const Point& a, const Point& b);

/// Sign of cross(b - a, c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// True iff p lies on the closed segment [a, b].
bool on_closed_segment(const Point& p, const Point& a, const Point& b);

/// True iff p lies on [a, b] and differs from both endpoints.
bool in_segment_interior(const Point& p, const Point& a, const Point& b);

enum class ContactKind { kDisjoint, kPoint, kOverlap };

/// Intersection of two closed segments. For kPoint, `first` is the point; for
/// kOverlap, [first, second] is the shared sub-segment.
struct SegmentContact {
  ContactKind kind = ContactKind::kDisjoint;
  Point first;
  Point second;
};

SegmentContact intersect_segments(const Point& a, const Point& b, const Point& c, const Point& d);

/// Angular comparison of nonzero direction vectors, counterclockwise from +x
/// over [0, 2pi). Exact; no trigonometry.
bool angle_less(const Point& u, const Point& v);

/// Same ray direction (parallel and pointing the same way).
bool same_direction(const Point& u, const Point& v);

struct PointD {
  double x = 0.0;
  double y = 0.0;
};

PointD to_point_d(const Point& p);
Point from_point_d(const PointD& p, const Integer& denominator);

std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace linkfold
