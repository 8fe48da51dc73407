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

#include "linkfold/chain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "linkfold/errors.hpp"

namespace linkfold {
namespace {

constexpr double kTolerance = 1e-9;

bool connected(const Linkage& linkage) {
  const std::size_t n = linkage.vertex_count();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : linkage.incident_edges(v)) {
      const VertexId w = linkage.edge(e).other(v);
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

struct Branch {
  double radius = 0.0;
  bool center_inside = true;
};

double chord_angle(double l, double r) { return 2.0 * std::asin(std::min(1.0, l / (2.0 * r))); }

Branch solve_radius(const std::vector<double>& lengths) {
  const std::size_t longest = std::max_element(lengths.begin(), lengths.end()) - lengths.begin();
  const double lmax = lengths[longest];
  const double total = std::accumulate(lengths.begin(), lengths.end(), 0.0);
  auto inside = [&](double r) {
    double s = 0.0;
    for (double l : lengths) s += chord_angle(l, r);
    return s - 2.0 * std::numbers::pi;
  };
  auto outside = [&](double r) {
    double s = 0.0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (i != longest) s += chord_angle(lengths[i], r);
    }
    return s - chord_angle(lmax, r);
  };
  Branch branch;
  double lo = lmax / 2.0;
  branch.center_inside = inside(lo) >= 0.0;
  // inside is decreasing in r; outside starts negative and turns positive
  auto f = [&](double r) { return branch.center_inside ? -inside(r) : outside(r); };
  double hi = total;
  while (f(hi) <= 0.0) hi *= 2.0;
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  branch.radius = 0.5 * (lo + hi);
  return branch;
}

void align(std::vector<PointD>& positions, const ChainClass& chain, std::size_t reference_edge) {
  const PointD anchor = positions[chain.vertices.front()];
  for (PointD& p : positions) {
    p.x -= anchor.x;
    p.y -= anchor.y;
  }
  const PointD from = positions[chain.vertices[reference_edge]];
  const PointD to = positions[chain.vertices[(reference_edge + 1) % chain.vertices.size()]];
  const double angle = std::atan2(to.y - from.y, to.x - from.x);
  const double c = std::cos(-angle);
  const double s = std::sin(-angle);
  for (PointD& p : positions) p = {c * p.x - s * p.y, s * p.x + c * p.y};
}

double extent(const std::vector<PointD>& pts) {
  double e = 1.0;
  for (const PointD& p : pts) e = std::max({e, std::abs(p.x), std::abs(p.y)});
  return e;
}

double turn(const PointD& a, const PointD& b, const PointD& c) {
  return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
}

}  // namespace

const char* chain_kind_name(ChainKind kind) {
  switch (kind) {
    case ChainKind::kOpen:
      return "open-chain";
    case ChainKind::kClosed:
      return "closed-chain";
    case ChainKind::kOther:
      return "other";
  }
  return "?";
}

const char* canonical_kind_name(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::kStraight:
      return "straight";
    case CanonicalKind::kConcyclic:
      return "concyclic";
    case CanonicalKind::kFlatDegenerate:
      return "flat-degenerate";
  }
  return "?";
}

const char* turning_name(Turning t) { return t == Turning::kCcw ? "ccw" : "cw"; }

ChainClass classify_chain(const Linkage& linkage) {
  ChainClass out;
  const std::size_t n = linkage.vertex_count();
  const std::size_t m = linkage.edge_count();
  if (n == 0 || !connected(linkage)) return out;
  std::size_t max_degree = 0;
  bool all_two = true;
  for (VertexId v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, linkage.degree(v));
    all_two = all_two && linkage.degree(v) == 2;
  }
  VertexId start = 0;
  if (m + 1 == n && max_degree <= 2) {
    out.kind = ChainKind::kOpen;
    while (linkage.degree(start) > 1) ++start;
  } else if (m == n && all_two) {
    out.kind = ChainKind::kClosed;
  } else {
    return out;
  }
  VertexId v = start;
  std::optional<EdgeId> previous;
  out.vertices.push_back(v);
  while (out.edges.size() < m) {
    const auto& incident = linkage.incident_edges(v);
    const EdgeId e = (!previous || incident.front() != *previous) ? incident.front() : incident.back();
    out.edges.push_back(e);
    previous = e;
    v = linkage.edge(e).other(v);
    if (out.edges.size() < m || out.kind == ChainKind::kOpen) out.vertices.push_back(v);
  }
  return out;
}

Configuration CanonicalConfiguration::configuration(const Integer& denominator) const {
  if (exact) return *exact;
  Configuration c;
  for (const PointD& p : positions) c.placement.push_back(from_point_d(p, denominator));
  return c;
}

CanonicalConfiguration canonical_open(const Linkage& linkage) {
  CanonicalConfiguration out;
  out.chain = classify_chain(linkage);
  if (out.chain.kind != ChainKind::kOpen) throw InputError("canonical_open needs an open chain");
  out.kind = CanonicalKind::kStraight;
  Configuration exact;
  exact.placement.resize(linkage.vertex_count());
  Rational x(0);
  exact.placement[out.chain.vertices.front()] = Point{x, Rational(0)};
  for (std::size_t k = 0; k < out.chain.edges.size(); ++k) {
    x += linkage.edge(out.chain.edges[k]).rest_length;
    exact.placement[out.chain.vertices[k + 1]] = Point{x, Rational(0)};
  }
  for (const Point& p : exact.placement) out.positions.push_back(to_point_d(p));
  out.exact = std::move(exact);
  return out;
}

double cyclic_circumradius(const std::vector<double>& lengths) {
  if (lengths.size() < 3) throw InputError("a cyclic polygon needs at least three sides");
  return solve_radius(lengths).radius;
}

CanonicalConfiguration canonical_closed(const Linkage& linkage, Turning direction) {
  CanonicalConfiguration out;
  out.chain = classify_chain(linkage);
  if (out.chain.kind != ChainKind::kClosed) throw InputError("canonical_closed needs a closed chain");
  const auto& chain = out.chain;
  const std::size_t k = chain.edges.size();

  std::vector<Rational> lengths;
  for (EdgeId e : chain.edges) lengths.push_back(linkage.edge(e).rest_length);
  const std::size_t longest = std::max_element(lengths.begin(), lengths.end()) - lengths.begin();
  const Rational total = std::accumulate(lengths.begin(), lengths.end(), Rational(0));
  const Rational rest = total - lengths[longest];
  if (lengths[longest] > rest) {
    throw InfeasibleError("longest bar " + to_string(lengths[longest]) + " exceeds the sum " +
                          to_string(rest) + " of the others");
  }
  if (sgn(total) == 0) throw InfeasibleError("closed chain has no positive bar");

  const std::size_t reference = std::find_if(lengths.begin(), lengths.end(),
                                             [](const Rational& l) { return sgn(l) > 0; }) -
                                lengths.begin();

  if (lengths[longest] == rest) {
    // doubled flat placement: the longest bar runs one way, the others return
    out.kind = CanonicalKind::kFlatDegenerate;
    const int flip = reference == longest ? -1 : 1;
    Configuration exact;
    exact.placement.resize(linkage.vertex_count());
    Rational x(0);
    exact.placement[chain.vertices[0]] = Point{x, Rational(0)};
    for (std::size_t i = 0; i + 1 < k; ++i) {
      x += (i == longest ? -flip : flip) * lengths[i];
      exact.placement[chain.vertices[i + 1]] = Point{x, Rational(0)};
    }
    for (const Point& p : exact.placement) out.positions.push_back(to_point_d(p));
    out.exact = std::move(exact);
    out.tolerance = 0.0;
    return out;
  }

  std::vector<double> dl;
  for (const Rational& l : lengths) dl.push_back(to_double(l));
  const Branch branch = solve_radius(dl);
  const double r = branch.radius;
  out.kind = CanonicalKind::kConcyclic;
  out.radius = r;
  out.direction = direction;
  out.tolerance = kTolerance;

  out.positions.assign(linkage.vertex_count(), PointD{});
  double theta = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    out.positions[chain.vertices[i]] = {r * std::cos(theta), r * std::sin(theta)};
    const double phi = chord_angle(dl[i], r);
    theta += (!branch.center_inside && i == longest) ? -phi : phi;
  }
  align(out.positions, chain, reference);
  if (direction == Turning::kCw) {
    for (PointD& p : out.positions) p.y = -p.y;
  }
  return out;
}

Turning turning_direction(const Linkage& linkage, const Configuration& c) {
  const ChainClass chain = classify_chain(linkage);
  if (chain.kind != ChainKind::kClosed) throw InputError("turning direction needs a closed chain");
  Rational twice_area(0);
  const std::size_t k = chain.vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    twice_area += cross(c.at(chain.vertices[i]), c.at(chain.vertices[(i + 1) % k]));
  }
  if (sgn(twice_area) == 0) throw IndeterminateError("closed chain has zero signed area");
  return sgn(twice_area) > 0 ? Turning::kCcw : Turning::kCw;
}

bool in_convex_position(const std::vector<PointD>& cycle, double tolerance) {
  const double scale = extent(cycle);
  std::vector<PointD> pts;
  for (const PointD& p : cycle) {
    if (pts.empty() || std::hypot(p.x - pts.back().x, p.y - pts.back().y) > tolerance * scale) {
      pts.push_back(p);
    }
  }
  while (pts.size() > 1 &&
         std::hypot(pts.front().x - pts.back().x, pts.front().y - pts.back().y) <= tolerance * scale) {
    pts.pop_back();
  }
  const std::size_t k = pts.size();
  if (k < 3) return true;
  bool positive = false;
  bool negative = false;
  double winding = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const PointD& a = pts[(i + k - 1) % k];
    const PointD& b = pts[i];
    const PointD& c = pts[(i + 1) % k];
    const double t = turn(a, b, c);
    if (t > tolerance * scale * scale) positive = true;
    if (t < -tolerance * scale * scale) negative = true;
    const double d = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
    winding += std::atan2(t, d);
  }
  if (positive && negative) return false;
  return std::abs(std::abs(winding) - 2.0 * std::numbers::pi) < 1e-6;
}

Interpolation convex_interpolate(const CanonicalConfiguration& a, const CanonicalConfiguration& b, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("interpolation parameter must lie in [0, 1]");
  if (a.chain.kind != b.chain.kind || a.chain.vertices != b.chain.vertices ||
      a.positions.size() != b.positions.size() || a.chain.kind == ChainKind::kOther) {
    throw InputError("canonical configurations belong to different chains");
  }
  const auto& chain = a.chain;
  std::size_t reference = 0;
  const std::size_t k = chain.edges.size();
  auto edge_len = [&](const std::vector<PointD>& pos, std::size_t i) {
    const PointD& p = pos[chain.vertices[i]];
    const PointD& q = pos[chain.vertices[(i + 1) % chain.vertices.size()]];
    return std::hypot(q.x - p.x, q.y - p.y);
  };
  while (reference < k && (edge_len(a.positions, reference) == 0.0 || edge_len(b.positions, reference) == 0.0)) {
    ++reference;
  }
  std::vector<PointD> pa = a.positions;
  std::vector<PointD> pb = b.positions;
  if (reference < k) {
    align(pa, chain, reference);
    align(pb, chain, reference);
  }

  Interpolation out;
  for (std::size_t v = 0; v < pa.size(); ++v) {
    out.positions.push_back({(1.0 - t) * pa[v].x + t * pb[v].x, (1.0 - t) * pa[v].y + t * pb[v].y});
  }
  std::vector<PointD> ordered;
  for (VertexId v : chain.vertices) ordered.push_back(out.positions[v]);
  if (chain.kind == ChainKind::kClosed) {
    out.convex = in_convex_position(ordered, kTolerance);
  } else {
    const double scale = extent(ordered);
    bool positive = false;
    bool negative = false;
    for (std::size_t i = 1; i + 1 < ordered.size(); ++i) {
      const double tv = turn(ordered[i - 1], ordered[i], ordered[i + 1]);
      positive = positive || tv > kTolerance * scale * scale;
      negative = negative || tv < -kTolerance * scale * scale;
    }
    out.convex = !(positive && negative);
  }
  return out;
}

}  // namespace linkfold
