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

#include "linkfold/adornment.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linkfold/errors.hpp"

namespace linkfold {
namespace {

bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  return orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 && orientation(c, a, p) >= 0;
}

// Strictly inside (not on the boundary), by ray casting to +x.
bool strictly_inside(const Point& p, const std::vector<Point>& poly) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if (on_closed_segment(p, a, b)) return false;
    if ((a.y > p.y) != (b.y > p.y)) {
      // x of the crossing compared without division
      const Rational lhs = (p.x - a.x) * (b.y - a.y);
      const Rational rhs = (p.y - a.y) * (b.x - a.x);
      const bool right = (b.y > a.y) ? lhs < rhs : lhs > rhs;
      if (right) inside = !inside;
    }
  }
  return inside;
}

std::vector<Point> slice(const std::vector<Point>& poly, std::size_t from, std::size_t to,
                         std::vector<std::size_t>& index) {
  std::vector<Point> out;
  index.clear();
  for (std::size_t i = from;; i = (i + 1) % poly.size()) {
    out.push_back(poly[i]);
    index.push_back(i);
    if (i == to) break;
  }
  return out;
}

}  // namespace

Rational twice_signed_area(const std::vector<Point>& polygon) {
  Rational s(0);
  for (std::size_t i = 0; i < polygon.size(); ++i) s += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
  return s;
}

void check_adornment(const Adornment& a) {
  const auto& p = a.boundary;
  const std::size_t n = p.size();
  if (n < 3) throw InputError("adornment needs at least three boundary vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(p[(i + n - 1) % n], p[i], p[(i + 1) % n]) == 0) {
      throw InputError("boundary vertex " + std::to_string(i) + " is collinear with its neighbours");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (intersect_segments(p[i], p[(i + 1) % n], p[j], p[(j + 1) % n]).kind != ContactKind::kDisjoint) {
        throw InputError("boundary edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
  }
  if (sgn(twice_signed_area(p)) <= 0) throw InputError("boundary is not counterclockwise");
  if (a.base_from >= n || a.base_to >= n || a.base_from == a.base_to) throw InputError("invalid base indices");
  const std::size_t gap = (a.base_to + n - a.base_from) % n;
  if (gap == 1 || gap == n - 1) return;
  const Point& bp = p[a.base_from];
  const Point& bq = p[a.base_to];
  for (std::size_t i = 0; i < n; ++i) {
    const Point& u = p[i];
    const Point& v = p[(i + 1) % n];
    const SegmentContact c = intersect_segments(bp, bq, u, v);
    if (c.kind == ContactKind::kDisjoint) continue;
    if (c.kind == ContactKind::kPoint && (c.first == bp || c.first == bq)) continue;
    throw InputError("base meets boundary edge " + std::to_string(i));
  }
  if (!strictly_inside(Rational(1, 2) * (bp + bq), p)) throw InputError("base lies outside the region");
}

std::optional<std::size_t> first_non_slender_edge(const Adornment& a, SlenderMode mode) {
  check_adornment(a);
  const auto& p = a.boundary;
  const std::size_t n = p.size();
  const Point& base_p = p[a.base_from];
  const Point& base_q = p[a.base_to];
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if ((i == a.base_from && j == a.base_to) || (i == a.base_to && j == a.base_from)) continue;
    const Point& ea = p[i];
    const Point& eb = p[j];
    const Point d = eb - ea;
    const Point normal{-d.y, d.x};  // inward for a counterclockwise boundary
    const Rational e2 = squared_norm(d);

    // open lambda-interval of the base on the inward side of the edge
    const Rational h0 = dot(base_p - ea, normal);
    const Rational h1 = dot(base_q - ea, normal);
    Rational lo(0);
    Rational hi(1);
    if (sgn(h0) <= 0 && sgn(h1) <= 0) return i;
    if (sgn(h0) <= 0) {
      lo = h0 / (h0 - h1);
    } else if (sgn(h1) <= 0) {
      hi = h0 / (h0 - h1);
    }
    auto sigma = [&](const Rational& lambda) {
      return dot(base_p + lambda * (base_q - base_p) - ea, d);
    };
    const Rational s1 = sigma(lo);
    const Rational s2 = sigma(hi);
    const Rational sigma_lo = std::min(s1, s2);
    const Rational sigma_hi = std::max(s1, s2);

    bool ok;
    if (mode == SlenderMode::kInterior) {
      ok = sigma_lo <= 0 && sigma_hi >= e2;
    } else {
      const bool a_on_base = on_closed_segment(ea, base_p, base_q);
      const bool b_on_base = on_closed_segment(eb, base_p, base_q);
      ok = (a_on_base ? sigma_lo <= 0 : sigma_lo < 0) && (b_on_base ? sigma_hi >= e2 : sigma_hi > e2);
    }
    if (sigma_lo == sigma_hi) ok = false;
    if (!ok) return i;
  }
  return std::nullopt;
}

bool is_strictly_slender(const Adornment& a, SlenderMode mode) { return !first_non_slender_edge(a, mode); }

std::vector<Triangle> triangulate_polygon(const std::vector<Point>& polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) throw InputError("polygon needs at least three vertices");
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::vector<Triangle> out;
  while (idx.size() > 3) {
    const std::size_t k = idx.size();
    bool clipped = false;
    for (std::size_t t = 0; t < k && !clipped; ++t) {
      const std::size_t a = idx[(t + k - 1) % k];
      const std::size_t b = idx[t];
      const std::size_t c = idx[(t + 1) % k];
      if (orientation(polygon[a], polygon[b], polygon[c]) <= 0) continue;
      bool blocked = false;
      for (std::size_t o : idx) {
        if (o == a || o == b || o == c) continue;
        if (in_closed_triangle(polygon[o], polygon[a], polygon[b], polygon[c])) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      out.push_back({a, b, c});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(t));
      clipped = true;
    }
    if (!clipped) throw InputError("polygon is not simple and counterclockwise: no ear found");
  }
  if (orientation(polygon[idx[0]], polygon[idx[1]], polygon[idx[2]]) <= 0) {
    throw InputError("polygon is not simple and counterclockwise: degenerate last triangle");
  }
  out.push_back({idx[0], idx[1], idx[2]});
  return out;
}

std::vector<Triangle> triangulate(const Adornment& a) {
  check_adornment(a);
  const std::size_t n = a.boundary.size();
  const std::size_t gap = (a.base_to + n - a.base_from) % n;
  if (gap == 1 || gap == n - 1) return triangulate_polygon(a.boundary);
  std::vector<Triangle> out;
  for (auto [from, to] : {std::pair{a.base_from, a.base_to}, std::pair{a.base_to, a.base_from}}) {
    std::vector<std::size_t> index;
    const std::vector<Point> part = slice(a.boundary, from, to, index);
    for (const Triangle& t : triangulate_polygon(part)) out.push_back({index[t[0]], index[t[1]], index[t[2]]});
  }
  return out;
}

AdornedLinkage adorned_chain_to_linkage(const AdornedChain& chain) {
  const auto& ads = chain.adornments;
  for (const Adornment& a : ads) check_adornment(a);

  // shared base endpoint between adornment k and k + 1, as boundary indices
  std::vector<std::pair<std::size_t, std::size_t>> shared;
  for (std::size_t k = 0; k + 1 < ads.size(); ++k) {
    const Adornment& a = ads[k];
    const Adornment& b = ads[k + 1];
    std::vector<std::pair<std::size_t, std::size_t>> common;
    for (std::size_t i : {a.base_from, a.base_to}) {
      for (std::size_t j : {b.base_from, b.base_to}) {
        if (a.boundary[i] == b.boundary[j]) common.emplace_back(i, j);
      }
    }
    if (common.size() != 1) {
      throw InputError("bases of adornments " + std::to_string(k) + " and " + std::to_string(k + 1) +
                       " do not share exactly one endpoint");
    }
    if (k > 0 && shared.back().second == common.front().first) {
      throw InputError("bases of adornments " + std::to_string(k - 1) + ", " + std::to_string(k) + " and " +
                       std::to_string(k + 1) + " meet at one point and do not form a chain");
    }
    shared.push_back(common.front());
  }

  AdornedLinkage out;
  std::vector<Point> placement;
  out.vertex_of.resize(ads.size());
  for (std::size_t k = 0; k < ads.size(); ++k) {
    const Adornment& a = ads[k];
    out.vertex_of[k].resize(a.boundary.size());
    for (std::size_t i = 0; i < a.boundary.size(); ++i) {
      if (k > 0 && i == shared[k - 1].second) {
        out.vertex_of[k][i] = out.vertex_of[k - 1][shared[k - 1].first];
        continue;
      }
      out.vertex_of[k][i] = placement.size();
      placement.push_back(a.boundary[i]);
    }
  }

  std::vector<Edge> edges;
  Rational epsilon(0);
  const Rational tolerance(1, pow10(12));
  auto add_bar = [&](VertexId u, VertexId v) {
    const Rational len2 = squared_distance(placement[u], placement[v]);
    Rational len;
    if (auto exact = exact_sqrt(len2)) {
      len = *exact;
    } else {
      len = sqrt_lower(len2, 12);
      epsilon = tolerance;
    }
    edges.push_back(Edge{edges.size(), u, v, len});
    return edges.back().id;
  };
  for (std::size_t k = 0; k < ads.size(); ++k) {
    const Adornment& a = ads[k];
    const std::size_t n = a.boundary.size();
    const auto& vid = out.vertex_of[k];
    std::map<std::pair<std::size_t, std::size_t>, EdgeId> bar_of;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      bar_of[{std::min(i, j), std::max(i, j)}] = add_bar(vid[i], vid[j]);
    }
    for (const Triangle& t : triangulate(a)) {
      for (int s = 0; s < 3; ++s) {
        const std::size_t i = t[s];
        const std::size_t j = t[(s + 1) % 3];
        const auto key = std::make_pair(std::min(i, j), std::max(i, j));
        if (!bar_of.count(key)) bar_of[key] = add_bar(vid[key.first], vid[key.second]);
      }
    }
    out.base_edges.push_back(bar_of.at({std::min(a.base_from, a.base_to), std::max(a.base_from, a.base_to)}));
  }
  out.linkage = Linkage(placement.size(), std::move(edges));
  out.configuration = Configuration{std::move(placement), epsilon};
  return out;
}

}  // namespace linkfold
