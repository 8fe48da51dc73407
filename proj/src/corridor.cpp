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

#include "linkfold/corridor.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <tuple>

#include "linkfold/errors.hpp"
#include "linkfold/validator.hpp"

namespace linkfold {
namespace {

Point primitive_direction(const Point& v) {
  const Integer scale = lcm(v.x.get_den(), v.y.get_den());
  Integer nx = v.x.get_num() * (scale / v.x.get_den());
  Integer ny = v.y.get_num() * (scale / v.y.get_den());
  const Integer g = gcd(nx, ny);
  nx /= g;
  ny /= g;
  if (sgn(nx) < 0 || (sgn(nx) == 0 && sgn(ny) < 0)) {
    nx = -nx;
    ny = -ny;
  }
  return {Rational(nx), Rational(ny)};
}

std::string describe_location(const Point& p) { return "(" + to_string(p) + ")"; }

struct Attempt {
  std::vector<Point> placement;
  std::optional<std::string> failure;
};

}  // namespace

std::vector<Corridor> corridors(const Linkage& linkage, const Configuration& c) {
  if (!configuration_membership(linkage, c.placement, Rational(0))) {
    throw InputError("corridors need a configuration realizing the rest lengths exactly");
  }
  std::vector<Corridor> out;
  std::map<std::tuple<Integer, Integer, Rational>, std::size_t> by_line;
  for (const Edge& e : linkage.edges()) {
    const Point& p = c.at(e.tail);
    const Point& q = c.at(e.head);
    if (p == q) continue;
    const Point d = primitive_direction(q - p);
    const Integer a = -d.y.get_num();
    const Integer b = d.x.get_num();
    const Rational cc = Rational(a) * p.x + Rational(b) * p.y;
    auto [it, inserted] = by_line.try_emplace(std::make_tuple(a, b, cc), out.size());
    if (inserted) {
      Corridor corridor;
      corridor.a = a;
      corridor.b = b;
      corridor.c = cc;
      corridor.direction = d;
      out.push_back(std::move(corridor));
    }
    Corridor& corridor = out[it->second];
    corridor.bars.push_back(e.id);
    corridor.sense[e.id] = sgn(dot(q - p, d)) > 0 ? +1 : -1;
  }

  for (Corridor& corridor : out) {
    const Point& d = corridor.direction;
    std::vector<Point> on_line;
    for (const Point& p : c.placement) {
      if (Rational(corridor.a) * p.x + Rational(corridor.b) * p.y == corridor.c) on_line.push_back(p);
    }
    std::sort(on_line.begin(), on_line.end(),
              [&](const Point& p, const Point& q) { return dot(p, d) < dot(q, d); });
    on_line.erase(std::unique(on_line.begin(), on_line.end()), on_line.end());
    for (std::size_t k = 0; k + 1 < on_line.size(); ++k) {
      const Rational lo = dot(on_line[k], d);
      const Rational hi = dot(on_line[k + 1], d);
      CorridorSegment segment{on_line[k], on_line[k + 1], {}};
      for (EdgeId id : corridor.bars) {
        const Edge& e = linkage.edge(id);
        const Rational t1 = dot(c.at(e.tail), d);
        const Rational t2 = dot(c.at(e.head), d);
        if (std::min(t1, t2) <= lo && hi <= std::max(t1, t2)) segment.bars.push_back(id);
      }
      if (!segment.bars.empty()) corridor.segments.push_back(std::move(segment));
    }
  }
  return out;
}

CorridorOrder corridor_order(const Corridor& corridor, const AnnotationMatrix& a) {
  std::map<EdgeId, std::set<EdgeId>> below;  // i -> bars that must sit above i
  std::map<EdgeId, std::size_t> indegree;
  for (EdgeId id : corridor.bars) indegree[id] = 0;
  for (const CorridorSegment& segment : corridor.segments) {
    for (EdgeId i : segment.bars) {
      for (EdgeId j : segment.bars) {
        if (i == j) continue;
        const int s = a.at(i, j).sign() * corridor.sense.at(i);
        if (s == 0) {
          throw InputError("bars " + std::to_string(i) + " and " + std::to_string(j) +
                           " overlap without a layer order at " + describe_location(segment.from));
        }
        const EdgeId lower = s > 0 ? i : j;
        const EdgeId upper = s > 0 ? j : i;
        if (below[lower].insert(upper).second) ++indegree[upper];
      }
    }
  }
  CorridorOrder result;
  std::priority_queue<EdgeId, std::vector<EdgeId>, std::greater<>> ready;
  for (const auto& [id, deg] : indegree) {
    if (deg == 0) ready.push(id);
  }
  while (!ready.empty()) {
    const EdgeId id = ready.top();
    ready.pop();
    result.psi[id] = result.order.size();
    result.order.push_back(id);
    for (EdgeId up : below[id]) {
      if (--indegree[up] == 0) ready.push(up);
    }
  }
  if (result.order.size() != corridor.bars.size()) {
    for (const CorridorSegment& segment : corridor.segments) {
      for (EdgeId id : segment.bars) {
        if (!result.psi.count(id)) {
          throw InputError("inconsistent layer orders along the corridor at " +
                           describe_location(segment.from));
        }
      }
    }
    throw InputError("inconsistent layer orders along the corridor");
  }
  return result;
}

Rational delta_bound(const Linkage& linkage, const Configuration& c) {
  const std::size_t n = linkage.edge_count();
  if (n == 0) return Rational(1);
  Rational bound(1, n);
  std::vector<Point> vectors;
  for (const Edge& e : linkage.edges()) {
    if (sgn(e.rest_length) == 0) continue;
    bound = std::min(bound, e.rest_length);
    vectors.push_back(c.at(e.head) - c.at(e.tail));
  }
  Rational min_sin2(1);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      const Rational cr = cross(vectors[i], vectors[j]);
      if (sgn(cr) == 0) continue;
      const Rational s2 = cr * cr / (squared_norm(vectors[i]) * squared_norm(vectors[j]));
      min_sin2 = std::min(min_sin2, s2);
    }
  }
  Rational sin_lower = sqrt_lower(min_sin2, 12);
  for (unsigned digits = 24; sgn(sin_lower) == 0 && digits <= 96; digits *= 2) {
    sin_lower = sqrt_lower(min_sin2, digits);
  }
  return std::min(bound, Rational(sin_lower / (2 * Rational(n))));
}

Rational clamp_delta(const Rational& delta, const Rational& bound) {
  if (sgn(delta) <= 0) throw BoundError("delta must be positive, got " + to_string(delta));
  if (delta >= bound) return bound / 2;
  return delta;
}

namespace {

// Fragment placement for a given delta, then exact verification.
Attempt place_fragments(const Linkage& linkage, const Configuration& c, const AnnotationMatrix& a,
                        const Extended& ext, const std::vector<Point>& shift_unit,
                        const std::vector<std::size_t>& psi, const Rational& delta) {
  const std::size_t m = linkage.edge_count();
  const Linkage& lp = ext.linkage;
  Attempt out;
  out.placement = ext.configuration.placement;
  std::vector<Point>& pos = out.placement;
  const Rational delta2 = delta * delta;

  // fragment -> its original edge, if any
  std::vector<std::optional<EdgeId>> fragment_edge(lp.vertex_count());
  for (EdgeId id = 0; id < m; ++id) {
    fragment_edge[lp.edge(id).tail] = id;
    fragment_edge[lp.edge(id).head] = id;
  }

  for (EdgeId id = 0; id < m; ++id) {
    const Edge& e = linkage.edge(id);
    if (sgn(e.rest_length) == 0) continue;
    const Point o = delta2 * Rational(psi[id]) * shift_unit[id];
    const Rational o2 = squared_norm(o);
    for (int end = 0; end < 2; ++end) {
      const VertexId v = end == 0 ? e.tail : e.head;
      const VertexId f = end == 0 ? lp.edge(id).tail : lp.edge(id).head;
      const Point& x = c.at(v);
      const Point dvec = c.at(e.other(v)) - x;
      // o is perpendicular to dvec, so |o + t dvec|^2 = |o|^2 + t^2 |dvec|^2
      const Rational t = sqrt_lower((delta2 - o2) / squared_norm(dvec), 18);
      pos[f] = x + o + t * dvec;
    }
  }

  const MergedVertexPartition classes = merged_vertex_partition(linkage);
  for (std::size_t k = 0; k < classes.class_count(); ++k) {
    const auto& members = classes.members(k);
    if (members.size() < 2) continue;
    std::optional<VertexId> hub_fragment;
    for (VertexId f = 0; f < lp.vertex_count() && !hub_fragment; ++f) {
      if (!classes.same_class(ext.map.vertex_to_original[f], members.front())) continue;
      if (fragment_edge[f] && sgn(linkage.edge(*fragment_edge[f]).rest_length) > 0) hub_fragment = f;
    }
    const Point hub = hub_fragment ? pos[*hub_fragment] : c.at(members.front());
    for (VertexId f = 0; f < lp.vertex_count(); ++f) {
      if (!classes.same_class(ext.map.vertex_to_original[f], members.front())) continue;
      if (fragment_edge[f] && sgn(linkage.edge(*fragment_edge[f]).rest_length) == 0) pos[f] = hub;
    }
  }

  if (!configuration_membership(lp, pos, 2 * delta)) {
    out.failure = "a bar length drifted by more than 2 delta";
    return out;
  }
  for (VertexId f = 0; f < lp.vertex_count(); ++f) {
    if (squared_distance(pos[f], c.at(ext.map.vertex_to_original[f])) > delta2) {
      out.failure = "fragment " + std::to_string(f) + " moved more than delta";
      return out;
    }
  }
  if (auto touch = find_touch(lp, pos)) {
    out.failure = "perturbed configuration touches at " + describe_location(touch->where) + " (features " +
                  std::to_string(touch->first) + ", " + std::to_string(touch->second) + ")";
    return out;
  }
  for (EdgeId i = 0; i < m; ++i) {
    const OrientedEdge ei = placed_edge(lp, pos, i);
    for (EdgeId j = 0; j < m; ++j) {
      if (i == j || a.at(i, j).is_zero()) continue;
      if (ord(ei, placed_edge(lp, pos, j)).sign() != a.at(i, j).sign()) {
        out.failure = "annotation sign of pair (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") flipped";
        return out;
      }
    }
  }
  return out;
}

}  // namespace

PerturbationResult perturb(const Linkage& linkage, const Configuration& c, const AnnotationMatrix& a,
                           const Rational& delta) {
  const Verdict verdict = validate(linkage, c, a);
  if (!verdict.overall) {
    throw InputError(std::string("annotated configuration fails the ") +
                     condition_name(*verdict.first_failure()) + " condition");
  }
  const Rational bound = delta_bound(linkage, c);
  if (sgn(delta) <= 0 || delta >= bound) {
    throw BoundError("delta " + to_string(delta) + " outside (0, " + to_string(bound) + ")");
  }

  PerturbationResult result;
  result.requested_delta = delta;
  result.corridors = corridors(linkage, c);
  std::vector<Point> shift_unit(linkage.edge_count());
  std::vector<std::size_t> psi(linkage.edge_count(), 0);
  for (Corridor& corridor : result.corridors) {
    CorridorOrder order = corridor_order(corridor, a);
    corridor.order = std::move(order.order);
    corridor.psi = std::move(order.psi);
    const Point n{Rational(corridor.a), Rational(corridor.b)};
    const Point u = Rational(1 / sqrt_upper(squared_norm(n), 18)) * n;
    const double len = std::sqrt(to_double(squared_norm(n)));
    result.normals.push_back({corridor.direction, u, {to_double(n.x) / len, to_double(n.y) / len}});
    for (EdgeId id : corridor.bars) {
      shift_unit[id] = u;
      psi[id] = corridor.psi.at(id);
    }
  }

  const Extended ext = extend_split(linkage, c);
  Rational current = delta;
  std::string failure;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    Attempt placed = place_fragments(linkage, c, a, ext, shift_unit, psi, current);
    if (!placed.failure) {
      result.linkage = ext.linkage;
      result.map = ext.map;
      result.delta = current;
      result.retries = attempt;
      result.slack = 2 * current;
      result.configuration = Configuration{std::move(placed.placement), result.slack};
      for (const Point& p : result.configuration.placement) result.coordinates.push_back(to_point_d(p));
      result.nontouching = is_nontouching(result.linkage, result.configuration);
      return result;
    }
    failure = *placed.failure;
    current /= 2;
  }
  throw InternalError("perturbation failed exact verification: " + failure);
}

bool ProbeReport::ok() const {
  return std::all_of(steps.begin(), steps.end(), [](const ProbeStep& s) {
    return s.signs_agree && s.displacement_ok && s.drift_ok;
  });
}

ProbeReport convergence_probe(const Linkage& linkage, const Configuration& c, const AnnotationMatrix& a,
                              const std::vector<Rational>& deltas) {
  for (std::size_t k = 1; k < deltas.size(); ++k) {
    if (!(deltas[k] < deltas[k - 1])) throw InputError("delta sequence must be strictly decreasing");
  }
  ProbeReport report;
  if (deltas.empty()) return report;
  const Rational bound = delta_bound(linkage, c);
  const std::size_t m = linkage.edge_count();
  for (const Rational& requested : deltas) {
    const PerturbationResult r = perturb(linkage, c, a, clamp_delta(requested, bound));
    ProbeStep step;
    step.requested_delta = requested;
    step.delta = r.delta;
    const auto& pos = r.configuration.placement;
    for (EdgeId i = 0; i < m; ++i) {
      const OrientedEdge ei = placed_edge(r.linkage, pos, i);
      const OrientedEdge ci = placed_edge(linkage, c.placement, i);
      for (EdgeId j = 0; j < m; ++j) {
        if (i == j) continue;
        const Surd overlap = overlap_length(ci, placed_edge(linkage, c.placement, j));
        if (a.at(i, j).is_zero() && overlap.is_zero()) continue;
        ProbePair pair{i, j, ord(ei, placed_edge(r.linkage, pos, j)), a.at(i, j), overlap, true};
        pair.sign_agrees = a.at(i, j).is_zero() || pair.value.sign() == a.at(i, j).sign();
        step.signs_agree = step.signs_agree && pair.sign_agrees;
        step.pairs.push_back(std::move(pair));
      }
    }
    const Rational d2 = r.delta * r.delta;
    for (VertexId f = 0; f < r.linkage.vertex_count(); ++f) {
      const Rational s = squared_distance(pos[f], c.at(r.map.vertex_to_original[f]));
      step.displacement_ok = step.displacement_ok && s <= d2;
      step.max_displacement = std::max(step.max_displacement, std::sqrt(to_double(s)));
    }
    step.drift_ok = configuration_membership(r.linkage, pos, 2 * r.delta);
    for (const Edge& e : r.linkage.edges()) {
      const double len = std::sqrt(to_double(squared_distance(pos[e.tail], pos[e.head])));
      step.max_drift = std::max(step.max_drift, std::abs(len - to_double(e.rest_length)));
    }
    report.steps.push_back(std::move(step));
  }
  return report;
}

}  // namespace linkfold
