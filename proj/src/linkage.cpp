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

#include "linkfold/linkage.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "linkfold/errors.hpp"

namespace linkfold {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Classes numbered by first appearance in vertex order.
std::vector<std::size_t> dense_classes(DisjointSets& sets, std::size_t n) {
  std::vector<std::size_t> root_to_class(n, n);
  std::vector<std::size_t> out(n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = sets.find(v);
    if (root_to_class[r] == n) root_to_class[r] = next++;
    out[v] = root_to_class[r];
  }
  return out;
}

}  // namespace

Linkage::Linkage(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incidence_(vertex_count) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id != i) throw InputError("edge ids must be dense: expected " + std::to_string(i));
    if (e.tail >= vertex_count_ || e.head >= vertex_count_) {
      throw InputError("edge " + std::to_string(i) + " has a dangling endpoint");
    }
    if (e.tail == e.head) throw InputError("edge " + std::to_string(i) + " is a self-loop");
    if (sgn(e.rest_length) < 0) throw InputError("edge " + std::to_string(i) + " has negative length");
    incidence_[e.tail].push_back(i);
    incidence_[e.head].push_back(i);
  }
}

bool Linkage::same_graph(const Linkage& other) const {
  if (vertex_count_ != other.vertex_count_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].tail != other.edges_[i].tail || edges_[i].head != other.edges_[i].head) return false;
  }
  return true;
}

MergedVertexPartition::MergedVertexPartition(std::vector<std::size_t> class_of)
    : class_of_(std::move(class_of)) {
  std::size_t count = 0;
  for (std::size_t c : class_of_) count = std::max(count, c + 1);
  members_.resize(count);
  for (VertexId v = 0; v < class_of_.size(); ++v) members_[class_of_[v]].push_back(v);
}

const Point& MergedVertexPartition::location(std::size_t cls, const Configuration& c) const {
  return c.at(members_.at(cls).front());
}

std::vector<EdgeId> ExtensionMap::extension_bars() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_to_original.size(); ++e) {
    if (!edge_to_original[e]) out.push_back(e);
  }
  return out;
}

bool check_epsilon_related(const Linkage& a, const Linkage& b, const Rational& epsilon) {
  if (!a.same_graph(b)) return false;
  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    if (abs(Rational(a.edge(i).rest_length - b.edge(i).rest_length)) > epsilon) return false;
  }
  return true;
}

bool configuration_membership(const Linkage& linkage, std::span<const Point> placement,
                              const Rational& epsilon) {
  if (placement.size() != linkage.vertex_count()) {
    throw InputError("placement covers " + std::to_string(placement.size()) + " of " +
                     std::to_string(linkage.vertex_count()) + " vertices");
  }
  for (const Edge& e : linkage.edges()) {
    const Rational len2 = squared_distance(placement[e.tail], placement[e.head]);
    const Rational upper = e.rest_length + epsilon;
    if (len2 > upper * upper) return false;
    if (e.rest_length >= epsilon) {
      const Rational lower = e.rest_length - epsilon;
      if (len2 < lower * lower) return false;
    }
  }
  return true;
}

bool configuration_membership(const Linkage& linkage, const Configuration& c) {
  return configuration_membership(linkage, c.placement, c.epsilon);
}

MergedVertexPartition merged_vertex_partition(const Linkage& linkage) {
  DisjointSets sets(linkage.vertex_count());
  for (const Edge& e : linkage.edges()) {
    if (sgn(e.rest_length) == 0) sets.unite(e.tail, e.head);
  }
  return MergedVertexPartition(dense_classes(sets, linkage.vertex_count()));
}

MergedVertexPartition realized_vertex_partition(const Linkage& linkage,
                                                std::span<const Point> placement) {
  DisjointSets sets(linkage.vertex_count());
  for (const Edge& e : linkage.edges()) {
    if (placement[e.tail] == placement[e.head]) sets.unite(e.tail, e.head);
  }
  return MergedVertexPartition(dense_classes(sets, linkage.vertex_count()));
}

std::optional<TouchWitness> find_touch(const Linkage& linkage, std::span<const Point> placement) {
  const MergedVertexPartition classes = realized_vertex_partition(linkage, placement);
  const std::size_t n = linkage.vertex_count();

  // (a) distinct classes occupy distinct points
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (placement[a] != placement[b]) return lex_less(placement[a], placement[b]);
    return a < b;
  });
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const VertexId a = order[i];
    for (std::size_t j = i + 1; j < n && placement[order[j]] == placement[a]; ++j) {
      if (!classes.same_class(a, order[j])) {
        return TouchWitness{TouchWitness::Kind::kCoincidentVertices, std::min(a, order[j]),
                            std::max(a, order[j]), placement[a]};
      }
    }
  }

  std::vector<EdgeId> positive;
  for (const Edge& e : linkage.edges()) {
    if (placement[e.tail] != placement[e.head]) positive.push_back(e.id);
  }

  // (b) positive bars meet only at endpoints of both
  for (std::size_t i = 0; i < positive.size(); ++i) {
    const Edge& e = linkage.edge(positive[i]);
    const Point& p = placement[e.tail];
    const Point& q = placement[e.head];
    for (std::size_t j = i + 1; j < positive.size(); ++j) {
      const Edge& f = linkage.edge(positive[j]);
      const Point& r = placement[f.tail];
      const Point& s = placement[f.head];
      const SegmentContact contact = intersect_segments(p, q, r, s);
      if (contact.kind == ContactKind::kDisjoint) continue;
      const bool endpoint_of_both = contact.kind == ContactKind::kPoint &&
                                    (contact.first == p || contact.first == q) &&
                                    (contact.first == r || contact.first == s);
      if (!endpoint_of_both) {
        return TouchWitness{TouchWitness::Kind::kEdgeContact, e.id, f.id, contact.first};
      }
    }
  }

  // (c) no vertex inside a bar
  for (EdgeId id : positive) {
    const Edge& e = linkage.edge(id);
    for (VertexId v = 0; v < n; ++v) {
      if (v == e.tail || v == e.head) continue;
      if (in_segment_interior(placement[v], placement[e.tail], placement[e.head])) {
        return TouchWitness{TouchWitness::Kind::kVertexOnEdge, v, id, placement[v]};
      }
    }
  }
  return std::nullopt;
}

bool is_nontouching(const Linkage& linkage, const Configuration& c) {
  if (!configuration_membership(linkage, c)) {
    throw InputError("configuration is not within epsilon = " + to_string(c.epsilon) +
                     " of the rest lengths");
  }
  return !find_touch(linkage, c.placement).has_value();
}

Extended extend_split(const Linkage& linkage, const Configuration& c) {
  if (c.placement.size() != linkage.vertex_count()) throw InputError("placement size mismatch");
  const std::size_t n = linkage.vertex_count();

  // fragment_of[e] = {fragment for tail, fragment for head}
  std::vector<std::pair<VertexId, VertexId>> fragment_of(linkage.edge_count());
  std::vector<VertexId> vertex_to_original;
  std::vector<Point> placement;
  std::vector<std::pair<VertexId, VertexId>> extension;  // (first fragment, other fragment)

  for (VertexId v = 0; v < n; ++v) {
    std::vector<EdgeId> incident = linkage.incident_edges(v);
    std::stable_sort(incident.begin(), incident.end(), [&](EdgeId a, EdgeId b) {
      const bool za = sgn(linkage.edge(a).rest_length) == 0;
      const bool zb = sgn(linkage.edge(b).rest_length) == 0;
      return za && !zb;
    });
    const VertexId first = vertex_to_original.size();
    if (incident.empty()) {
      vertex_to_original.push_back(v);
      placement.push_back(c.at(v));
      continue;
    }
    for (EdgeId e : incident) {
      const VertexId fragment = vertex_to_original.size();
      vertex_to_original.push_back(v);
      placement.push_back(c.at(v));
      if (linkage.edge(e).tail == v) {
        fragment_of[e].first = fragment;
      } else {
        fragment_of[e].second = fragment;
      }
      if (fragment != first) extension.emplace_back(first, fragment);
    }
  }

  std::vector<Edge> edges;
  std::vector<std::optional<EdgeId>> edge_to_original;
  for (const Edge& e : linkage.edges()) {
    edges.push_back(Edge{e.id, fragment_of[e.id].first, fragment_of[e.id].second, e.rest_length});
    edge_to_original.emplace_back(e.id);
  }
  for (const auto& [hub, fragment] : extension) {
    edges.push_back(Edge{edges.size(), hub, fragment, Rational(0)});
    edge_to_original.emplace_back(std::nullopt);
  }

  Extended out;
  out.map.original_vertex_count = n;
  out.map.original_edge_count = linkage.edge_count();
  out.map.vertex_to_original = std::move(vertex_to_original);
  out.map.edge_to_original = std::move(edge_to_original);
  out.linkage = Linkage(out.map.vertex_to_original.size(), std::move(edges));
  out.configuration = Configuration{std::move(placement), c.epsilon};
  return out;
}

Reduced reduce(const Linkage& linkage, const Configuration& c, const ExtensionMap& map) {
  if (map.empty()) return Reduced{linkage, c};
  if (map.vertex_to_original.size() != linkage.vertex_count() ||
      map.edge_to_original.size() != linkage.edge_count()) {
    throw InputError("extension map does not match the linkage");
  }
  for (const Edge& e : linkage.edges()) {
    if (!map.is_extension_bar(e.id)) continue;
    if (sgn(e.rest_length) != 0) {
      throw InvalidReductionError("extension bar " + std::to_string(e.id) + " has positive length");
    }
    if (c.at(e.tail) != c.at(e.head)) {
      throw InvalidReductionError("extension bar " + std::to_string(e.id) +
                                  " endpoints are not co-located");
    }
    if (map.vertex_to_original[e.tail] != map.vertex_to_original[e.head]) {
      throw InvalidReductionError("extension bar " + std::to_string(e.id) +
                                  " joins fragments of different vertices");
    }
  }
  std::vector<std::optional<Point>> placement(map.original_vertex_count);
  for (VertexId v = 0; v < linkage.vertex_count(); ++v) {
    const VertexId o = map.vertex_to_original[v];
    if (o >= map.original_vertex_count) throw InputError("extension map vertex out of range");
    if (!placement[o]) {
      placement[o] = c.at(v);
    } else if (*placement[o] != c.at(v)) {
      throw InvalidReductionError("fragments of vertex " + std::to_string(o) + " are not co-located");
    }
  }
  std::vector<Edge> edges(map.original_edge_count);
  std::vector<bool> seen(map.original_edge_count, false);
  for (const Edge& e : linkage.edges()) {
    const auto& o = map.edge_to_original[e.id];
    if (!o) continue;
    if (*o >= map.original_edge_count || seen[*o]) throw InputError("extension map edge not a bijection");
    seen[*o] = true;
    edges[*o] = Edge{*o, map.vertex_to_original[e.tail], map.vertex_to_original[e.head], e.rest_length};
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InputError("extension map misses an original edge");
  }
  Reduced out;
  out.configuration.epsilon = c.epsilon;
  for (std::size_t v = 0; v < placement.size(); ++v) {
    if (!placement[v]) throw InputError("original vertex " + std::to_string(v) + " has no fragment");
    out.configuration.placement.push_back(*placement[v]);
  }
  out.linkage = Linkage(map.original_vertex_count, std::move(edges));
  return out;
}

}  // namespace linkfold
