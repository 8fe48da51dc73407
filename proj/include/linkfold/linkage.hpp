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

#include <cstddef>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "linkfold/geometry.hpp"
#include "linkfold/rational.hpp"

namespace linkfold {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// A bar. Canonical orientation is tail -> head.
struct Edge {
  EdgeId id = 0;
  VertexId tail = 0;
  VertexId head = 0;
  Rational rest_length;

  VertexId other(VertexId v) const { return v == tail ? head : tail; }
};

/// Multigraph with nonnegative rational rest lengths. Vertex ids are
/// 0..vertex_count-1 and edge ids are the positions in `edges()`.
/// Parallel bars are allowed; self-loops are not.
class Linkage {
 public:
  Linkage() = default;
  Linkage(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  /// Incident edge ids in ascending order.
  const std::vector<EdgeId>& incident_edges(VertexId v) const { return incidence_.at(v); }
  std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }

  /// Same vertex count and the same (tail, head) for every edge id.
  bool same_graph(const Linkage& other) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Vertex placement with an explicit length slack epsilon; the pair (L, C)
/// is a member of Conf_epsilon(L) when every realized bar length is within
/// epsilon of its rest length.
struct Configuration {
  std::vector<Point> placement;
  Rational epsilon{0};

  const Point& at(VertexId v) const { return placement.at(v); }
};

/// Partition of the vertices into classes joined by paths of bars whose
/// length is zero.
class MergedVertexPartition {
 public:
  MergedVertexPartition() = default;
  explicit MergedVertexPartition(std::vector<std::size_t> class_of);

  std::size_t class_of(VertexId v) const { return class_of_.at(v); }
  std::size_t class_count() const { return members_.size(); }
  const std::vector<VertexId>& members(std::size_t cls) const { return members_.at(cls); }
  bool same_class(VertexId a, VertexId b) const { return class_of(a) == class_of(b); }

  /// Location of a class in a configuration (the position of its first member).
  const Point& location(std::size_t cls, const Configuration& c) const;

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<VertexId>> members_;
};

/// Bookkeeping from an extended linkage back to the linkage it extends.
/// Edges without an original are extension bars. An empty map denotes the
/// identity.
struct ExtensionMap {
  std::size_t original_vertex_count = 0;
  std::size_t original_edge_count = 0;
  std::vector<VertexId> vertex_to_original;
  std::vector<std::optional<EdgeId>> edge_to_original;

  bool empty() const { return vertex_to_original.empty() && edge_to_original.empty(); }
  bool is_extension_bar(EdgeId e) const { return !edge_to_original.at(e).has_value(); }
  std::vector<EdgeId> extension_bars() const;
};

struct Extended {
  Linkage linkage;
  Configuration configuration;
  ExtensionMap map;
};

struct Reduced {
  Linkage linkage;
  Configuration configuration;
};

/// Same graph and every rest-length difference at most epsilon.
bool check_epsilon_related(const Linkage& a, const Linkage& b, const Rational& epsilon);

/// True iff every realized length is within epsilon of its rest length.
/// Compares squared lengths; the lower band applies only when rest >= epsilon.
bool configuration_membership(const Linkage& linkage, std::span<const Point> placement,
                              const Rational& epsilon);
bool configuration_membership(const Linkage& linkage, const Configuration& c);

/// Union-find closure over bars with rest length zero.
MergedVertexPartition merged_vertex_partition(const Linkage& linkage);

/// Closure over bars whose endpoints coincide in `placement`.
MergedVertexPartition realized_vertex_partition(const Linkage& linkage,
                                                std::span<const Point> placement);

/// Exact nontouching test for a member of Conf_epsilon. Classes are formed by
/// bars of zero realized length, which are treated as single points.
/// Throws InputError when C is not in Conf_epsilon(L).
bool is_nontouching(const Linkage& linkage, const Configuration& c);

/// First pair of features that makes a configuration touch, if any.
struct TouchWitness {
  enum class Kind { kCoincidentVertices, kEdgeContact, kVertexOnEdge } kind;
  std::size_t first = 0;   // vertex or edge id
  std::size_t second = 0;  // vertex or edge id
  Point where;
};
std::optional<TouchWitness> find_touch(const Linkage& linkage, std::span<const Point> placement);

/// Splits every vertex of degree d >= 2 into d fragments, one per incident
/// bar, joined by zero-length extension bars to the first fragment. Within a
/// vertex, fragments for zero-length bars come first, then the rest, each in
/// ascending edge id. Original edge ids are preserved; extension bars follow.
Extended extend_split(const Linkage& linkage, const Configuration& c);

/// Contracts the extension bars of `map`. Duplicate bars are kept.
/// Throws InvalidReductionError when an extension bar has positive rest length
/// or endpoints that are not co-located.
Reduced reduce(const Linkage& linkage, const Configuration& c, const ExtensionMap& map);

}  // namespace linkfold
