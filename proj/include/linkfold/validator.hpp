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
#include <string>
#include <vector>

#include "linkfold/linkage.hpp"
#include "linkfold/order.hpp"

namespace linkfold {

/// One bar incidence into a vertex location.
struct Inbound {
  Point direction;          // from the location toward the bar's far side
  EdgeId edge = 0;
  int dir = 0;              // +1 iff the bar is oriented toward the location
  std::size_t entrance = 0; // index into MagnifiedView::entrances
  std::size_t connection = 0;  // direct-connection class id, local to the view
  bool pass_through = false;
  std::optional<VertexId> vertex;  // endpoint at this location, if any
};

/// Infinitesimal neighbourhood of a vertex location.
struct MagnifiedView {
  Point location;
  /// Sorted by entrance angle descending (counterclockwise from +x, exact),
  /// ties by edge id.
  std::vector<Inbound> inbounds;
  /// Groups of inbound indices sharing an entrance, in descending angle order.
  std::vector<std::vector<std::size_t>> entrances;
  std::size_t connection_count = 0;
  /// Total order t1 >= t2 >= ... as inbound indices, once well-ordered.
  std::vector<std::size_t> order;
};

enum class Condition { kMacroscopic = 0, kWellAnnotated = 1, kWellOrdered = 2, kMicroscopic = 3 };

const char* condition_name(Condition c);

struct Witness {
  std::vector<EdgeId> edges;
  std::optional<Point> location;
  std::string detail;
};

enum class Status { kPassed, kFailed, kSkipped };

struct ConditionReport {
  Status status = Status::kSkipped;
  std::vector<Witness> witnesses;
};

/// Outcome of the four combinatorial noncrossing conditions.
struct Verdict {
  bool overall = false;
  std::array<ConditionReport, 4> conditions;

  const ConditionReport& at(Condition c) const { return conditions[static_cast<int>(c)]; }
  ConditionReport& at(Condition c) { return conditions[static_cast<int>(c)]; }
  /// First failing condition, if any.
  std::optional<Condition> first_failure() const;
};

struct ValidateOptions {
  /// Collect every witness and run every condition instead of stopping at the
  /// first failure.
  bool report_all = false;
};

/// One view per distinct vertex point, in lexicographic order of location.
/// Requires C in Conf_0.
std::vector<MagnifiedView> magnified_views(const Linkage& linkage, const Configuration& c);

ConditionReport check_macroscopic(const Linkage& linkage, const Configuration& c,
                                  bool report_all = false);
ConditionReport check_well_annotated(const Linkage& linkage, const Configuration& c,
                                     const AnnotationMatrix& a, bool report_all = false);
/// Fills `order` of every view on success.
ConditionReport check_well_ordered(std::vector<MagnifiedView>& views, const AnnotationMatrix& a,
                                   bool report_all = false);
/// Laminarity of direct-connection classes along each view's order.
ConditionReport check_microscopic(const std::vector<MagnifiedView>& views, bool report_all = false);

/// Runs the four checks in order. Throws InputError unless C is in Conf_0.
Verdict validate(const Linkage& linkage, const Configuration& c, const AnnotationMatrix& a,
                 const ValidateOptions& options = {});

/// Interleaving pattern a < b < c < d (positions) with labels P, Q, P, Q, if
/// the label sequence has one. Stack-based, linear after last-occurrence
/// indexing.
std::optional<std::array<std::size_t, 4>> find_interleaving(const std::vector<std::size_t>& labels);

}  // namespace linkfold
