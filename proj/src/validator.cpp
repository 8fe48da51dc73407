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

#include "linkfold/validator.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "linkfold/errors.hpp"

namespace linkfold {

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::kMacroscopic:
      return "macroscopic";
    case Condition::kWellAnnotated:
      return "well-annotated";
    case Condition::kWellOrdered:
      return "well-ordered";
    case Condition::kMicroscopic:
      return "microscopic";
  }
  return "?";
}

std::optional<Condition> Verdict::first_failure() const {
  for (int i = 0; i < 4; ++i) {
    if (conditions[i].status == Status::kFailed) return static_cast<Condition>(i);
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 4>> find_interleaving(const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::size_t> last;
  for (std::size_t i = 0; i < labels.size(); ++i) last[labels[i]] = i;

  std::vector<std::size_t> stack;
  std::map<std::size_t, bool> on_stack;
  std::optional<std::pair<std::size_t, std::size_t>> bad;  // (P, Q)
  for (std::size_t i = 0; i < labels.size() && !bad; ++i) {
    const std::size_t c = labels[i];
    if (on_stack[c]) {
      while (stack.back() != c) {
        const std::size_t p = stack.back();
        if (last[p] > i) {
          bad = std::make_pair(c, p);
          break;
        }
        stack.pop_back();
        on_stack[p] = false;
      }
    } else {
      stack.push_back(c);
      on_stack[c] = true;
    }
    if (!bad && last[c] == i && !stack.empty() && stack.back() == c) {
      stack.pop_back();
      on_stack[c] = false;
    }
  }
  if (!bad) return std::nullopt;

  // greedy P Q P Q scan recovers concrete positions
  const std::size_t want[4] = {bad->first, bad->second, bad->first, bad->second};
  std::array<std::size_t, 4> at{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < labels.size() && k < 4; ++i) {
    if (labels[i] == want[k]) at[k++] = i;
  }
  return at;
}

std::vector<MagnifiedView> magnified_views(const Linkage& linkage, const Configuration& c) {
  const MergedVertexPartition classes = merged_vertex_partition(linkage);
  std::vector<Point> locations(c.placement.begin(), c.placement.end());
  std::sort(locations.begin(), locations.end(), PointLexLess{});
  locations.erase(std::unique(locations.begin(), locations.end()), locations.end());

  std::vector<MagnifiedView> views;
  views.reserve(locations.size());
  for (const Point& x : locations) {
    MagnifiedView view;
    view.location = x;
    std::map<std::size_t, std::size_t> local_class;
    std::size_t next_class = 0;
    auto class_for_vertex = [&](VertexId v) {
      auto [it, inserted] = local_class.try_emplace(classes.class_of(v), next_class);
      if (inserted) ++next_class;
      return it->second;
    };
    for (const Edge& e : linkage.edges()) {
      if (sgn(e.rest_length) == 0) continue;
      const Point& t = c.at(e.tail);
      const Point& h = c.at(e.head);
      if (t == h) continue;
      if (t == x) {
        view.inbounds.push_back({h - x, e.id, -1, 0, class_for_vertex(e.tail), false, e.tail});
      } else if (h == x) {
        view.inbounds.push_back({t - x, e.id, +1, 0, class_for_vertex(e.head), false, e.head});
      } else if (in_segment_interior(x, t, h)) {
        const std::size_t cls = next_class++;
        view.inbounds.push_back({h - x, e.id, -1, 0, cls, true, std::nullopt});
        view.inbounds.push_back({t - x, e.id, +1, 0, cls, true, std::nullopt});
      }
    }
    view.connection_count = next_class;
    std::stable_sort(view.inbounds.begin(), view.inbounds.end(), [](const Inbound& a, const Inbound& b) {
      if (!same_direction(a.direction, b.direction)) return angle_less(b.direction, a.direction);
      return a.edge < b.edge;
    });
    for (std::size_t i = 0; i < view.inbounds.size(); ++i) {
      if (i == 0 || !same_direction(view.inbounds[i - 1].direction, view.inbounds[i].direction)) {
        view.entrances.emplace_back();
      }
      view.inbounds[i].entrance = view.entrances.size() - 1;
      view.entrances.back().push_back(i);
    }
    views.push_back(std::move(view));
  }
  return views;
}

ConditionReport check_macroscopic(const Linkage& linkage, const Configuration& c, bool report_all) {
  ConditionReport report;
  report.status = Status::kPassed;
  const std::size_t m = linkage.edge_count();
  for (EdgeId i = 0; i < m; ++i) {
    const OrientedEdge ei = placed_edge(linkage, c.placement, i);
    for (EdgeId j = i + 1; j < m; ++j) {
      if (strict_crossing(ei, placed_edge(linkage, c.placement, j))) {
        report.status = Status::kFailed;
        report.witnesses.push_back({{i, j}, std::nullopt, "strict crossing"});
        if (!report_all) return report;
      }
    }
  }
  return report;
}

ConditionReport check_well_annotated(const Linkage& linkage, const Configuration& c,
                                     const AnnotationMatrix& a, bool report_all) {
  ConditionReport report;
  report.status = Status::kPassed;
  const std::size_t m = linkage.edge_count();
  if (a.size() != m) throw InputError("annotation matrix size does not match the edge count");
  for (EdgeId i = 0; i < m; ++i) {
    const OrientedEdge ei = placed_edge(linkage, c.placement, i);
    for (EdgeId j = 0; j < m; ++j) {
      if (i == j) continue;
      const OrientedEdge ej = placed_edge(linkage, c.placement, j);
      const Surd overlap = overlap_length(ei, ej);
      const Surd& value = a.at(i, j);
      std::string problem;
      if (!overlap.is_zero()) {
        if (value != overlap && value != -overlap) {
          problem = "A[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + value.to_string() +
                    ", overlap requires +/-" + overlap.to_string();
        }
      } else {
        const Surd expected = ord(ei, ej);
        if (value != expected) {
          problem = "A[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + value.to_string() +
                    ", non-overlapping pair requires Ord = " + expected.to_string();
        }
      }
      if (!problem.empty()) {
        report.status = Status::kFailed;
        report.witnesses.push_back({{i, j}, std::nullopt, problem});
        if (!report_all) return report;
      }
    }
  }
  return report;
}

ConditionReport check_well_ordered(std::vector<MagnifiedView>& views, const AnnotationMatrix& a,
                                   bool report_all) {
  ConditionReport report;
  report.status = Status::kPassed;
  for (MagnifiedView& view : views) {
    bool view_ok = true;
    std::vector<std::size_t> order;
    for (const auto& entrance : view.entrances) {
      const std::size_t k = entrance.size();
      // beats[p][q]: inbound p strictly precedes q
      std::vector<std::vector<bool>> beats(k, std::vector<bool>(k, false));
      bool entrance_ok = true;
      for (std::size_t p = 0; p < k && entrance_ok; ++p) {
        for (std::size_t q = p + 1; q < k && entrance_ok; ++q) {
          const Inbound& ip = view.inbounds[entrance[p]];
          const Inbound& iq = view.inbounds[entrance[q]];
          const Surd& apq = a.at(ip.edge, iq.edge);
          const Surd& aqp = a.at(iq.edge, ip.edge);
          if (ip.dir * apq.sign() != -iq.dir * aqp.sign()) {
            entrance_ok = false;
            report.witnesses.push_back(
                {{ip.edge, iq.edge}, view.location,
                 "dir(e_i) sign(A_ij) != -dir(e_j) sign(A_ji) for same-entrance inbounds"});
            break;
          }
          const bool p_ge_q = ip.dir * apq.sign() >= 0;
          const bool q_ge_p = iq.dir * aqp.sign() >= 0;
          if (p_ge_q == q_ge_p) {
            entrance_ok = false;
            report.witnesses.push_back({{ip.edge, iq.edge}, view.location,
                                        "annotations do not separate same-entrance inbounds"});
            break;
          }
          beats[p][q] = p_ge_q;
          beats[q][p] = q_ge_p;
        }
      }
      if (entrance_ok) {
        std::vector<std::size_t> wins(k, 0);
        for (std::size_t p = 0; p < k; ++p) {
          for (std::size_t q = 0; q < k; ++q) wins[p] += beats[p][q] ? 1 : 0;
        }
        std::vector<std::size_t> sorted = wins;
        std::sort(sorted.begin(), sorted.end());
        bool transitive = true;
        for (std::size_t p = 0; p < k; ++p) transitive = transitive && sorted[p] == p;
        if (!transitive) {
          entrance_ok = false;
          Witness w{{}, view.location, "annotation order at one entrance is cyclic"};
          for (std::size_t p = 0; p < k && w.edges.empty(); ++p) {
            for (std::size_t q = 0; q < k && w.edges.empty(); ++q) {
              for (std::size_t r = 0; r < k && w.edges.empty(); ++r) {
                if (beats[p][q] && beats[q][r] && beats[r][p]) {
                  w.edges = {view.inbounds[entrance[p]].edge, view.inbounds[entrance[q]].edge,
                             view.inbounds[entrance[r]].edge};
                }
              }
            }
          }
          report.witnesses.push_back(std::move(w));
        } else {
          std::vector<std::size_t> idx(k);
          std::iota(idx.begin(), idx.end(), std::size_t{0});
          std::sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) { return wins[p] > wins[q]; });
          for (std::size_t p : idx) order.push_back(entrance[p]);
        }
      }
      if (!entrance_ok) {
        view_ok = false;
        report.status = Status::kFailed;
        if (!report_all) return report;
      }
    }
    if (view_ok) view.order = std::move(order);
  }
  return report;
}

ConditionReport check_microscopic(const std::vector<MagnifiedView>& views, bool report_all) {
  ConditionReport report;
  report.status = Status::kPassed;
  for (const MagnifiedView& view : views) {
    if (view.order.size() != view.inbounds.size()) {
      throw InputError("microscopic check needs a well-ordered view");
    }
    std::vector<std::size_t> labels;
    labels.reserve(view.order.size());
    for (std::size_t i : view.order) labels.push_back(view.inbounds[i].connection);
    if (auto hit = find_interleaving(labels)) {
      Witness w;
      w.location = view.location;
      std::ostringstream detail;
      detail << "inbounds";
      for (std::size_t pos : *hit) {
        const Inbound& in = view.inbounds[view.order[pos]];
        w.edges.push_back(in.edge);
        detail << " (" << to_string(in.direction) << ", e" << in.edge << ")";
      }
      detail << " interleave two direct-connection classes";
      w.detail = detail.str();
      report.status = Status::kFailed;
      report.witnesses.push_back(std::move(w));
      if (!report_all) return report;
    }
  }
  return report;
}

Verdict validate(const Linkage& linkage, const Configuration& c, const AnnotationMatrix& a,
                 const ValidateOptions& options) {
  if (!configuration_membership(linkage, c.placement, Rational(0))) {
    throw InputError("configuration does not realize the rest lengths exactly (not in Conf_0)");
  }
  const bool all = options.report_all;
  Verdict verdict;
  verdict.at(Condition::kMacroscopic) = check_macroscopic(linkage, c, all);
  if (verdict.at(Condition::kMacroscopic).status == Status::kFailed && !all) return verdict;

  verdict.at(Condition::kWellAnnotated) = check_well_annotated(linkage, c, a, all);
  if (verdict.at(Condition::kWellAnnotated).status == Status::kFailed && !all) return verdict;

  std::vector<MagnifiedView> views = magnified_views(linkage, c);
  verdict.at(Condition::kWellOrdered) = check_well_ordered(views, a, all);
  if (verdict.at(Condition::kWellOrdered).status == Status::kFailed) return verdict;

  verdict.at(Condition::kMicroscopic) = check_microscopic(views, all);
  verdict.overall = std::all_of(verdict.conditions.begin(), verdict.conditions.end(),
                                [](const ConditionReport& r) { return r.status == Status::kPassed; });
  return verdict;
}

}  // namespace linkfold
