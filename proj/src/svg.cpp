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

#include "linkfold/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "linkfold/corridor.hpp"
#include "linkfold/validator.hpp"

namespace linkfold {
namespace {

struct Drawing {
  std::vector<PointD> points;
  std::vector<Edge> bars;        // drawn as chained paths
  std::vector<Edge> extensions;  // drawn as lines
  std::size_t vertex_count = 0;
};

std::vector<std::vector<VertexId>> chain_paths(const Drawing& d, std::vector<bool>& closed) {
  std::vector<std::vector<std::size_t>> incident(d.vertex_count);
  for (std::size_t k = 0; k < d.bars.size(); ++k) {
    incident[d.bars[k].tail].push_back(k);
    incident[d.bars[k].head].push_back(k);
  }
  std::vector<bool> used(d.bars.size(), false);
  std::vector<std::vector<VertexId>> paths;
  auto walk = [&](VertexId start, std::size_t first) {
    std::vector<VertexId> path{start};
    VertexId cur = start;
    std::size_t k = first;
    while (true) {
      used[k] = true;
      cur = d.bars[k].other(cur);
      path.push_back(cur);
      if (incident[cur].size() != 2) break;
      auto next = std::find_if(incident[cur].begin(), incident[cur].end(), [&](std::size_t e) { return !used[e]; });
      if (next == incident[cur].end()) break;
      k = *next;
    }
    return path;
  };
  for (VertexId v = 0; v < d.vertex_count; ++v) {
    if (incident[v].size() == 2) continue;
    for (std::size_t k : incident[v]) {
      if (!used[k]) {
        paths.push_back(walk(v, k));
        closed.push_back(false);
      }
    }
  }
  for (std::size_t k = 0; k < d.bars.size(); ++k) {
    if (used[k]) continue;
    std::vector<VertexId> path = walk(d.bars[k].tail, k);
    closed.push_back(path.size() > 2 && path.front() == path.back());
    if (closed.back()) path.pop_back();
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

std::string format_number(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  std::string s(buffer);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string render_svg(const Linkage& linkage, const Configuration& c, const AnnotationMatrix& a,
                       const SvgOptions& options) {
  Drawing d;
  std::vector<PointD> labels;
  for (const Point& p : c.placement) labels.push_back(to_point_d(p));
  double stroke = 0.0;

  if (sgn(options.display_delta) > 0) {
    const Verdict verdict = validate(linkage, c, a);
    if (!verdict.overall) {
      const Condition failed = *verdict.first_failure();
      const auto& witnesses = verdict.at(failed).witnesses;
      throw ValidationError(std::string("cannot render: ") + condition_name(failed) + " condition fails" +
                            (witnesses.empty() ? "" : ": " + witnesses.front().detail));
    }
    const Rational delta = clamp_delta(options.display_delta, delta_bound(linkage, c));
    const PerturbationResult r = perturb(linkage, c, a, delta);
    d.points = r.coordinates;
    d.vertex_count = r.linkage.vertex_count();
    for (const Edge& e : r.linkage.edges()) {
      (r.map.is_extension_bar(e.id) ? d.extensions : d.bars).push_back(e);
    }
    stroke = to_double(r.delta * r.delta) / 2.0;
  } else {
    d.points = labels;
    d.vertex_count = linkage.vertex_count();
    d.bars = linkage.edges();
  }

  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    const PointD& p = d.points[i];
    if (i == 0 || p.x < min_x) min_x = p.x;
    if (i == 0 || p.x > max_x) max_x = p.x;
    if (i == 0 || p.y < min_y) min_y = p.y;
    if (i == 0 || p.y > max_y) max_y = p.y;
  }
  double size = std::max(max_x - min_x, max_y - min_y);
  if (size <= 0.0) size = 1.0;
  const double margin = 0.05 * size;
  const double vx = min_x - margin;
  const double vy = -max_y - margin;
  const double vw = (max_x - min_x) + 2 * margin;
  const double vh = (max_y - min_y) + 2 * margin;
  if (stroke <= 0.0) stroke = size / 200.0;
  const int width = 800;
  const int height = std::max(1, static_cast<int>(std::lround(width * vh / vw)));

  auto X = [&](const PointD& p) { return format_number(p.x); };
  auto Y = [&](const PointD& p) { return format_number(-p.y); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"" << format_number(vx) << ' ' << format_number(vy) << ' ' << format_number(vw) << ' '
      << format_number(vh) << "\">\n";
  out << "  <g fill=\"none\" stroke=\"#1f3b73\" stroke-width=\"" << format_number(stroke, 9)
      << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
  std::vector<bool> closed;
  const auto paths = chain_paths(d, closed);
  for (std::size_t k = 0; k < paths.size(); ++k) {
    out << "    <path d=\"";
    for (std::size_t i = 0; i < paths[k].size(); ++i) {
      const PointD& p = d.points[paths[k][i]];
      out << (i == 0 ? "M" : " L") << X(p) << ' ' << Y(p);
    }
    if (closed[k]) out << " Z";
    out << "\"/>\n";
  }
  out << "  </g>\n";
  if (!d.extensions.empty()) {
    out << "  <g stroke=\"#c0504d\" stroke-width=\"" << format_number(stroke / 2.0, 9) << "\">\n";
    for (const Edge& e : d.extensions) {
      const PointD& p = d.points[e.tail];
      const PointD& q = d.points[e.head];
      out << "    <line x1=\"" << X(p) << "\" y1=\"" << Y(p) << "\" x2=\"" << X(q) << "\" y2=\"" << Y(q) << "\"/>\n";
    }
    out << "  </g>\n";
  }
  if (options.labels) {
    out << "  <g fill=\"#000000\" font-family=\"sans-serif\" font-size=\"" << format_number(size / 30.0) << "\">\n";
    for (std::size_t v = 0; v < labels.size(); ++v) {
      out << "    <text x=\"" << X(labels[v]) << "\" y=\"" << Y(labels[v]) << "\">v" << v << "</text>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace linkfold
