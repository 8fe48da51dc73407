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

#include "linkfold/document.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>

#include "json.hpp"

namespace linkfold {
namespace {

using json = nlohmann::json;

class Reader {
 public:
  explicit Reader(bool strict) : strict_(strict) {}

  void fields(const json& j, const std::string& path, std::initializer_list<const char*> allowed) const {
    if (!j.is_object()) throw DocumentError(path.empty() ? "/" : path, "expected an object");
    if (!strict_) return;
    for (const auto& [key, value] : j.items()) {
      if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end()) {
        throw DocumentError(path + "/" + key, "unknown field");
      }
    }
  }

  const json& member(const json& j, const std::string& path, const char* key) const {
    auto it = j.find(key);
    if (it == j.end()) throw DocumentError(path + "/" + key, "missing field");
    return *it;
  }

  const json& array(const json& j, const std::string& path) const {
    if (!j.is_array()) throw DocumentError(path, "expected an array");
    return j;
  }

  Rational number(const json& j, const std::string& path) const {
    std::string text;
    if (j.is_string()) {
      text = j.get<std::string>();
    } else if (!strict_ && j.is_number()) {
      text = j.dump();
    } else {
      throw DocumentError(path, strict_ ? "expected a number as a string" : "expected a number");
    }
    try {
      return parse_rational(text);
    } catch (const std::invalid_argument& e) {
      throw DocumentError(path, e.what());
    }
  }

  std::size_t index(const json& j, const std::string& path) const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
      throw DocumentError(path, "expected a nonnegative integer");
    }
    return j.get<std::size_t>();
  }

  Point point(const json& j, const std::string& path) const {
    if (!j.is_array() || j.size() != 2) throw DocumentError(path, "expected a pair [x, y]");
    return {number(j[0], path + "/0"), number(j[1], path + "/1")};
  }

 private:
  bool strict_;
};

std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

json point_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

}  // namespace

LinkageDocument parse_linkage_document(std::string_view text, bool strict) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError("byte " + std::to_string(e.byte), "syntax error");
  }
  const Reader r(strict);
  r.fields(root, "", {"format", "vertices", "edges", "epsilon", "annotations", "adornments", "frames", "extension_map"});
  LinkageDocument doc;

  const json& format = r.member(root, "", "format");
  if (!format.is_string() || format.get<std::string>() != kFormatVersion) {
    throw DocumentError("/format", std::string("expected \"") + kFormatVersion + "\"");
  }

  const json& vertices = r.array(r.member(root, "", "vertices"), "/vertices");
  std::vector<std::optional<Point>> points(vertices.size());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const std::string path = at("/vertices", k);
    r.fields(vertices[k], path, {"id", "x", "y"});
    const std::size_t id = r.index(r.member(vertices[k], path, "id"), path + "/id");
    if (id >= vertices.size()) throw DocumentError(path + "/id", "vertex ids must be 0.." + std::to_string(vertices.size() - 1));
    if (points[id]) throw DocumentError(path + "/id", "duplicate vertex id " + std::to_string(id));
    points[id] = Point{r.number(r.member(vertices[k], path, "x"), path + "/x"),
                       r.number(r.member(vertices[k], path, "y"), path + "/y")};
  }
  for (const auto& p : points) doc.placement.push_back(*p);

  const json& edges = r.array(r.member(root, "", "edges"), "/edges");
  std::vector<std::optional<Edge>> parsed(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = at("/edges", k);
    r.fields(edges[k], path, {"id", "tail", "head", "rest_length"});
    const std::size_t id = r.index(r.member(edges[k], path, "id"), path + "/id");
    if (id >= edges.size()) throw DocumentError(path + "/id", "edge ids must be 0.." + std::to_string(edges.size() - 1));
    if (parsed[id]) throw DocumentError(path + "/id", "duplicate edge id " + std::to_string(id));
    Edge e;
    e.id = id;
    e.tail = r.index(r.member(edges[k], path, "tail"), path + "/tail");
    e.head = r.index(r.member(edges[k], path, "head"), path + "/head");
    e.rest_length = r.number(r.member(edges[k], path, "rest_length"), path + "/rest_length");
    if (e.tail >= points.size()) throw DocumentError(path + "/tail", "dangling endpoint " + std::to_string(e.tail));
    if (e.head >= points.size()) throw DocumentError(path + "/head", "dangling endpoint " + std::to_string(e.head));
    if (e.tail == e.head) throw DocumentError(path, "self-loop");
    if (sgn(e.rest_length) < 0) throw DocumentError(path + "/rest_length", "negative length");
    parsed[id] = e;
  }
  std::vector<Edge> edge_list;
  for (const auto& e : parsed) edge_list.push_back(*e);
  doc.linkage = Linkage(points.size(), std::move(edge_list));
  const std::size_t m = doc.linkage.edge_count();

  if (root.contains("epsilon")) {
    doc.epsilon = r.number(root["epsilon"], "/epsilon");
    if (sgn(*doc.epsilon) < 0) throw DocumentError("/epsilon", "negative epsilon");
  }

  if (root.contains("annotations")) {
    const json& list = r.array(root["annotations"], "/annotations");
    std::set<std::pair<EdgeId, EdgeId>> seen;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string path = at("/annotations", k);
      r.fields(list[k], path, {"i", "j", "value"});
      AnnotationEntry entry;
      entry.i = r.index(r.member(list[k], path, "i"), path + "/i");
      entry.j = r.index(r.member(list[k], path, "j"), path + "/j");
      if (entry.i >= m || entry.j >= m || entry.i == entry.j) throw DocumentError(path, "invalid edge pair");
      if (!seen.insert({entry.i, entry.j}).second) throw DocumentError(path, "duplicate annotation");
      const json& value = r.member(list[k], path, "value");
      if (!value.is_string() && !(value.is_number() && !strict)) throw DocumentError(path + "/value", "expected a string");
      try {
        entry.value = Surd::parse(value.is_string() ? value.get<std::string>() : value.dump());
      } catch (const std::invalid_argument& e) {
        throw DocumentError(path + "/value", e.what());
      }
      doc.annotations.push_back(std::move(entry));
    }
    std::sort(doc.annotations.begin(), doc.annotations.end(),
              [](const AnnotationEntry& a, const AnnotationEntry& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
  }

  if (root.contains("adornments")) {
    const json& list = r.array(root["adornments"], "/adornments");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string path = at("/adornments", k);
      r.fields(list[k], path, {"boundary", "base"});
      Adornment a;
      const json& boundary = r.array(r.member(list[k], path, "boundary"), path + "/boundary");
      for (std::size_t i = 0; i < boundary.size(); ++i) a.boundary.push_back(r.point(boundary[i], at(path + "/boundary", i)));
      const json& base = r.member(list[k], path, "base");
      if (!base.is_array() || base.size() != 2) throw DocumentError(path + "/base", "expected [from, to]");
      a.base_from = r.index(base[0], path + "/base/0");
      a.base_to = r.index(base[1], path + "/base/1");
      try {
        check_adornment(a);
      } catch (const InputError& e) {
        throw DocumentError(path, e.what());
      }
      doc.adornments.push_back(std::move(a));
    }
  }

  if (root.contains("frames")) {
    const json& list = r.array(root["frames"], "/frames");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const json& frame = r.array(list[k], at("/frames", k));
      if (frame.size() != points.size()) throw DocumentError(at("/frames", k), "frame must place every vertex");
      std::vector<Point> placement;
      for (std::size_t i = 0; i < frame.size(); ++i) placement.push_back(r.point(frame[i], at(at("/frames", k), i)));
      doc.frames.push_back(std::move(placement));
    }
  }

  if (root.contains("extension_map")) {
    const json& em = root["extension_map"];
    const std::string path = "/extension_map";
    r.fields(em, path, {"original_vertex_count", "original_edge_count", "vertex_to_original", "edge_to_original"});
    ExtensionMap map;
    map.original_vertex_count = r.index(r.member(em, path, "original_vertex_count"), path + "/original_vertex_count");
    map.original_edge_count = r.index(r.member(em, path, "original_edge_count"), path + "/original_edge_count");
    const json& v2o = r.array(r.member(em, path, "vertex_to_original"), path + "/vertex_to_original");
    for (std::size_t i = 0; i < v2o.size(); ++i) {
      const std::size_t o = r.index(v2o[i], at(path + "/vertex_to_original", i));
      if (o >= map.original_vertex_count) throw DocumentError(at(path + "/vertex_to_original", i), "out of range");
      map.vertex_to_original.push_back(o);
    }
    const json& e2o = r.array(r.member(em, path, "edge_to_original"), path + "/edge_to_original");
    for (std::size_t i = 0; i < e2o.size(); ++i) {
      if (e2o[i].is_null()) {
        map.edge_to_original.emplace_back(std::nullopt);
        continue;
      }
      const std::size_t o = r.index(e2o[i], at(path + "/edge_to_original", i));
      if (o >= map.original_edge_count) throw DocumentError(at(path + "/edge_to_original", i), "out of range");
      map.edge_to_original.emplace_back(o);
    }
    if (map.vertex_to_original.size() != points.size() || map.edge_to_original.size() != m) {
      throw DocumentError(path, "extension map does not cover the linkage");
    }
    doc.extension_map = std::move(map);
  }
  return doc;
}

std::string write_linkage_document(const LinkageDocument& doc) {
  json root = json::object();
  root["format"] = doc.format;
  json vertices = json::array();
  for (std::size_t v = 0; v < doc.placement.size(); ++v) {
    vertices.push_back({{"id", v}, {"x", to_string(doc.placement[v].x)}, {"y", to_string(doc.placement[v].y)}});
  }
  root["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const Edge& e : doc.linkage.edges()) {
    edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"rest_length", to_string(e.rest_length)}});
  }
  root["edges"] = std::move(edges);
  if (doc.epsilon) root["epsilon"] = to_string(*doc.epsilon);
  if (!doc.annotations.empty()) {
    json list = json::array();
    for (const AnnotationEntry& a : doc.annotations) {
      list.push_back({{"i", a.i}, {"j", a.j}, {"value", a.value.to_string()}});
    }
    root["annotations"] = std::move(list);
  }
  if (!doc.adornments.empty()) {
    json list = json::array();
    for (const Adornment& a : doc.adornments) {
      json boundary = json::array();
      for (const Point& p : a.boundary) boundary.push_back(point_json(p));
      list.push_back({{"boundary", std::move(boundary)}, {"base", json::array({a.base_from, a.base_to})}});
    }
    root["adornments"] = std::move(list);
  }
  if (!doc.frames.empty()) {
    json list = json::array();
    for (const auto& frame : doc.frames) {
      json f = json::array();
      for (const Point& p : frame) f.push_back(point_json(p));
      list.push_back(std::move(f));
    }
    root["frames"] = std::move(list);
  }
  if (doc.extension_map) {
    const ExtensionMap& map = *doc.extension_map;
    json e2o = json::array();
    for (const auto& o : map.edge_to_original) e2o.push_back(o ? json(*o) : json(nullptr));
    root["extension_map"] = {{"original_vertex_count", map.original_vertex_count},
                             {"original_edge_count", map.original_edge_count},
                             {"vertex_to_original", map.vertex_to_original},
                             {"edge_to_original", std::move(e2o)}};
  }
  return root.dump(2) + "\n";
}

AnnotationMatrix annotation_matrix(const LinkageDocument& doc) {
  AnnotationMatrix a = annotate(doc.linkage, doc.placement);
  for (const AnnotationEntry& e : doc.annotations) a.at(e.i, e.j) = e.value;
  return a;
}

std::vector<AnnotationEntry> sparse_annotations(const Linkage& linkage, std::span<const Point> placement,
                                                const AnnotationMatrix& a) {
  const AnnotationMatrix geometric = annotate(linkage, placement);
  std::vector<AnnotationEntry> out;
  for (EdgeId i = 0; i < linkage.edge_count(); ++i) {
    for (EdgeId j = 0; j < linkage.edge_count(); ++j) {
      if (i != j && a.at(i, j) != geometric.at(i, j)) out.push_back({i, j, a.at(i, j)});
    }
  }
  return out;
}

}  // namespace linkfold
