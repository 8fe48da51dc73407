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

#include "linkfold/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkfold/chain.hpp"
#include "linkfold/corridor.hpp"
#include "linkfold/document.hpp"
#include "linkfold/semialgebraic.hpp"
#include "linkfold/svg.hpp"
#include "linkfold/validator.hpp"

namespace linkfold {
namespace {

using json = nlohmann::json;

struct Globals {
  bool strict = false;
  std::string output;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

void write_atomic(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write " + path);
    file << text;
    if (!file.flush()) throw InputError("cannot write " + path);
  }
  std::filesystem::rename(temp, target);
}

void emit(const Globals& g, std::ostream& out, const std::string& text) {
  if (g.output.empty()) {
    out << text;
  } else {
    write_atomic(g.output, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json point_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }
json point_json(const PointD& p) { return json::array({format_number(p.x, 12), format_number(p.y, 12)}); }

const char* status_name(Status s) {
  switch (s) {
    case Status::kPassed:
      return "passed";
    case Status::kFailed:
      return "failed";
    case Status::kSkipped:
      return "skipped";
  }
  return "?";
}

LinkageDocument load(const Globals& g, const std::string& path, std::istream& in) {
  return parse_linkage_document(read_input(path, in), g.strict);
}

Rational parse_cli_rational(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

Rational parse_cli_nonnegative(const std::string& text, const char* flag) {
  Rational value = parse_cli_rational(text, flag);
  if (sgn(value) < 0) throw CLI::ValidationError(flag, "must be nonnegative");
  return value;
}

// ------------------------------------------------------------------ commands

int run_validate(const Globals& g, const std::string& path, bool report_all, std::ostream& out, std::ostream& err,
                 std::istream& in) {
  const LinkageDocument doc = load(g, path, in);
  const Verdict v = validate(doc.linkage, doc.configuration(), annotation_matrix(doc), ValidateOptions{report_all});
  json conditions = json::array();
  for (int k = 0; k < 4; ++k) {
    const ConditionReport& r = v.conditions[k];
    json witnesses = json::array();
    for (const Witness& w : r.witnesses) {
      witnesses.push_back({{"edges", w.edges},
                           {"location", w.location ? point_json(*w.location) : json(nullptr)},
                           {"detail", w.detail}});
    }
    conditions.push_back({{"name", condition_name(static_cast<Condition>(k))},
                          {"status", status_name(r.status)},
                          {"witnesses", std::move(witnesses)}});
  }
  emit(g, out, dump({{"command", "validate"}, {"input", path}, {"overall", v.overall}, {"conditions", conditions}}));
  if (v.overall) {
    err << "validate: pass\n";
    return kExitOk;
  }
  const Condition failed = *v.first_failure();
  const auto& ws = v.at(failed).witnesses;
  err << "validate: fail (" << condition_name(failed) << ")" << (ws.empty() ? "" : ": " + ws.front().detail) << "\n";
  return kExitFail;
}

int run_annotate(const Globals& g, const std::string& path, std::ostream& out, std::ostream& err, std::istream& in) {
  const LinkageDocument doc = load(g, path, in);
  const AnnotationMatrix a = annotate(doc.linkage, doc.placement);
  json entries = json::array();
  std::size_t nonzero = 0;
  for (EdgeId i = 0; i < a.size(); ++i) {
    for (EdgeId j = 0; j < a.size(); ++j) {
      if (i == j || a.at(i, j).is_zero()) continue;
      entries.push_back({{"i", i}, {"j", j}, {"value", a.at(i, j).to_string()}});
      ++nonzero;
    }
  }
  emit(g, out, dump({{"command", "annotate"}, {"input", path}, {"edges", a.size()}, {"annotations", entries}}));
  err << "annotate: " << nonzero << " nonzero entries over " << a.size() << " bars\n";
  return kExitOk;
}

int run_perturb(const Globals& g, const std::string& path, const std::string& delta_text, std::size_t sweep,
                const std::string& document_path, std::ostream& out, std::ostream& err, std::istream& in) {
  const LinkageDocument doc = load(g, path, in);
  const Rational delta = parse_cli_rational(delta_text, "--delta");
  const Configuration c = doc.configuration();
  const AnnotationMatrix a = annotation_matrix(doc);
  const Rational bound = delta_bound(doc.linkage, c);

  if (sweep > 0) {
    std::vector<Rational> deltas;
    Rational d = delta;
    for (std::size_t k = 0; k < sweep; ++k, d /= 4) deltas.push_back(d);
    const ProbeReport report = convergence_probe(doc.linkage, c, a, deltas);
    json steps = json::array();
    for (const ProbeStep& s : report.steps) {
      json pairs = json::array();
      for (const ProbePair& p : s.pairs) {
        pairs.push_back({{"i", p.i},
                         {"j", p.j},
                         {"value", p.value.to_string()},
                         {"value_approx", format_number(p.value.to_double(), 12)},
                         {"reference", p.reference.to_string()},
                         {"overlap", p.overlap.to_string()},
                         {"sign_agrees", p.sign_agrees}});
      }
      steps.push_back({{"requested_delta", to_string(s.requested_delta)},
                       {"delta", to_string(s.delta)},
                       {"signs_agree", s.signs_agree},
                       {"displacement_ok", s.displacement_ok},
                       {"drift_ok", s.drift_ok},
                       {"max_displacement", format_number(s.max_displacement, 12)},
                       {"max_drift", format_number(s.max_drift, 12)},
                       {"pairs", std::move(pairs)}});
    }
    emit(g, out, dump({{"command", "perturb"}, {"input", path}, {"delta_bound", to_string(bound)},
                       {"sweep", steps}, {"ok", report.ok()}}));
    err << "perturb: sweep of " << report.steps.size() << " radii " << (report.ok() ? "ok" : "FAILED") << "\n";
    return report.ok() ? kExitOk : kExitFail;
  }

  const PerturbationResult r = perturb(doc.linkage, c, a, delta);
  double max_disp = 0.0;
  for (VertexId f = 0; f < r.linkage.vertex_count(); ++f) {
    max_disp = std::max(max_disp, std::sqrt(to_double(squared_distance(
                                      r.configuration.placement[f], c.at(r.map.vertex_to_original[f])))));
  }
  double max_drift = 0.0;
  for (const Edge& e : r.linkage.edges()) {
    const double len = std::sqrt(to_double(squared_distance(r.configuration.at(e.tail), r.configuration.at(e.head))));
    max_drift = std::max(max_drift, std::abs(len - to_double(e.rest_length)));
  }
  json normals = json::array();
  for (const CorridorNormal& n : r.normals) {
    normals.push_back({{"direction", point_json(n.direction)}, {"unit_normal", point_json(n.unit)}});
  }
  emit(g, out,
       dump({{"command", "perturb"},
             {"input", path},
             {"requested_delta", to_string(r.requested_delta)},
             {"delta", to_string(r.delta)},
             {"delta_bound", to_string(bound)},
             {"retries", r.retries},
             {"slack", to_string(r.slack)},
             {"nontouching", r.nontouching},
             {"max_displacement", format_number(max_disp, 12)},
             {"max_drift", format_number(max_drift, 12)},
             {"vertices", r.linkage.vertex_count()},
             {"edges", r.linkage.edge_count()},
             {"corridor_normals", normals}}));
  if (!document_path.empty()) {
    LinkageDocument pd;
    pd.linkage = r.linkage;
    pd.placement = r.configuration.placement;
    pd.epsilon = r.slack;
    pd.extension_map = r.map;
    write_atomic(document_path, write_linkage_document(pd));
  }
  err << "perturb: delta " << to_string(r.delta) << ", " << r.linkage.vertex_count() << " vertices, nontouching "
      << (r.nontouching ? "yes" : "no") << "\n";
  return kExitOk;
}

int run_corridors(const Globals& g, const std::string& path, std::ostream& out, std::ostream& err, std::istream& in) {
  const LinkageDocument doc = load(g, path, in);
  const Configuration c = doc.configuration();
  std::vector<Corridor> list = corridors(doc.linkage, c);
  const AnnotationMatrix a = annotation_matrix(doc);
  const bool ordered = validate(doc.linkage, c, a).overall;
  json items = json::array();
  for (Corridor& corridor : list) {
    json segments = json::array();
    for (const CorridorSegment& s : corridor.segments) {
      segments.push_back({{"from", point_json(s.from)}, {"to", point_json(s.to)}, {"bars", s.bars}});
    }
    json item = {{"line", {{"a", corridor.a.get_str()}, {"b", corridor.b.get_str()}, {"c", to_string(corridor.c)}}},
                 {"direction", point_json(corridor.direction)},
                 {"bars", corridor.bars},
                 {"segments", segments}};
    if (ordered) {
      const CorridorOrder order = corridor_order(corridor, a);
      json psi = json::array();
      for (EdgeId e : order.order) psi.push_back({{"edge", e}, {"psi", order.psi.at(e)}});
      item["order"] = order.order;
      item["psi"] = psi;
    }
    items.push_back(std::move(item));
  }
  emit(g, out, dump({{"command", "corridors"}, {"input", path}, {"ordered", ordered}, {"corridors", items}}));
  err << "corridors: " << list.size() << (ordered ? "" : " (annotations do not validate; no orders)") << "\n";
  return kExitOk;
}

Turning parse_direction(const std::string& s) { return s == "cw" ? Turning::kCw : Turning::kCcw; }

CanonicalConfiguration canonical_for(const LinkageDocument& doc, Turning direction) {
  const ChainClass chain = classify_chain(doc.linkage);
  if (chain.kind == ChainKind::kOpen) return canonical_open(doc.linkage);
  if (chain.kind == ChainKind::kClosed) return canonical_closed(doc.linkage, direction);
  throw InputError("linkage is neither an open nor a closed chain");
}

json positions_json(const std::vector<PointD>& positions) {
  json list = json::array();
  for (const PointD& p : positions) list.push_back(point_json(p));
  return list;
}

int run_canonical(const Globals& g, const std::string& path, const std::string& direction,
                  const std::string& document_path, std::ostream& out, std::ostream& err, std::istream& in) {
  const LinkageDocument doc = load(g, path, in);
  const CanonicalConfiguration cc = canonical_for(doc, parse_direction(direction));
  emit(g, out,
       dump({{"command", "canonical"},
             {"input", path},
             {"chain", chain_kind_name(cc.chain.kind)},
             {"kind", canonical_kind_name(cc.kind)},
             {"radius", cc.radius ? json(format_number(*cc.radius, 12)) : json(nullptr)},
             {"direction", cc.direction ? json(turning_name(*cc.direction)) : json(nullptr)},
             {"tolerance", format_number(cc.tolerance, 12)},
             {"positions", positions_json(cc.positions)}}));
  if (!document_path.empty()) {
    LinkageDocument cd;
    cd.linkage = doc.linkage;
    cd.placement = cc.configuration().placement;
    if (!cc.exact) cd.epsilon = Rational(1, pow10(9));
    write_atomic(document_path, write_linkage_document(cd));
  }
  err << "canonical: " << canonical_kind_name(cc.kind);
  if (cc.radius) err << ", radius " << format_number(*cc.radius, 12);
  err << "\n";
  return kExitOk;
}

int run_interpolate(const Globals& g, const std::vector<std::string>& paths, double t, const std::string& direction,
                    std::ostream& out, std::ostream& err, std::istream& in) {
  const LinkageDocument a = load(g, paths.at(0), in);
  const LinkageDocument b = load(g, paths.at(1), in);
  if (!a.linkage.same_graph(b.linkage)) throw InputError("the two linkages have different graphs");
  const Turning dir = parse_direction(direction);
  const Interpolation r = convex_interpolate(canonical_for(a, dir), canonical_for(b, dir), t);
  emit(g, out,
       dump({{"command", "interpolate"},
             {"inputs", paths},
             {"t", format_number(t, 12)},
             {"convex", r.convex},
             {"positions", positions_json(r.positions)}}));
  err << "interpolate: convex position " << (r.convex ? "yes" : "no") << "\n";
  return kExitOk;
}

int run_emit(const Globals& g, const std::string& path, const std::string& epsilon_text, const std::string& kind,
             std::ostream& out, std::ostream& err, std::istream& in) {
  const LinkageDocument doc = load(g, path, in);
  const Rational epsilon =
      epsilon_text.empty() ? doc.epsilon.value_or(Rational(0)) : parse_cli_nonnegative(epsilon_text, "--epsilon");
  const ConstraintSystem s = kind == "conf" ? emit_conf(doc.linkage, epsilon) : emit_nconf(doc.linkage, epsilon);
  emit(g, out, serialize(s));
  err << "emit-sa: " << s.assertions.size() << " assertions over " << 2 * s.vertex_count << " variables\n";
  return kExitOk;
}

int run_slender(const Globals& g, const std::string& path, const std::string& mode, std::ostream& out,
                std::ostream& err, std::istream& in) {
  const LinkageDocument doc = load(g, path, in);
  if (doc.adornments.empty()) throw InputError("document has no adornments");
  const SlenderMode m = mode == "interior" ? SlenderMode::kInterior : SlenderMode::kClosure;
  json items = json::array();
  bool all = true;
  for (std::size_t k = 0; k < doc.adornments.size(); ++k) {
    const auto failing = first_non_slender_edge(doc.adornments[k], m);
    all = all && !failing;
    items.push_back({{"index", k},
                     {"strictly_slender", !failing},
                     {"failing_edge", failing ? json(*failing) : json(nullptr)}});
  }
  emit(g, out, dump({{"command", "slender-check"}, {"input", path}, {"mode", mode}, {"all", all}, {"adornments", items}}));
  err << "slender-check: " << (all ? "all strictly slender" : "not strictly slender") << "\n";
  return all ? kExitOk : kExitFail;
}

int run_render(const Globals& g, const std::string& path, const std::string& delta_text, bool labels,
               std::ostream& out, std::ostream& err, std::istream& in) {
  const LinkageDocument doc = load(g, path, in);
  SvgOptions options;
  options.display_delta = parse_cli_nonnegative(delta_text, "--display-delta");
  options.labels = labels;
  try {
    emit(g, out, render_svg(doc.linkage, doc.configuration(), annotation_matrix(doc), options));
  } catch (const ValidationError& e) {
    err << "render: " << e.what() << "\n";
    return kExitFail;
  }
  err << "render: ok\n";
  return kExitOk;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact tools for self-touching linkage configurations", "linkfold"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--strict", g.strict, "Reject unknown fields and non-string numbers");
  app.add_option("-o,--output", g.output, "Write the primary output to this file");

  std::string input;
  std::vector<std::string> inputs;
  bool report_all = false;
  std::string delta = "0";
  std::size_t sweep = 0;
  std::string document_path;
  std::string direction = "ccw";
  double t = 0.0;
  std::string epsilon;
  std::string kind = "nconf";
  std::string mode = "closure";
  bool labels = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check the four combinatorial conditions");
  validate_cmd->add_option("input", input, "Linkage document")->required();
  validate_cmd->add_flag("--report-all", report_all, "Collect every witness");

  auto* annotate_cmd = app.add_subcommand("annotate", "Order-function annotation of a configuration");
  annotate_cmd->add_option("input", input)->required();

  auto* perturb_cmd = app.add_subcommand("perturb", "Nontouching delta-perturbation");
  perturb_cmd->add_option("input", input)->required();
  perturb_cmd->add_option("--delta", delta, "Perturbation radius")->required();
  perturb_cmd->add_option("--sweep", sweep, "Run a convergence probe over delta, delta/4, ...");
  perturb_cmd->add_option("--document", document_path, "Write the perturbed linkage document");

  auto* corridors_cmd = app.add_subcommand("corridors", "Corridor decomposition and layer orders");
  corridors_cmd->add_option("input", input)->required();

  auto* canonical_cmd = app.add_subcommand("canonical", "Canonical configuration of a chain");
  canonical_cmd->add_option("input", input)->required();
  canonical_cmd->add_option("--direction", direction)->check(CLI::IsMember({"ccw", "cw"}));
  canonical_cmd->add_option("--document", document_path, "Write the canonical linkage document");

  auto* interpolate_cmd = app.add_subcommand("interpolate", "Interpolate two canonical configurations");
  interpolate_cmd->add_option("inputs", inputs)->required()->expected(2);
  interpolate_cmd->add_option("--t", t)->required()->check(CLI::Range(0.0, 1.0));
  interpolate_cmd->add_option("--direction", direction)->check(CLI::IsMember({"ccw", "cw"}));

  auto* emit_cmd = app.add_subcommand("emit-sa", "Emit the semialgebraic constraint system");
  emit_cmd->add_option("input", input)->required();
  emit_cmd->add_option("--epsilon", epsilon, "Length slack (default: the document's)");
  emit_cmd->add_option("--kind", kind)->check(CLI::IsMember({"conf", "nconf"}));

  auto* slender_cmd = app.add_subcommand("slender-check", "Strictly slender test for adornments");
  slender_cmd->add_option("input", input)->required();
  slender_cmd->add_option("--mode", mode)->check(CLI::IsMember({"closure", "interior"}));

  auto* render_cmd = app.add_subcommand("render", "SVG drawing");
  render_cmd->add_option("input", input)->required();
  render_cmd->add_option("--display-delta", delta, "Layer separation radius (0 draws raw coordinates)");
  render_cmd->add_flag("--labels", labels, "Label vertices");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(g, input, report_all, out, err, in);
    if (annotate_cmd->parsed()) return run_annotate(g, input, out, err, in);
    if (perturb_cmd->parsed()) return run_perturb(g, input, delta, sweep, document_path, out, err, in);
    if (corridors_cmd->parsed()) return run_corridors(g, input, out, err, in);
    if (canonical_cmd->parsed()) return run_canonical(g, input, direction, document_path, out, err, in);
    if (interpolate_cmd->parsed()) return run_interpolate(g, inputs, t, direction, out, err, in);
    if (emit_cmd->parsed()) return run_emit(g, input, epsilon, kind, out, err, in);
    if (slender_cmd->parsed()) return run_slender(g, input, mode, out, err, in);
    if (render_cmd->parsed()) return run_render(g, input, delta, labels, out, err, in);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace linkfold
