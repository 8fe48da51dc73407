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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "linkfold/adornment.hpp"
#include "linkfold/chain.hpp"
#include "linkfold/cli.hpp"
#include "linkfold/corridor.hpp"
#include "linkfold/document.hpp"
#include "linkfold/semialgebraic.hpp"
#include "linkfold/svg.hpp"
#include "linkfold/validator.hpp"

namespace py = pybind11;
using namespace linkfold;

namespace {

std::tuple<int, std::string, std::string> run_cli(const std::vector<std::string>& args, const std::string& stdin_text) {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(stdin_text);
  const int code = cli_dispatch(args, out, err, in);
  return {code, out.str(), err.str()};
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["overall"] = v.overall;
  py::dict conditions;
  for (int k = 0; k < 4; ++k) {
    const ConditionReport& r = v.conditions[k];
    py::list witnesses;
    for (const Witness& w : r.witnesses) {
      py::dict wd;
      wd["edges"] = w.edges;
      wd["detail"] = w.detail;
      wd["location"] = w.location ? py::object(py::make_tuple(to_string(w.location->x), to_string(w.location->y)))
                                  : py::object(py::none());
      witnesses.append(wd);
    }
    py::dict cd;
    cd["status"] = r.status == Status::kPassed ? "passed" : r.status == Status::kFailed ? "failed" : "skipped";
    cd["witnesses"] = witnesses;
    conditions[condition_name(static_cast<Condition>(k))] = cd;
  }
  d["conditions"] = conditions;
  return d;
}

}  // namespace

PYBIND11_MODULE(_linkfold, m) {
  m.doc() = "Exact tools for self-touching linkage configurations";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("run_cli", &run_cli, py::arg("args"), py::arg("stdin") = "",
        "Run a linkfold command; returns (exit_code, stdout, stderr).");

  m.def("validate", [](const std::string& text, bool report_all, bool strict) {
    const LinkageDocument doc = parse_linkage_document(text, strict);
    return verdict_dict(validate(doc.linkage, doc.configuration(), annotation_matrix(doc), ValidateOptions{report_all}));
  }, py::arg("document"), py::arg("report_all") = false, py::arg("strict") = false);

  m.def("annotate", [](const std::string& text) {
    const LinkageDocument doc = parse_linkage_document(text);
    const AnnotationMatrix a = annotate(doc.linkage, doc.placement);
    std::vector<std::vector<std::string>> rows(a.size(), std::vector<std::string>(a.size()));
    for (EdgeId i = 0; i < a.size(); ++i) {
      for (EdgeId j = 0; j < a.size(); ++j) rows[i][j] = a.at(i, j).to_string();
    }
    return rows;
  }, py::arg("document"), "Ord matrix as surd strings.");

  m.def("delta_bound", [](const std::string& text) {
    const LinkageDocument doc = parse_linkage_document(text);
    return to_string(delta_bound(doc.linkage, doc.configuration()));
  }, py::arg("document"));

  m.def("perturb", [](const std::string& text, const std::string& delta) {
    const LinkageDocument doc = parse_linkage_document(text);
    const PerturbationResult r = perturb(doc.linkage, doc.configuration(), annotation_matrix(doc), parse_rational(delta));
    LinkageDocument out;
    out.linkage = r.linkage;
    out.placement = r.configuration.placement;
    out.epsilon = r.slack;
    out.extension_map = r.map;
    return py::make_tuple(write_linkage_document(out), to_string(r.delta), r.nontouching);
  }, py::arg("document"), py::arg("delta"), "Returns (document, delta used, nontouching).");

  m.def("is_nontouching", [](const std::string& text) {
    const LinkageDocument doc = parse_linkage_document(text);
    return is_nontouching(doc.linkage, doc.configuration());
  }, py::arg("document"));

  m.def("emit_sa", [](const std::string& text, const std::string& epsilon, const std::string& kind) {
    const LinkageDocument doc = parse_linkage_document(text);
    const Rational eps = parse_rational(epsilon);
    return serialize(kind == "conf" ? emit_conf(doc.linkage, eps) : emit_nconf(doc.linkage, eps));
  }, py::arg("document"), py::arg("epsilon") = "0", py::arg("kind") = "nconf");

  m.def("strictly_slender", [](const std::string& text, const std::string& mode) {
    const LinkageDocument doc = parse_linkage_document(text);
    std::vector<bool> out;
    for (const Adornment& a : doc.adornments) {
      out.push_back(is_strictly_slender(a, mode == "interior" ? SlenderMode::kInterior : SlenderMode::kClosure));
    }
    return out;
  }, py::arg("document"), py::arg("mode") = "closure");

  m.def("render_svg", [](const std::string& text, const std::string& display_delta, bool labels) {
    const LinkageDocument doc = parse_linkage_document(text);
    SvgOptions options;
    options.display_delta = parse_rational(display_delta);
    options.labels = labels;
    return render_svg(doc.linkage, doc.configuration(), annotation_matrix(doc), options);
  }, py::arg("document"), py::arg("display_delta") = "0", py::arg("labels") = false);

  m.def("cyclic_circumradius", &cyclic_circumradius, py::arg("lengths"));
}
