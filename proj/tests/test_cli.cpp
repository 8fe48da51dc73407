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

#include <filesystem>

#include "cli_cases.hpp"
#include "doctest.h"
#include "linkfold/cli.hpp"
#include "linkfold/document.hpp"
#include "linkfold/linkage.hpp"

using namespace linkfold;
using namespace linkfold::testing;

namespace fs = std::filesystem;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden cases") {
  for (const CliCase& c : cli_cases()) {
    const GoldenCheck r = check_cli_case(c);
    INFO(r.message);
    CHECK(r.ok);
  }
}

TEST_CASE("every subcommand has pass and error cases") {
  for (const char* sub : {"validate", "annotate", "perturb", "corridors", "canonical", "interpolate", "emit-sa",
                          "slender-check", "render"}) {
    bool ok = false, error = false;
    for (const CliCase& c : cli_cases()) {
      if (c.args.empty()) continue;
      const bool mine = c.args[0] == sub || (c.args.size() > 1 && c.args[0] == "--strict" && c.args[1] == sub);
      if (!mine) continue;
      ok |= c.code == kExitOk && !c.golden.empty();
      error |= c.code == kExitError || c.code == kExitUsage;
    }
    CAPTURE(sub);
    CHECK(ok);
    CHECK(error);
  }
}

TEST_CASE("help") {
  const CliRun r = run_cli({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("validate") != std::string::npos);
  CHECK(run_cli({"render", "--help"}).code == kExitOk);
}

TEST_CASE("render draws the layers apart") {
  const CliRun r = run_cli({"render", "doubled_chain.json", "--display-delta", "1/20"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  CHECK(count(r.out, "<path ") == 2);
  CHECK(r.out == run_cli({"render", "doubled_chain.json", "--display-delta", "1/20"}).out);
}

TEST_CASE("reports are sorted json") {
  const CliRun r = run_cli({"validate", "doubled_chain.json"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.back() == '\n');
  CHECK(r.out.find("\"command\": \"validate\"") != std::string::npos);
  CHECK(r.out.find("\"input\": \"doubled_chain.json\"") != std::string::npos);
}

TEST_CASE("stdin input") {
  const std::string text = read_file(data_dir() / "doubled_chain.json");
  const CliRun piped = run_cli({"validate", "-"}, text);
  CHECK(piped.code == kExitOk);
  const CliRun r = run_cli({"emit-sa", "-", "--epsilon", "0"}, text);
  CHECK(r.code == kExitOk);
  CHECK(r.out == run_cli({"emit-sa", "doubled_chain.json", "--epsilon", "0"}).out);
}

TEST_CASE("output files") {
  const fs::path dir = fs::temp_directory_path() / "linkfold_cli_test";
  fs::create_directories(dir);
  const fs::path svg = dir / "out.svg";
  fs::remove(svg);
  const CliRun r = run_cli({"-o", svg.string(), "render", "doubled_chain.json", "--display-delta", "1/20"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(read_file(svg) == run_cli({"render", "doubled_chain.json", "--display-delta", "1/20"}).out);
  for (const auto& entry : fs::directory_iterator(dir)) CHECK(entry.path() == svg);

  // perturbed document reduces to the input and validates as nontouching
  const fs::path perturbed = dir / "perturbed.json";
  CHECK(run_cli({"perturb", "doubled_chain.json", "--delta", "1/10", "--document", perturbed.string()}).code ==
        kExitOk);
  const LinkageDocument doc = parse_linkage_document(read_file(perturbed), true);
  REQUIRE(doc.extension_map.has_value());
  CHECK(doc.extension_map->original_edge_count == 2);
  CHECK(is_nontouching(doc.linkage, doc.configuration()));
  CHECK(run_cli({"render", perturbed.string()}).code == kExitOk);

  const fs::path canonical = dir / "canonical.json";
  CHECK(run_cli({"canonical", "triangle_211.json", "--document", canonical.string()}).code == kExitOk);
  const LinkageDocument flat = parse_linkage_document(read_file(canonical), true);
  CHECK(flat.placement.size() == 3);
  fs::remove_all(dir);
}

TEST_CASE("output is independent of the working directory") {
  const CliRun here = run_cli({"emit-sa", "doubled_chain.json", "--epsilon", "0"});
  const CliRun abs = run_cli({"emit-sa", (data_dir() / "doubled_chain.json").string(), "--epsilon", "0"});
  CHECK(here.out == abs.out);
}

}
