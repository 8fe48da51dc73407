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

#include <filesystem>
#include <string>
#include <vector>

namespace linkfold::testing {

struct CliCase {
  std::string name;
  std::vector<std::string> args;
  int code = 0;
  /// Extension of the stdout golden under tests/golden, empty for none.
  std::string golden;
};

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

const std::vector<CliCase>& cli_cases();

std::filesystem::path data_dir();
std::filesystem::path golden_dir();
std::filesystem::path golden_path(const CliCase& c);

/// Runs the command in-process with tests/data as the working directory.
CliRun run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "");

std::string read_file(const std::filesystem::path& path);

struct GoldenCheck {
  bool ok = false;
  std::string message;
};

/// Runs a case twice, compares exit code, byte stability and golden. With
/// LINKFOLD_UPDATE_GOLDEN set, rewrites the golden instead.
GoldenCheck check_cli_case(const CliCase& c);

}  // namespace linkfold::testing
