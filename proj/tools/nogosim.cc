// Copyright 2026 The nogosim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nogo/cli/catalog.h"
#include "nogo/cli/runner.h"
#include "nogo/cli/serialize.h"

int main(int argc, char** argv) {
  using namespace nogo::cli;

  CLI::App app{"Seeded simulations of quantum no-go constructions."};
  RunConfig config;
  std::uint64_t trials = 0;
  std::string format = "json";
  std::string out_path;
  std::vector<std::string> params;
  bool list = false;

  app.add_option("--experiment", config.experiment, "experiment name (see --list)");
  app.add_option("--seed", config.seed, "64-bit master seed")->default_val(0);
  app.add_option("--trials", trials, "trial count (experiment default when omitted)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
  app.add_option("--out", out_path, "report path (stdout when omitted)");
  app.add_option("--param", params, "experiment parameter KEY=VALUE (repeatable)")
      ->allow_extra_args(false);
  app.add_flag("--list", list, "print the experiment catalog and exit");
  app.add_flag("--timing", config.timing, "record runtime_ms in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalidParams;
  }

  if (list) {
    std::cout << catalog_json();
    return kExitPass;
  }
  if (config.experiment.empty()) {
    std::cerr << "error: --experiment is required (or --list)\n";
    return kExitInvalidParams;
  }
  if (app.count("--trials") != 0) {
    config.trials = trials;
  }
  config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  if (!out_path.empty()) {
    config.out_path = out_path;
  }
  for (const std::string& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: --param expects KEY=VALUE, got '" << p << "'\n";
      return kExitInvalidParams;
    }
    config.params.emplace_back(p.substr(0, eq), p.substr(eq + 1));
  }
  return run_and_write(config, std::cout, std::cerr);
}
