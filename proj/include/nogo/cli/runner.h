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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nogo/experiments/report.h"

namespace nogo::cli {

enum class OutputFormat { json, csv };

struct RunConfig {
  std::string experiment;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> trials;  // catalog default when unset
  std::vector<std::pair<std::string, std::string>> params;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out_path;  // stdout when unset
  bool timing = false;
};

enum ExitCode : int {
  kExitPass = 0,
  kExitTestFailed = 1,
  kExitInvalidParams = 2,
  kExitUnknownExperiment = 3,
  kExitIoFailure = 4,
};

struct UnknownExperimentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decimal or fraction ("4/9"). Throws InvalidParameterError.
double parse_number(const std::string& text);

/// Comma-separated numbers; exactly `count` of them unless count is 0.
std::vector<double> parse_number_list(const std::string& text, std::size_t count = 0);

/// Runs the experiment and its test battery. Deterministic in
/// (experiment, seed, trials, params). Throws UnknownExperimentError or
/// InvalidParameterError before any trial is sampled.
ExperimentReport run(const RunConfig& config);

/// Runs, serializes and writes the report. Returns an ExitCode; error
/// messages go to `err`.
int run_and_write(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nogo::cli
