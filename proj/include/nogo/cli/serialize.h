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

#include <optional>
#include <string>

#include "nogo/experiments/report.h"

namespace nogo::cli {

inline constexpr const char* kVersion = "0.1.0";

/// %.17g; "null" for non-finite values.
std::string format_number(double value);

/// Report as JSON with keys experiment, seed, trials, parameters, analytic,
/// empirical, tests, runtime_ms, version. runtime_ms is null unless given.
std::string to_json(const ExperimentReport& report, std::optional<double> runtime_ms = std::nullopt);

/// "label,analytic,empirical" rows, one per outcome label.
std::string to_csv(const ExperimentReport& report);

/// The experiment catalog with parameter schemas, as JSON.
std::string catalog_json();

}  // namespace nogo::cli
