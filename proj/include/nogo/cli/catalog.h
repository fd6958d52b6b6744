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
#include <string>
#include <string_view>
#include <vector>

namespace nogo::cli {

struct ParamSpec {
  std::string name;
  std::string default_value;
  std::string description;
};

struct ExperimentInfo {
  std::string name;
  std::string description;
  std::uint64_t default_trials;
  std::vector<ParamSpec> params;
};

/// The seven runnable experiments. Names are part of the CLI contract:
/// ks-color, ks-spin1-order, bell-chsh, bell-original, ck-singlet,
/// ck-classical, dht.
const std::vector<ExperimentInfo>& list_experiments();

/// nullptr when no experiment has this name.
const ExperimentInfo* find_experiment(std::string_view name);

}  // namespace nogo::cli
