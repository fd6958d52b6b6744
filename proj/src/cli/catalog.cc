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

#include "nogo/cli/catalog.h"

#include <algorithm>

namespace nogo::cli {

const std::vector<ExperimentInfo>& list_experiments() {
  static const std::vector<ExperimentInfo> catalog = {
      {"ks-color",
       "Real 3D color-sphere model: 3-measurement in a frame, a 1-measurement filter and "
       "three independent yes/no questions.",
       100000,
       {{"state", "4/9,4/9,7/9", "color vector r,g,b (normalized before use)"},
        {"filter", "1/3,2/3,2/3", "filter color for the 1-measurement (normalized before use)"},
        {"frame", "identity", "measurement frame: identity or zyz:ALPHA,BETA,GAMMA in degrees"}}},
      {"ks-spin1-order",
       "Sequential P-measurements of J_x^2, J_y^2, J_z^2 on a spin-1 state in every order.",
       100000,
       {{"state", "1/2,1/2,0.70710678118654752", "real amplitudes k1,k2,k3 (normalized before use)"},
        {"order", "all", "measurement order such as xyz, or all to cycle through the six orders"},
        {"theta", "30", "angle in degrees of the x-preserving frame used for the p(J_x^2=0) check"}}},
      {"bell-chsh",
       "CHSH correlators of the two-qubit singlet; one axis pair per trial, round robin.",
       100000,
       {{"angles", "0,45,90,135", "azimuths of axes a,b,c,d in degrees"},
        {"polar", "90,90,90,90", "polar angles of axes a,b,c,d in degrees (90 = equator)"},
        {"mode", "simultaneous", "simultaneous, left-then-right or right-then-left"}}},
      {"bell-original",
       "Original Bell inequality |E(a,b)-E(a,c)| <= 1-E(b,c) on the singlet.",
       100000,
       {{"angles", "0,135,270", "azimuths of axes a,b,c in degrees"},
        {"polar", "90,90,90", "polar angles of axes a,b,c in degrees (90 = equator)"},
        {"mode", "simultaneous", "simultaneous, left-then-right or right-then-left"}}},
      {"ck-singlet",
       "Two spin-1 singlet: side I measures the full frame (K), side II one J^2 axis.",
       10000,
       {{"axis", "x", "axis measured by side II: x, y or z"},
        {"frame", "identity", "shared frame: identity or zyz:ALPHA,BETA,GAMMA in degrees"}}},
      {"ck-classical",
       "Classical counter-model: two programs share the roulette variate r.",
       100000,
       {{"frame_one", "x,y,z", "slot order of side I"},
        {"frame_two", "y,x,z", "slot order of side II"},
        {"axis", "y", "axis whose J^2 value both sides report"}}},
      {"dht",
       "Ancilla-carried measurement of a Bell pair with local reunion.",
       10000,
       {{"variant", "swap", "measurement or swap"}}},
  };
  return catalog;
}

const ExperimentInfo* find_experiment(std::string_view name) {
  const auto& catalog = list_experiments();
  const auto it = std::find_if(catalog.begin(), catalog.end(),
                               [name](const ExperimentInfo& e) { return e.name == name; });
  return it == catalog.end() ? nullptr : &*it;
}

}  // namespace nogo::cli
