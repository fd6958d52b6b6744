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

#include <string_view>

#include "nogo/core/operator.h"

namespace nogo {

enum class Axis { x = 0, y = 1, z = 2 };

char axis_name(Axis axis);
/// Accepts "x", "y" or "z". Throws std::invalid_argument otherwise.
Axis parse_axis(std::string_view text);

/// Pauli matrix sigma_axis.
Operator pauli(Axis axis);

/// Non-perturbing measurement gate |a>|b> -> |a xor b>|b>, i.e.
/// I (x) P0 + sigma_x (x) P1. The first factor is the ancilla.
Operator measurement_gate();

/// Swap gate |a>|b> -> |b>|a> as a permutation matrix.
Operator swap_gate();

/// The same gate assembled as (I(x)I + sum_nu sigma_nu (x) sigma_nu) / 2.
Operator swap_gate_from_paulis();

}  // namespace nogo
