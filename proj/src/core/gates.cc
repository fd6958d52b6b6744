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

#include "nogo/core/gates.h"

#include <stdexcept>
#include <string>

namespace nogo {

char axis_name(Axis axis) {
  switch (axis) {
    case Axis::x:
      return 'x';
    case Axis::y:
      return 'y';
    case Axis::z:
      return 'z';
  }
  throw std::invalid_argument("bad axis");
}

Axis parse_axis(std::string_view text) {
  if (text == "x") return Axis::x;
  if (text == "y") return Axis::y;
  if (text == "z") return Axis::z;
  throw std::invalid_argument("unknown axis '" + std::string(text) + "' (expected x, y or z)");
}

Operator pauli(Axis axis) {
  constexpr Complex i{0.0, 1.0};
  switch (axis) {
    case Axis::x:
      return Operator::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case Axis::y:
      return Operator::from_rows({{0.0, -i}, {i, 0.0}});
    case Axis::z:
      return Operator::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  }
  throw std::invalid_argument("bad axis");
}

Operator measurement_gate() {
  const Operator p0 = Operator::from_rows({{1.0, 0.0}, {0.0, 0.0}});
  const Operator p1 = Operator::from_rows({{0.0, 0.0}, {0.0, 1.0}});
  return kron(Operator::identity(2), p0) + kron(pauli(Axis::x), p1);
}

Operator swap_gate() {
  return Operator::from_rows({
      {1.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 1.0, 0.0},
      {0.0, 1.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 1.0},
  });
}

Operator swap_gate_from_paulis() {
  Operator sum = kron(Operator::identity(2), Operator::identity(2));
  for (Axis nu : {Axis::x, Axis::y, Axis::z}) {
    sum = sum + kron(pauli(nu), pauli(nu));
  }
  return Complex{0.5} * sum;
}

}  // namespace nogo
