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

#include "nogo/experiments/ks_color.h"

#include <cmath>
#include <stdexcept>

namespace nogo {

ColorState ColorState::create(double r, double g, double b, double tol) {
  const double n2 = r * r + g * g + b * b;
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol) {
    throw std::invalid_argument("color must be a unit vector");
  }
  return ColorState(Eigen::Vector3d(r, g, b));
}

ColorState rich_blue() { return ColorState::create(4.0 / 9.0, 4.0 / 9.0, 7.0 / 9.0); }

ColorState cadet_blue() { return ColorState::create(1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0); }

double ks_filter_prob(const ColorState& s, const ColorState& f) {
  const double d = s.vec().dot(f.vec());
  return d * d;
}

std::array<double, 3> ks_frame_probs(const ColorState& s, const Frame3& frame) {
  std::array<double, 3> p{};
  for (int k = 0; k < 3; ++k) {
    const double d = s.vec().dot(frame.column(k));
    p[static_cast<std::size_t>(k)] = d * d;
  }
  return p;
}

std::array<double, 4> ks_independent_yes(double p1, double p2, double p3) {
  for (double p : {p1, p2, p3}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("probabilities must lie in [0, 1]");
    }
  }
  const double q1 = 1.0 - p1;
  const double q2 = 1.0 - p2;
  const double q3 = 1.0 - p3;
  return {q1 * q2 * q3,
          p1 * q2 * q3 + q1 * p2 * q3 + q1 * q2 * p3,
          p1 * p2 * q3 + q1 * p2 * p3 + p1 * q2 * p3,
          p1 * p2 * p3};
}

}  // namespace nogo
