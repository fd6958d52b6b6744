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

#include <array>

#include <Eigen/Dense>

#include "nogo/core/tolerance.h"
#include "nogo/spin1/frame3.h"

namespace nogo {

/// A "color" (r, g, b): a real unit 3-vector.
class ColorState {
 public:
  /// Throws std::invalid_argument unless r^2 + g^2 + b^2 = 1 within `tol`.
  static ColorState create(double r, double g, double b, double tol = kStructuralTol);

  const Eigen::Vector3d& vec() const noexcept { return v_; }

 private:
  explicit ColorState(Eigen::Vector3d v) : v_(std::move(v)) {}
  Eigen::Vector3d v_;
};

/// (4/9, 4/9, 7/9).
ColorState rich_blue();
/// (1/3, 2/3, 2/3).
ColorState cadet_blue();

/// Probability that the filter `f` answers yes: <s, f>^2.
double ks_filter_prob(const ColorState& s, const ColorState& f);

/// Outcome probabilities of a 3-measurement in `frame`: squared projections
/// onto its three vectors.
std::array<double, 3> ks_frame_probs(const ColorState& s, const Frame3& frame);

/// Distribution of the number of "yes" answers (0..3) when the three frame
/// questions are asked independently with probabilities p1, p2, p3.
std::array<double, 4> ks_independent_yes(double p1, double p2, double p3);

}  // namespace nogo
