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

#include <Eigen/Dense>

#include "nogo/core/tolerance.h"
#include "nogo/sampler/seeded_rng.h"

namespace nogo {

/// Right-handed orthonormal frame of R^3. Column k of matrix() is frame
/// vector k, so matrix() is the rotation taking the standard basis to the
/// frame.
class Frame3 {
 public:
  /// Throws std::invalid_argument unless R^T R = I and det R = +1 within `tol`.
  static Frame3 create(const Eigen::Matrix3d& r, double tol = kStructuralTol);
  static Frame3 identity() { return Frame3(Eigen::Matrix3d::Identity()); }
  static Frame3 from_columns(const Eigen::Vector3d& x, const Eigen::Vector3d& y,
                             const Eigen::Vector3d& z, double tol = kStructuralTol);
  /// R = Rz(alpha) Ry(beta) Rz(gamma), angles in radians.
  static Frame3 from_euler_zyz(double alpha, double beta, double gamma);

  const Eigen::Matrix3d& matrix() const noexcept { return r_; }
  Eigen::Vector3d column(int k) const { return r_.col(k); }

 private:
  explicit Frame3(Eigen::Matrix3d r) : r_(std::move(r)) {}
  Eigen::Matrix3d r_;
};

/// The frame that keeps x and turns the (y, z) plane by theta:
/// [[1,0,0],[0,cos,sin],[0,-sin,cos]].
Frame3 rotation_about_x(double theta);

/// Gram-Schmidt of a random 3x3 with entries uniform in [-1, 1), with the
/// last column flipped when needed to make det = +1.
Frame3 random_frame(SeededRng& rng);

}  // namespace nogo
