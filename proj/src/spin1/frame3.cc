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

#include "nogo/spin1/frame3.h"

#include <cmath>
#include <stdexcept>

namespace nogo {

Frame3 Frame3::create(const Eigen::Matrix3d& r, double tol) {
  if ((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("frame matrix is not orthogonal");
  }
  if (std::abs(r.determinant() - 1.0) > tol) {
    throw std::invalid_argument("frame must be right-handed (det = +1)");
  }
  return Frame3(r);
}

Frame3 Frame3::from_columns(const Eigen::Vector3d& x, const Eigen::Vector3d& y,
                            const Eigen::Vector3d& z, double tol) {
  Eigen::Matrix3d r;
  r.col(0) = x;
  r.col(1) = y;
  r.col(2) = z;
  return create(r, tol);
}

Frame3 Frame3::from_euler_zyz(double alpha, double beta, double gamma) {
  const Eigen::Matrix3d r = (Eigen::AngleAxisd(alpha, Eigen::Vector3d::UnitZ()) *
                             Eigen::AngleAxisd(beta, Eigen::Vector3d::UnitY()) *
                             Eigen::AngleAxisd(gamma, Eigen::Vector3d::UnitZ()))
                                .toRotationMatrix();
  return create(r);
}

Frame3 rotation_about_x(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix3d r;
  r << 1.0, 0.0, 0.0,
       0.0, c, s,
       0.0, -s, c;
  return Frame3::create(r);
}

Frame3 random_frame(SeededRng& rng) {
  for (;;) {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        m(i, j) = 2.0 * rng.uniform() - 1.0;
      }
    }
    Eigen::Vector3d x = m.col(0);
    if (x.norm() < 1e-3) continue;
    x.normalize();
    Eigen::Vector3d y = m.col(1) - x.dot(m.col(1)) * x;
    if (y.norm() < 1e-3) continue;
    y.normalize();
    Eigen::Vector3d z = m.col(2) - x.dot(m.col(2)) * x - y.dot(m.col(2)) * y;
    if (z.norm() < 1e-3) continue;
    z.normalize();
    if (x.cross(y).dot(z) < 0.0) {
      z = -z;
    }
    return Frame3::from_columns(x, y, z);
  }
}

}  // namespace nogo
