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

#include <complex>

#include <Eigen/Dense>

#include "nogo/core/operator.h"
#include "nogo/core/state_vector.h"
#include "nogo/core/tolerance.h"

namespace nogo {

/// Unit vector on the Bloch sphere.
class BlochVector {
 public:
  /// Throws std::invalid_argument unless x^2 + y^2 + z^2 = 1 within `tol`.
  static BlochVector create(double x, double y, double z, double tol = kStructuralTol);
  static BlochVector create(const Eigen::Vector3d& v, double tol = kStructuralTol) {
    return create(v.x(), v.y(), v.z(), tol);
  }
  /// Point on the equator at azimuth `phi` (radians): (cos phi, sin phi, 0).
  static BlochVector equatorial(double phi);
  /// Point with polar angle `theta` from +z and azimuth `phi` (radians).
  static BlochVector spherical(double theta, double phi);

  double x() const noexcept { return v_.x(); }
  double y() const noexcept { return v_.y(); }
  double z() const noexcept { return v_.z(); }
  const Eigen::Vector3d& vec() const noexcept { return v_; }

  double dot(const BlochVector& other) const { return v_.dot(other.v_); }
  BlochVector operator-() const { return BlochVector(-v_); }

 private:
  explicit BlochVector(Eigen::Vector3d v) : v_(std::move(v)) {}
  Eigen::Vector3d v_;
};

/// A point of the extended complex plane: finite, or the point at infinity.
class ExtendedComplex {
 public:
  static ExtendedComplex finite(Complex z) { return ExtendedComplex(false, z); }
  static ExtendedComplex infinity() { return ExtendedComplex(true, {}); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws std::logic_error at infinity.
  Complex value() const;

 private:
  ExtendedComplex(bool infinite, Complex z) : infinite_(infinite), z_(z) {}
  bool infinite_;
  Complex z_;
};

/// a_x = 2 Re(alpha conj(beta)), a_y = -2 Im(alpha conj(beta)),
/// a_z = |alpha|^2 - |beta|^2. Independent of the global phase.
BlochVector bloch_from_state(const StateVector& psi);

enum class BlochChart { upper, lower };

/// Two-hemisphere atlas: the upper chart for a_z >= 0, the lower otherwise.
StateVector state_from_bloch(const BlochVector& a);

/// Evaluates one chart explicitly. The upper chart is undefined at a_z = -1,
/// the lower one at a_z = +1; both throw std::domain_error there.
StateVector state_from_bloch(const BlochVector& a, BlochChart chart);

/// (|0> + (a_x + i a_y)|1>)/sqrt(2). Requires |a_z| <= 1e-12.
StateVector equator_state(const BlochVector& a);

/// zeta = (a_x - i a_y)/(1 - a_z); the north pole maps to infinity.
ExtendedComplex stereographic(const BlochVector& a);
BlochVector inverse_stereographic(const ExtendedComplex& zeta);

/// (I + a . sigma)/2.
Operator axis_projector(const BlochVector& a);

/// |psi_a><psi_a| built from the state; equals axis_projector(a).
Operator axis_density(const BlochVector& a);

/// (1 + a . b)/2.
double overlap_prob(const BlochVector& a, const BlochVector& b);

}  // namespace nogo
