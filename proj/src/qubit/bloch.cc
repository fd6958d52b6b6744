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

#include "nogo/qubit/bloch.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nogo/core/gates.h"

namespace nogo {

namespace {

constexpr double kEquatorTol = 1e-12;

}  // namespace

BlochVector BlochVector::create(double x, double y, double z, double tol) {
  const double n2 = x * x + y * y + z * z;
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol) {
    throw std::invalid_argument("Bloch vector is not a unit vector (norm^2 = " +
                                std::to_string(n2) + ")");
  }
  return BlochVector(Eigen::Vector3d(x, y, z));
}

BlochVector BlochVector::equatorial(double phi) {
  return BlochVector(Eigen::Vector3d(std::cos(phi), std::sin(phi), 0.0));
}

BlochVector BlochVector::spherical(double theta, double phi) {
  const double s = std::sin(theta);
  return BlochVector(Eigen::Vector3d(s * std::cos(phi), s * std::sin(phi), std::cos(theta)));
}

Complex ExtendedComplex::value() const {
  if (infinite_) {
    throw std::logic_error("point at infinity has no finite value");
  }
  return z_;
}

BlochVector bloch_from_state(const StateVector& psi) {
  if (psi.size() != 2) {
    throw std::invalid_argument("bloch_from_state expects a single qubit");
  }
  const Complex alpha = psi[0];
  const Complex beta = psi[1];
  const Complex ab = alpha * std::conj(beta);
  return BlochVector::create(2.0 * ab.real(), -2.0 * ab.imag(), std::norm(alpha) - std::norm(beta));
}

StateVector state_from_bloch(const BlochVector& a) {
  return state_from_bloch(a, a.z() >= 0.0 ? BlochChart::upper : BlochChart::lower);
}

StateVector state_from_bloch(const BlochVector& a, BlochChart chart) {
  if (chart == BlochChart::upper) {
    const double w = 1.0 + a.z();
    if (!(w > 0.0)) {
      throw std::domain_error("upper chart is undefined at the south pole");
    }
    const double scale = 1.0 / std::sqrt(2.0 * w);
    return StateVector::from_values({2}, {scale * w, scale * Complex(a.x(), a.y())});
  }
  const double w = 1.0 - a.z();
  if (!(w > 0.0)) {
    throw std::domain_error("lower chart is undefined at the north pole");
  }
  const double scale = 1.0 / std::sqrt(2.0 * w);
  return StateVector::from_values({2}, {scale * Complex(a.x(), -a.y()), scale * w});
}

StateVector equator_state(const BlochVector& a) {
  if (std::abs(a.z()) > kEquatorTol) {
    throw std::invalid_argument("equator_state requires a_z = 0");
  }
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector::from_values({2}, {s, s * Complex(a.x(), a.y())});
}

ExtendedComplex stereographic(const BlochVector& a) {
  const double rho2 = a.x() * a.x() + a.y() * a.y();
  if (a.z() > 0.0) {
    if (rho2 == 0.0) {
      return ExtendedComplex::infinity();
    }
    // 1 - a_z = rho^2 / (1 + a_z) avoids cancellation near the north pole.
    return ExtendedComplex::finite(Complex(a.x(), -a.y()) * ((1.0 + a.z()) / rho2));
  }
  return ExtendedComplex::finite(Complex(a.x(), -a.y()) / (1.0 - a.z()));
}

BlochVector inverse_stereographic(const ExtendedComplex& zeta) {
  if (zeta.is_infinite()) {
    return BlochVector::create(0.0, 0.0, 1.0);
  }
  const Complex z = zeta.value();
  const double m2 = std::norm(z);
  if (m2 <= 1.0) {
    const double d = m2 + 1.0;
    return BlochVector::create(2.0 * z.real() / d, -2.0 * z.imag() / d, (m2 - 1.0) / d);
  }
  // Large |zeta|: rewrite in w = 1/zeta to stay finite.
  const Complex w = 1.0 / z;
  const double w2 = std::norm(w);
  const double d = 1.0 + w2;
  return BlochVector::create(2.0 * w.real() / d, 2.0 * w.imag() / d, (1.0 - w2) / d);
}

Operator axis_projector(const BlochVector& a) {
  const Operator sum = Operator::identity(2) + Complex{a.x()} * pauli(Axis::x) +
                       Complex{a.y()} * pauli(Axis::y) + Complex{a.z()} * pauli(Axis::z);
  return Complex{0.5} * sum;
}

Operator axis_density(const BlochVector& a) { return density(state_from_bloch(a)); }

double overlap_prob(const BlochVector& a, const BlochVector& b) { return 0.5 * (1.0 + a.dot(b)); }

}  // namespace nogo
