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
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nogo/core/tolerance.h"

namespace nogo {

using Complex = std::complex<double>;
using Dims = std::vector<std::size_t>;

/// Product of subsystem dimensions. Throws on an empty list or a zero entry.
std::size_t total_dim(const Dims& dims);

/// A normalized pure state over a tensor product of subsystems.
///
/// Subsystem 0 is the most significant factor of the flat amplitude index
/// (big-endian): for dims (2,2) the amplitude of |a>|b> is at 2*a + b.
/// Values are immutable once built.
class StateVector {
 public:
  /// Rejects amplitudes whose norm differs from 1 by more than `tol`.
  static StateVector from_amplitudes(Dims dims, Eigen::VectorXcd amplitudes,
                                     double tol = kStructuralTol);
  static StateVector from_values(Dims dims, const std::vector<Complex>& values,
                                 double tol = kStructuralTol);
  /// The only entry point that rescales its input. Throws on a zero vector.
  static StateVector normalized(Dims dims, Eigen::VectorXcd amplitudes);
  static StateVector basis(Dims dims, std::size_t index);

  const Dims& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  std::size_t num_subsystems() const noexcept { return dims_.size(); }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }
  double norm() const { return amplitudes_.norm(); }

 private:
  StateVector(Dims dims, Eigen::VectorXcd amplitudes)
      : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {}

  Dims dims_;
  Eigen::VectorXcd amplitudes_;
};

StateVector tensor(const StateVector& a, const StateVector& b);

/// <a|b>, conjugate-linear in `a`. Throws std::invalid_argument when the
/// total dimensions differ.
Complex inner(const StateVector& a, const StateVector& b);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

/// True iff |<a|b>| >= 1 - tol. States of different size are never equal.
bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = kStructuralTol);

/// Reorders subsystems so that new subsystem k is old subsystem perm[k].
StateVector permute_subsystems(const StateVector& s, std::span<const std::size_t> perm);

/// Splits a flat index into big-endian digits for `dims`.
std::vector<std::size_t> unflatten_index(std::size_t index, const Dims& dims);
std::size_t flatten_index(std::span<const std::size_t> digits, const Dims& dims);

}  // namespace nogo
