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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include <Eigen/Dense>

#include "nogo/core/state_vector.h"
#include "nogo/core/tolerance.h"

namespace nogo {

/// Dense square complex matrix acting on a Hilbert space of dimension dim().
///
/// The matrix never changes after construction. The only mutable member is
/// an atomic cache of the unitarity check used by apply().
class Operator {
 public:
  explicit Operator(Eigen::MatrixXcd matrix);
  static Operator identity(std::size_t dim);
  static Operator from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  Operator(const Operator& other);
  Operator(Operator&& other) noexcept;
  Operator& operator=(const Operator& other);
  Operator& operator=(Operator&& other) noexcept;
  ~Operator() = default;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  Operator adjoint() const;
  Complex trace() const { return matrix_.trace(); }

  bool is_unitary(double tol = kStructuralTol) const;
  bool is_hermitian(double tol = kStructuralTol) const;
  bool is_projector(double tol = kStructuralTol) const;

 private:
  friend StateVector apply(const Operator& u, const StateVector& s);

  enum : std::int8_t { kUnknown = 0, kUnitary = 1, kNotUnitary = 2 };

  Eigen::MatrixXcd matrix_;
  mutable std::atomic<std::int8_t> unitary_cache_{kUnknown};
};

Operator operator*(const Operator& a, const Operator& b);
Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(Complex scale, const Operator& a);

/// Largest entrywise modulus of a - b. Throws on dimension mismatch.
double max_abs_diff(const Operator& a, const Operator& b);

/// Kronecker product a (x) b, with `a` on the more significant factor.
Operator kron(const Operator& a, const Operator& b);

/// Embeds `op` into the space described by `dims`.
///
/// Tensor factor k of `op` acts on subsystem targets[k]; every other
/// subsystem gets the identity. The order of `targets` matters: lifting a
/// two-qubit gate with targets {3, 2} makes subsystem 3 its first factor.
Operator lift(const Operator& op, std::span<const std::size_t> targets, const Dims& dims);

/// U|s>. Throws std::invalid_argument for a non-unitary operator (checked
/// once per Operator) or a dimension mismatch.
StateVector apply(const Operator& u, const StateVector& s);

/// Op|s> without renormalization; used for projector images.
Eigen::VectorXcd multiply(const Operator& op, const StateVector& s);

/// |a><b|.
Operator outer(const StateVector& a, const StateVector& b);

/// rho = |s><s|.
Operator density(const StateVector& s);

/// Re Tr(P rho).
double trace_prob(const Operator& p, const Operator& rho);

}  // namespace nogo
