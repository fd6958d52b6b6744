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

#include "nogo/core/operator.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nogo {

Operator::Operator(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("operator matrix must be square and non-empty");
  }
}

Operator Operator::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Operator(Eigen::MatrixXcd::Identity(n, n));
}

Operator Operator::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd m(n, n);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw std::invalid_argument("from_rows expects a square matrix");
    }
    Eigen::Index c = 0;
    for (const Complex& v : row) {
      m(r, c++) = v;
    }
    ++r;
  }
  return Operator(std::move(m));
}

Operator::Operator(const Operator& other)
    : matrix_(other.matrix_), unitary_cache_(other.unitary_cache_.load(std::memory_order_relaxed)) {}

Operator::Operator(Operator&& other) noexcept
    : matrix_(std::move(other.matrix_)),
      unitary_cache_(other.unitary_cache_.load(std::memory_order_relaxed)) {}

Operator& Operator::operator=(const Operator& other) {
  if (this != &other) {
    matrix_ = other.matrix_;
    unitary_cache_.store(other.unitary_cache_.load(std::memory_order_relaxed),
                         std::memory_order_relaxed);
  }
  return *this;
}

Operator& Operator::operator=(Operator&& other) noexcept {
  matrix_ = std::move(other.matrix_);
  unitary_cache_.store(other.unitary_cache_.load(std::memory_order_relaxed),
                       std::memory_order_relaxed);
  return *this;
}

Operator Operator::adjoint() const { return Operator(matrix_.adjoint()); }

bool Operator::is_unitary(double tol) const {
  const auto n = matrix_.rows();
  const Eigen::MatrixXcd err = matrix_.adjoint() * matrix_ - Eigen::MatrixXcd::Identity(n, n);
  return err.cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_hermitian(double tol) const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_projector(double tol) const {
  return is_hermitian(tol) && (matrix_ * matrix_ - matrix_).cwiseAbs().maxCoeff() <= tol;
}

namespace {

void require_same_dim(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("operator dimension mismatch: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return Operator(a.matrix() * b.matrix());
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return Operator(a.matrix() + b.matrix());
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return Operator(a.matrix() - b.matrix());
}

Operator operator*(Complex scale, const Operator& a) { return Operator(scale * a.matrix()); }

double max_abs_diff(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

Operator kron(const Operator& a, const Operator& b) {
  const Eigen::Index na = a.matrix().rows();
  const Eigen::Index nb = b.matrix().rows();
  Eigen::MatrixXcd m(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      m.block(i * nb, j * nb, nb, nb) = a.matrix()(i, j) * b.matrix();
    }
  }
  return Operator(std::move(m));
}

Operator lift(const Operator& op, std::span<const std::size_t> targets, const Dims& dims) {
  const std::size_t n = total_dim(dims);
  std::vector<bool> used(dims.size(), false);
  Dims target_dims;
  for (std::size_t t : targets) {
    if (t >= dims.size()) {
      throw std::invalid_argument("lift target " + std::to_string(t) + " out of range");
    }
    if (used[t]) {
      throw std::invalid_argument("lift targets overlap");
    }
    used[t] = true;
    target_dims.push_back(dims[t]);
  }
  if (targets.empty() || total_dim(target_dims) != op.dim()) {
    throw std::invalid_argument("operator dimension does not match target subsystems");
  }

  // Column c of the lifted matrix: for each row j of op, overwrite the target
  // digits of c with the digits of j.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  std::vector<std::size_t> target_digits(targets.size());
  for (std::size_t c = 0; c < n; ++c) {
    auto digits = unflatten_index(c, dims);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      target_digits[k] = digits[targets[k]];
    }
    const std::size_t op_col = flatten_index(target_digits, target_dims);
    for (std::size_t op_row = 0; op_row < op.dim(); ++op_row) {
      const Complex v = op(op_row, op_col);
      if (v == Complex{}) {
        continue;
      }
      const auto row_digits = unflatten_index(op_row, target_dims);
      for (std::size_t k = 0; k < targets.size(); ++k) {
        digits[targets[k]] = row_digits[k];
      }
      m(static_cast<Eigen::Index>(flatten_index(digits, dims)), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return Operator(std::move(m));
}

StateVector apply(const Operator& u, const StateVector& s) {
  if (u.dim() != s.size()) {
    throw std::invalid_argument("gate dimension does not match state");
  }
  auto cached = u.unitary_cache_.load(std::memory_order_relaxed);
  if (cached == Operator::kUnknown) {
    cached = u.is_unitary() ? Operator::kUnitary : Operator::kNotUnitary;
    u.unitary_cache_.store(cached, std::memory_order_relaxed);
  }
  if (cached != Operator::kUnitary) {
    throw std::invalid_argument("apply() requires a unitary operator");
  }
  return StateVector::from_amplitudes(s.dims(), u.matrix() * s.amplitudes());
}

Eigen::VectorXcd multiply(const Operator& op, const StateVector& s) {
  if (op.dim() != s.size()) {
    throw std::invalid_argument("operator dimension does not match state");
  }
  return op.matrix() * s.amplitudes();
}

Operator outer(const StateVector& a, const StateVector& b) {
  return Operator(a.amplitudes() * b.amplitudes().adjoint());
}

Operator density(const StateVector& s) { return outer(s, s); }

double trace_prob(const Operator& p, const Operator& rho) {
  if (p.dim() != rho.dim()) {
    throw std::invalid_argument("trace_prob dimension mismatch");
  }
  // Tr(P rho) = sum_ij P_ij rho_ji without forming the product.
  return (p.matrix().cwiseProduct(rho.matrix().transpose())).sum().real();
}

}  // namespace nogo
