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

#include "nogo/core/state_vector.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nogo {

std::size_t total_dim(const Dims& dims) {
  if (dims.empty()) {
    throw std::invalid_argument("state needs at least one subsystem");
  }
  std::size_t n = 1;
  for (std::size_t d : dims) {
    if (d == 0) {
      throw std::invalid_argument("subsystem dimension must be positive");
    }
    n *= d;
  }
  return n;
}

StateVector StateVector::from_amplitudes(Dims dims, Eigen::VectorXcd amplitudes, double tol) {
  const std::size_t n = total_dim(dims);
  if (static_cast<std::size_t>(amplitudes.size()) != n) {
    throw std::invalid_argument("amplitude count " + std::to_string(amplitudes.size()) +
                                " does not match product of dims " + std::to_string(n));
  }
  const double norm_sq = amplitudes.squaredNorm();
  if (!std::isfinite(norm_sq) || std::abs(norm_sq - 1.0) > tol) {
    throw std::invalid_argument("state is not normalized (norm^2 = " + std::to_string(norm_sq) +
                                ")");
  }
  return StateVector(std::move(dims), std::move(amplitudes));
}

StateVector StateVector::from_values(Dims dims, const std::vector<Complex>& values, double tol) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = values[i];
  }
  return from_amplitudes(std::move(dims), std::move(v), tol);
}

StateVector StateVector::normalized(Dims dims, Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return from_amplitudes(std::move(dims), std::move(amplitudes));
}

StateVector StateVector::basis(Dims dims, std::size_t index) {
  const std::size_t n = total_dim(dims);
  if (index >= n) {
    throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(dims), std::move(v));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  const Eigen::Index nb = b.amplitudes().size();
  Eigen::VectorXcd v(a.amplitudes().size() * nb);
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
    v.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
  }
  return StateVector::from_amplitudes(std::move(dims), std::move(v));
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner product of states with different dimensions");
  }
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner(a, b)); }

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.size() != b.size()) {
    return false;
  }
  return std::abs(inner(a, b)) >= 1.0 - tol;
}

std::vector<std::size_t> unflatten_index(std::size_t index, const Dims& dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
  return digits;
}

std::size_t flatten_index(std::span<const std::size_t> digits, const Dims& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    index = index * dims[k] + digits[k];
  }
  return index;
}

StateVector permute_subsystems(const StateVector& s, std::span<const std::size_t> perm) {
  const Dims& old_dims = s.dims();
  const std::size_t n = old_dims.size();
  if (perm.size() != n) {
    throw std::invalid_argument("permutation length does not match subsystem count");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) {
      throw std::invalid_argument("invalid subsystem permutation");
    }
    seen[p] = true;
  }

  Dims new_dims(n);
  for (std::size_t k = 0; k < n; ++k) {
    new_dims[k] = old_dims[perm[k]];
  }
  Eigen::VectorXcd v(s.amplitudes().size());
  std::vector<std::size_t> new_digits(n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto digits = unflatten_index(i, old_dims);
    for (std::size_t k = 0; k < n; ++k) {
      new_digits[k] = digits[perm[k]];
    }
    v(static_cast<Eigen::Index>(flatten_index(new_digits, new_dims))) = s[i];
  }
  return StateVector::from_amplitudes(std::move(new_dims), std::move(v));
}

}  // namespace nogo
