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

#include <cstddef>
#include <span>
#include <vector>

#include "nogo/core/operator.h"
#include "nogo/core/state_vector.h"
#include "nogo/core/tolerance.h"

namespace nogo {

/// Mutually orthogonal projectors that sum to the identity, one per outcome.
///
/// Labels are plain numbers: an outcome index or an eigenvalue.
class ProjectorSet {
 public:
  /// Validates every invariant and throws std::invalid_argument on failure.
  static ProjectorSet create(std::vector<Operator> projectors, std::vector<double> labels,
                             double tol = kStructuralTol);
  /// Labels default to 0, 1, ..., n-1.
  static ProjectorSet create(std::vector<Operator> projectors, double tol = kStructuralTol);
  /// Rank-1 projectors |b_k><b_k| of an orthonormal basis.
  static ProjectorSet from_basis(std::span<const StateVector> basis, double tol = kStructuralTol);

  std::size_t size() const noexcept { return projectors_.size(); }
  std::size_t dim() const noexcept { return projectors_.front().dim(); }
  const std::vector<Operator>& projectors() const noexcept { return projectors_; }
  const std::vector<double>& labels() const noexcept { return labels_; }
  const Operator& operator[](std::size_t i) const { return projectors_.at(i); }

 private:
  ProjectorSet(std::vector<Operator> projectors, std::vector<double> labels)
      : projectors_(std::move(projectors)), labels_(std::move(labels)) {}

  std::vector<Operator> projectors_;
  std::vector<double> labels_;
};

/// Lifts every projector of `set` onto `targets` within `dims`; labels kept.
ProjectorSet lift(const ProjectorSet& set, std::span<const std::size_t> targets, const Dims& dims);

/// {A_i (x) B_j} ordered with i varying fastest; label of cell is its index
/// i + |A| * j.
ProjectorSet product(const ProjectorSet& a, const ProjectorSet& b);

}  // namespace nogo
