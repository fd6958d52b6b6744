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

#include "nogo/core/projector_set.h"

#include <stdexcept>
#include <string>

namespace nogo {

ProjectorSet ProjectorSet::create(std::vector<Operator> projectors, std::vector<double> labels,
                                  double tol) {
  if (projectors.empty()) {
    throw std::invalid_argument("projector set is empty");
  }
  if (labels.size() != projectors.size()) {
    throw std::invalid_argument("projector set needs one label per projector");
  }
  const std::size_t dim = projectors.front().dim();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const Operator& p = projectors[i];
    if (p.dim() != dim) {
      throw std::invalid_argument("projectors have different dimensions");
    }
    if (!p.is_projector(tol)) {
      throw std::invalid_argument("element " + std::to_string(i) + " is not a projector");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if ((p.matrix() * projectors[j].matrix()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("projectors " + std::to_string(j) + " and " +
                                    std::to_string(i) + " are not orthogonal");
      }
    }
    sum += p.matrix();
  }
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(sum.rows(), sum.cols());
  if ((sum - id).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("projectors do not sum to the identity");
  }
  return ProjectorSet(std::move(projectors), std::move(labels));
}

ProjectorSet ProjectorSet::create(std::vector<Operator> projectors, double tol) {
  std::vector<double> labels(projectors.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    labels[i] = static_cast<double>(i);
  }
  return create(std::move(projectors), std::move(labels), tol);
}

ProjectorSet ProjectorSet::from_basis(std::span<const StateVector> basis, double tol) {
  std::vector<Operator> projectors;
  projectors.reserve(basis.size());
  for (const StateVector& b : basis) {
    projectors.push_back(density(b));
  }
  return create(std::move(projectors), tol);
}

ProjectorSet lift(const ProjectorSet& set, std::span<const std::size_t> targets, const Dims& dims) {
  std::vector<Operator> lifted;
  lifted.reserve(set.size());
  for (const Operator& p : set.projectors()) {
    lifted.push_back(lift(p, targets, dims));
  }
  return ProjectorSet::create(std::move(lifted), set.labels());
}

ProjectorSet product(const ProjectorSet& a, const ProjectorSet& b) {
  std::vector<Operator> cells;
  cells.reserve(a.size() * b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      cells.push_back(kron(a[i], b[j]));
    }
  }
  return ProjectorSet::create(std::move(cells));
}

}  // namespace nogo
