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

#include "nogo/sampler/measurement.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "nogo/sampler/roulette.h"

namespace nogo {

namespace {

// Zeroes degenerate cells; the remainder still sums to 1 within 1e-9.
std::vector<double> sampling_weights(std::vector<double> probs) {
  for (double& p : probs) {
    if (p < kDegenerateProb) {
      p = 0.0;
    }
  }
  return probs;
}

StateVector project(const StateVector& s, const Operator& p, double probability) {
  return StateVector::from_amplitudes(s.dims(), multiply(p, s) / std::sqrt(probability));
}

}  // namespace

FilterOutcome measure_filter(const StateVector& s, const StateVector& phi, SeededRng& rng) {
  const double p_yes = std::clamp(fidelity(s, phi), 0.0, 1.0);
  const std::vector<double> cells = sampling_weights({p_yes, 1.0 - p_yes});
  if (roulette(rng.uniform(), cells) == 0) {
    return FilterOutcome{true, p_yes, phi};
  }
  return FilterOutcome{false, p_yes, std::nullopt};
}

MeasurementOutcome measure_basis(const StateVector& s, std::span<const StateVector> basis,
                                 SeededRng& rng) {
  if (basis.size() != s.size()) {
    throw std::invalid_argument("basis is incomplete: need one vector per dimension");
  }
  std::vector<double> probs(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      const Complex g = inner(basis[j], basis[k]);
      const double expected = j == k ? 1.0 : 0.0;
      if (std::abs(g - expected) > kStructuralTol) {
        throw std::invalid_argument("basis is not orthonormal");
      }
    }
    probs[k] = std::norm(inner(basis[k], s));
  }
  const std::size_t k = roulette(rng.uniform(), sampling_weights(probs));
  return MeasurementOutcome{k, static_cast<double>(k), probs[k], basis[k]};
}

std::vector<double> born_probabilities(const StateVector& s, const ProjectorSet& pset) {
  if (pset.dim() != s.size()) {
    throw std::invalid_argument("projector set dimension does not match state");
  }
  std::vector<double> probs(pset.size());
  for (std::size_t l = 0; l < pset.size(); ++l) {
    // <s|P|s> = |P s|^2 for a projector.
    probs[l] = multiply(pset[l], s).squaredNorm();
  }
  return probs;
}

MeasurementOutcome measure_projective(const StateVector& s, const ProjectorSet& pset,
                                      SeededRng& rng) {
  const std::vector<double> probs = born_probabilities(s, pset);
  const std::size_t l = roulette(rng.uniform(), sampling_weights(probs));
  return MeasurementOutcome{l, pset.labels()[l], probs[l], project(s, pset[l], probs[l])};
}

SpectralDecomposition spectral_decomposition(const Operator& a, double tol) {
  if (!a.is_hermitian()) {
    throw std::invalid_argument("spectral decomposition requires a Hermitian operator");
  }
  // Symmetrize so the solver sees an exactly self-adjoint matrix.
  const Eigen::MatrixXcd h = 0.5 * (a.matrix() + a.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXcd& vectors = solver.eigenvectors();

  std::vector<double> eigenvalues;
  std::vector<Operator> projectors;
  Eigen::Index start = 0;
  while (start < values.size()) {
    Eigen::Index end = start + 1;
    while (end < values.size() && values(end) - values(end - 1) <= tol) {
      ++end;
    }
    const auto block = vectors.middleCols(start, end - start);
    projectors.emplace_back(block * block.adjoint());
    eigenvalues.push_back(values.segment(start, end - start).mean());
    start = end;
  }
  ProjectorSet set = ProjectorSet::create(std::move(projectors), eigenvalues);
  return SpectralDecomposition{std::move(eigenvalues), std::move(set)};
}

MeasurementOutcome measure_operator(const StateVector& s, const Operator& a, SeededRng& rng) {
  const SpectralDecomposition spectrum = spectral_decomposition(a);
  return measure_projective(s, spectrum.projectors, rng);
}

std::vector<Branch> enumerate_branches(const StateVector& s,
                                       std::span<const ProjectorSet> sequence) {
  std::vector<Branch> frontier;
  frontier.push_back(Branch{{}, 1.0, s});
  for (const ProjectorSet& pset : sequence) {
    std::vector<Branch> next;
    for (const Branch& branch : frontier) {
      const std::vector<double> probs = born_probabilities(branch.post_state, pset);
      for (std::size_t l = 0; l < probs.size(); ++l) {
        if (probs[l] < kDegenerateProb) {
          continue;
        }
        std::vector<std::size_t> outcomes = branch.outcomes;
        outcomes.push_back(l);
        next.push_back(Branch{std::move(outcomes), branch.probability * probs[l],
                              project(branch.post_state, pset[l], probs[l])});
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

}  // namespace nogo
