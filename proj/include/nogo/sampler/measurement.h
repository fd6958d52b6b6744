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
#include <optional>
#include <span>
#include <vector>

#include "nogo/core/operator.h"
#include "nogo/core/projector_set.h"
#include "nogo/core/state_vector.h"
#include "nogo/core/tolerance.h"
#include "nogo/sampler/seeded_rng.h"

namespace nogo {

struct MeasurementOutcome {
  std::size_t index;  // position of the outcome within its projector set / basis
  double label;       // outcome label (index or eigenvalue)
  double probability;
  StateVector post_state;
};

/// Result of a yes/no filter. A "no" carries no post-state.
struct FilterOutcome {
  bool yes;
  double probability_yes;
  std::optional<StateVector> post_state;
};

/// 1-measurement: answers "yes" with probability |<s|phi>|^2 and then
/// returns phi; otherwise returns nothing.
FilterOutcome measure_filter(const StateVector& s, const StateVector& phi, SeededRng& rng);

/// N-measurement in a complete orthonormal basis. Throws if the Gram matrix
/// of `basis` differs from the identity by more than 1e-10.
MeasurementOutcome measure_basis(const StateVector& s, std::span<const StateVector> basis,
                                 SeededRng& rng);

/// P-measurement: outcome l with p_l = <s|P_l|s>, post-state P_l|s>/sqrt(p_l).
/// Cells with p_l < 1e-15 are removed before sampling.
MeasurementOutcome measure_projective(const StateVector& s, const ProjectorSet& pset,
                                      SeededRng& rng);

/// Born probabilities <s|P_l|s> for every cell of `pset`.
std::vector<double> born_probabilities(const StateVector& s, const ProjectorSet& pset);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending, one per eigenspace
  ProjectorSet projectors;          // labels equal the eigenvalues
};

/// Eigenspace projectors of a Hermitian operator. Eigenvalues within `tol`
/// of their neighbour share an eigenspace. Throws for non-Hermitian input.
SpectralDecomposition spectral_decomposition(const Operator& a, double tol = kEigenGroupTol);

/// A-measurement: P-measurement over the eigenspaces of `a`; the label is the
/// eigenvalue.
MeasurementOutcome measure_operator(const StateVector& s, const Operator& a, SeededRng& rng);

/// One leaf of the outcome tree of a sequence of P-measurements.
struct Branch {
  std::vector<std::size_t> outcomes;  // cell index per measurement
  double probability;                 // product of conditional probabilities
  StateVector post_state;
};

/// Enumerates every outcome sequence of measuring `sequence` in order,
/// pruning branches below 1e-15. Probabilities are exact products of the
/// conditional Born probabilities.
std::vector<Branch> enumerate_branches(const StateVector& s,
                                       std::span<const ProjectorSet> sequence);

}  // namespace nogo
