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

#include <array>
#include <map>
#include <vector>

#include "nogo/core/gates.h"
#include "nogo/core/operator.h"
#include "nogo/core/projector_set.h"
#include "nogo/core/state_vector.h"
#include "nogo/sampler/measurement.h"
#include "nogo/sampler/seeded_rng.h"
#include "nogo/spin1/frame3.h"

namespace nogo {

// Spin-1 operators in the symmetric (real-generator) representation, where
// i*J_nu are the generators of SO(3) acting on R^3.

struct SpinOperators {
  Operator x;
  Operator y;
  Operator z;
};

SpinOperators spin_operators();
Operator spin_operator(Axis axis);

/// Eigenvectors for J_nu = +1, 0, -1 with the phases fixed as
/// |+x> = (0,-i,1)/sqrt2, |0x> = (1,0,0), |-x> = (0,i,1)/sqrt2 and the
/// analogous y and z vectors.
struct SpinEigenbasis {
  StateVector plus;
  StateVector zero;
  StateVector minus;
};

SpinEigenbasis spin_eigenbasis(Axis axis);

/// J_nu^2; diagonal with a single zero at position nu.
Operator jsq(Axis axis);

/// K = 2 J_x^2 + J_y^2 = diag(1, 2, 3).
Operator k_operator();

/// Standard basis e_1, e_2, e_3 (eigenvalues 1, 2, 3 of K).
std::array<StateVector, 3> k_eigenbasis();

/// Checks J_x^2 = (4-K)(K-1)/2, J_y^2 = (K-2)^2, J_z^2 = (3-K)K/2.
struct JsqFromKCheck {
  std::array<double, 3> max_error;  // per axis, entrywise
  bool holds;
};
JsqFromKCheck jsq_from_k(double tol = kAlgebraicTol);

/// R op R^T for a 3x3 operator. Throws for any other dimension.
Operator conjugate_by_frame(const Operator& op, const Frame3& frame);

/// Values of (J_x^2, J_y^2, J_z^2), always indexed by axis.
using JsqTriple = std::array<int, 3>;

/// 1 -> {0,1,1}, 2 -> {1,0,1}, 3 -> {1,1,0}. Throws std::out_of_range
/// for any other value.
JsqTriple k_value_to_jsq_triple(int k_value);

/// Two-outcome set {P(J^2 = 0), P(J^2 = 1)} for `axis` of `frame`, with
/// labels 0 and 1.
ProjectorSet jsq_projector_set(Axis axis, const Frame3& frame = Frame3::identity());

using AxisOrder = std::array<Axis, 3>;
std::array<AxisOrder, 6> all_axis_orders();
/// Throws std::invalid_argument unless `order` is a permutation of x, y, z.
void validate_axis_order(const AxisOrder& order);

struct SequentialJsqResult {
  JsqTriple triple;
  std::vector<MeasurementOutcome> trace;  // in measurement order
};

/// Measures J^2 along the three axes one after another, in `order`.
SequentialJsqResult sequential_jsq_measure(const StateVector& s, const AxisOrder& order,
                                           SeededRng& rng);

/// Joint triple distribution of sequential_jsq_measure, obtained by
/// multiplying the branch probabilities of the outcome tree.
std::map<JsqTriple, double> sequential_jsq_distribution(const StateVector& s,
                                                        const AxisOrder& order);

}  // namespace nogo
