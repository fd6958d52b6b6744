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

#include "nogo/spin1/spin1.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nogo {

namespace {

constexpr Complex kI{0.0, 1.0};

StateVector spin1_state(Complex a, Complex b, Complex c) {
  return StateVector::from_values({3}, {a, b, c});
}

std::size_t axis_index(Axis axis) { return static_cast<std::size_t>(axis); }

}  // namespace

SpinOperators spin_operators() {
  return SpinOperators{
      Operator::from_rows({{0.0, 0.0, 0.0}, {0.0, 0.0, -kI}, {0.0, kI, 0.0}}),
      Operator::from_rows({{0.0, 0.0, kI}, {0.0, 0.0, 0.0}, {-kI, 0.0, 0.0}}),
      Operator::from_rows({{0.0, -kI, 0.0}, {kI, 0.0, 0.0}, {0.0, 0.0, 0.0}}),
  };
}

Operator spin_operator(Axis axis) {
  SpinOperators ops = spin_operators();
  switch (axis) {
    case Axis::x:
      return ops.x;
    case Axis::y:
      return ops.y;
    case Axis::z:
      return ops.z;
  }
  throw std::invalid_argument("bad axis");
}

SpinEigenbasis spin_eigenbasis(Axis axis) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (axis) {
    case Axis::x:
      return {spin1_state(0.0, -kI * s, s), spin1_state(1.0, 0.0, 0.0),
              spin1_state(0.0, kI * s, s)};
    case Axis::y:
      // The printed (-i, 0, 1)/sqrt(2) has eigenvalue -1 under J_y, so the
      // two printed y vectors are attached to their actual eigenvalues.
      return {spin1_state(kI * s, 0.0, s), spin1_state(0.0, 1.0, 0.0),
              spin1_state(-kI * s, 0.0, s)};
    case Axis::z:
      return {spin1_state(-kI * s, s, 0.0), spin1_state(0.0, 0.0, 1.0),
              spin1_state(kI * s, s, 0.0)};
  }
  throw std::invalid_argument("bad axis");
}

Operator jsq(Axis axis) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
  const auto k = static_cast<Eigen::Index>(axis_index(axis));
  m(k, k) = 0.0;
  return Operator(std::move(m));
}

Operator k_operator() {
  return Complex{2.0} * jsq(Axis::x) + jsq(Axis::y);
}

std::array<StateVector, 3> k_eigenbasis() {
  return {StateVector::basis({3}, 0), StateVector::basis({3}, 1), StateVector::basis({3}, 2)};
}

JsqFromKCheck jsq_from_k(double tol) {
  const Operator k = k_operator();
  const Operator id = Operator::identity(3);
  const auto shifted = [&](double c) { return k - Complex{c} * id; };

  const Operator jx2 = Complex{-0.5} * (shifted(4.0) * shifted(1.0));
  const Operator jy2 = shifted(2.0) * shifted(2.0);
  const Operator jz2 = Complex{-0.5} * (shifted(3.0) * k);

  JsqFromKCheck check{{max_abs_diff(jx2, jsq(Axis::x)), max_abs_diff(jy2, jsq(Axis::y)),
                       max_abs_diff(jz2, jsq(Axis::z))},
                      false};
  check.holds = std::all_of(check.max_error.begin(), check.max_error.end(),
                            [tol](double e) { return e <= tol; });
  return check;
}

Operator conjugate_by_frame(const Operator& op, const Frame3& frame) {
  if (op.dim() != 3) {
    throw std::invalid_argument("conjugate_by_frame expects a 3x3 operator");
  }
  const Eigen::Matrix3cd r = frame.matrix().cast<Complex>();
  return Operator(r * op.matrix() * r.transpose());
}

JsqTriple k_value_to_jsq_triple(int k_value) {
  switch (k_value) {
    case 1:
      return {0, 1, 1};
    case 2:
      return {1, 0, 1};
    case 3:
      return {1, 1, 0};
    default:
      throw std::out_of_range("K value must be 1, 2 or 3, got " + std::to_string(k_value));
  }
}

ProjectorSet jsq_projector_set(Axis axis, const Frame3& frame) {
  const Operator p0 = conjugate_by_frame(Operator::identity(3) - jsq(axis), frame);
  const Operator p1 = Operator::identity(3) - p0;
  return ProjectorSet::create({p0, p1}, {0.0, 1.0});
}

std::array<AxisOrder, 6> all_axis_orders() {
  return {{{Axis::x, Axis::y, Axis::z},
           {Axis::x, Axis::z, Axis::y},
           {Axis::y, Axis::x, Axis::z},
           {Axis::y, Axis::z, Axis::x},
           {Axis::z, Axis::x, Axis::y},
           {Axis::z, Axis::y, Axis::x}}};
}

void validate_axis_order(const AxisOrder& order) {
  std::array<bool, 3> seen{};
  for (Axis a : order) {
    const std::size_t i = axis_index(a);
    if (i > 2 || seen[i]) {
      throw std::invalid_argument("measurement order must be a permutation of x, y, z");
    }
    seen[i] = true;
  }
}

namespace {

const std::array<ProjectorSet, 3>& standard_jsq_sets() {
  static const std::array<ProjectorSet, 3> sets = {
      jsq_projector_set(Axis::x), jsq_projector_set(Axis::y), jsq_projector_set(Axis::z)};
  return sets;
}

}  // namespace

SequentialJsqResult sequential_jsq_measure(const StateVector& s, const AxisOrder& order,
                                           SeededRng& rng) {
  validate_axis_order(order);
  if (s.size() != 3) {
    throw std::invalid_argument("sequential J^2 measurement needs a spin-1 state");
  }
  const auto& sets = standard_jsq_sets();
  SequentialJsqResult result{{0, 0, 0}, {}};
  StateVector current = s;
  for (Axis axis : order) {
    MeasurementOutcome outcome = measure_projective(current, sets[axis_index(axis)], rng);
    result.triple[axis_index(axis)] = static_cast<int>(outcome.label);
    current = outcome.post_state;
    result.trace.push_back(std::move(outcome));
  }
  return result;
}

std::map<JsqTriple, double> sequential_jsq_distribution(const StateVector& s,
                                                        const AxisOrder& order) {
  validate_axis_order(order);
  const auto& sets = standard_jsq_sets();
  const std::vector<ProjectorSet> sequence = {sets[axis_index(order[0])],
                                              sets[axis_index(order[1])],
                                              sets[axis_index(order[2])]};
  std::map<JsqTriple, double> dist;
  for (const Branch& branch : enumerate_branches(s, sequence)) {
    JsqTriple triple{};
    for (std::size_t step = 0; step < 3; ++step) {
      triple[axis_index(order[step])] =
          static_cast<int>(sequence[step].labels()[branch.outcomes[step]]);
    }
    dist[triple] += branch.probability;
  }
  return dist;
}

}  // namespace nogo
