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

#include "nogo/experiments/dht.h"

#include <cmath>
#include <stdexcept>

#include "nogo/core/gates.h"
#include "nogo/core/operator.h"
#include "nogo/experiments/bell.h"
#include "nogo/sampler/measurement.h"

namespace nogo {

namespace {

const Dims kRegister{2, 2, 2, 2};

// (|first> - |second>)/sqrt(2) for two 4-bit basis labels.
StateVector signed_pair(std::size_t first, std::size_t second) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
  const double s = 1.0 / std::sqrt(2.0);
  v(static_cast<Eigen::Index>(first)) = s;
  v(static_cast<Eigen::Index>(second)) = -s;
  return StateVector::from_amplitudes(kRegister, std::move(v));
}

}  // namespace

std::string dht_variant_name(DhtVariant variant) {
  return variant == DhtVariant::measurement_gate ? "measurement" : "swap";
}

DhtVariant parse_dht_variant(const std::string& text) {
  if (text == "measurement") return DhtVariant::measurement_gate;
  if (text == "swap") return DhtVariant::swap_gate;
  throw std::invalid_argument("unknown variant '" + text + "' (expected measurement or swap)");
}

DhtSteps dht_prepare(DhtVariant variant) {
  const StateVector zero = StateVector::basis({2}, 0);
  const StateVector attached = tensor(tensor(zero, bell_state()), zero);

  StateVector gated = attached;
  if (variant == DhtVariant::measurement_gate) {
    // Ancilla is the target (first factor), the data qubit the control.
    const std::size_t side_a[] = {0, 1};
    const std::size_t side_b[] = {3, 2};
    gated = apply(lift(measurement_gate(), side_a, kRegister), gated);
    gated = apply(lift(measurement_gate(), side_b, kRegister), gated);
  } else {
    const std::size_t side_a[] = {0, 1};
    const std::size_t side_b[] = {2, 3};
    gated = apply(lift(swap_gate(), side_a, kRegister), gated);
    gated = apply(lift(swap_gate(), side_b, kRegister), gated);
  }

  const std::size_t reunion[] = {0, 3, 1, 2};
  StateVector reunited = permute_subsystems(gated, reunion);
  return DhtSteps{attached, gated, reunited};
}

DhtSteps dht_expected_steps(DhtVariant variant) {
  // Basis labels are written as 4-bit strings in register order.
  const StateVector attached = signed_pair(0b0010, 0b0100);
  if (variant == DhtVariant::measurement_gate) {
    return DhtSteps{attached, signed_pair(0b0011, 0b1100), signed_pair(0b0101, 0b1010)};
  }
  return DhtSteps{attached, signed_pair(0b0001, 0b1000), signed_pair(0b0100, 0b1000)};
}

namespace {

ProjectorSet build_ancilla_projectors() {
  std::vector<Operator> cells;
  for (std::size_t k = 0; k < 4; ++k) {
    cells.push_back(density(StateVector::basis({2, 2}, k)));
  }
  const std::size_t ancillas[] = {0, 1};
  return lift(ProjectorSet::create(std::move(cells)), ancillas, kRegister);
}

}  // namespace

ProjectorSet dht_ancilla_projectors() {
  static const ProjectorSet set = build_ancilla_projectors();
  return set;
}

DhtRun dht_run(DhtVariant variant, SeededRng& rng) {
  return dht_finish(dht_prepare(variant), variant, rng);
}

DhtRun dht_finish(DhtSteps steps, DhtVariant variant, SeededRng& rng) {
  const DhtSteps expected = dht_expected_steps(variant);
  const std::array<double, 3> fidelities = {fidelity(steps.attached, expected.attached),
                                            fidelity(steps.gated, expected.gated),
                                            fidelity(steps.reunited, expected.reunited)};

  MeasurementOutcome out = measure_projective(steps.reunited, dht_ancilla_projectors(), rng);
  const std::size_t a = out.index / 2;
  const std::size_t b = out.index % 2;
  const std::size_t data = variant == DhtVariant::swap_gate ? 0 : (a << 1) | b;
  const StateVector expected_post =
      tensor(StateVector::basis({2, 2}, out.index), StateVector::basis({2, 2}, data));
  const double post_fidelity = fidelity(out.post_state, expected_post);

  return DhtRun{std::move(steps), fidelities, out.index, out.probability,
                std::move(out.post_state), expected_post, post_fidelity};
}

}  // namespace nogo
