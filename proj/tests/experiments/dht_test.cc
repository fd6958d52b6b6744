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

#include <gtest/gtest.h>

#include "nogo/core/gates.h"
#include "nogo/core/operator.h"
#include "nogo/experiments/bell.h"
#include "nogo/sampler/measurement.h"

namespace nogo {
namespace {

const double kS = 1.0 / std::sqrt(2.0);

// (|first> - |second>)/sqrt(2) over 4 qubits, bits written most significant first.
StateVector pair_state(std::size_t first, std::size_t second) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
  v(static_cast<Eigen::Index>(first)) = kS;
  v(static_cast<Eigen::Index>(second)) = -kS;
  return StateVector::from_amplitudes({2, 2, 2, 2}, v);
}

TEST(Dht, VariantNames) {
  EXPECT_EQ(parse_dht_variant("swap"), DhtVariant::swap_gate);
  EXPECT_EQ(parse_dht_variant("measurement"), DhtVariant::measurement_gate);
  EXPECT_EQ(dht_variant_name(DhtVariant::swap_gate), "swap");
  EXPECT_THROW(parse_dht_variant("teleport"), std::invalid_argument);
}

// Printed states, checked against tests/oracles/physics_oracle.py.
TEST(Dht, MeasurementVariantSteps) {
  const DhtSteps s = dht_prepare(DhtVariant::measurement_gate);
  EXPECT_TRUE(equal_up_to_phase(s.attached, pair_state(0b0010, 0b0100), 1e-12));
  EXPECT_TRUE(equal_up_to_phase(s.gated, pair_state(0b0011, 0b1100), 1e-12));
  EXPECT_TRUE(equal_up_to_phase(s.reunited, pair_state(0b0101, 0b1010), 1e-12));
}

TEST(Dht, SwapVariantSteps) {
  const DhtSteps s = dht_prepare(DhtVariant::swap_gate);
  EXPECT_TRUE(equal_up_to_phase(s.attached, pair_state(0b0010, 0b0100), 1e-12));
  EXPECT_TRUE(equal_up_to_phase(s.gated, pair_state(0b0001, 0b1000), 1e-12));
  EXPECT_TRUE(equal_up_to_phase(s.reunited, pair_state(0b0100, 0b1000), 1e-12));
  // Reunited swap state is the singlet on (A, B) times |00> on the data pair.
  const StateVector expected = tensor(bell_state(), StateVector::basis({2, 2}, 0));
  EXPECT_GE(fidelity(s.reunited, expected), 1.0 - 1e-12);
}

TEST(Dht, ExpectedStepsMatchPrepared) {
  for (DhtVariant v : {DhtVariant::measurement_gate, DhtVariant::swap_gate}) {
    const DhtSteps got = dht_prepare(v);
    const DhtSteps want = dht_expected_steps(v);
    EXPECT_GE(fidelity(got.attached, want.attached), 1.0 - 1e-12);
    EXPECT_GE(fidelity(got.gated, want.gated), 1.0 - 1e-12);
    EXPECT_GE(fidelity(got.reunited, want.reunited), 1.0 - 1e-12);
  }
}

TEST(Dht, BothLocalGatesNeeded) {
  // Only the (A, q1) gate: the state differs from the printed step-2 state.
  const DhtSteps s = dht_prepare(DhtVariant::measurement_gate);
  const std::size_t left[] = {0, 1};
  const StateVector half = apply(lift(measurement_gate(), left, {2, 2, 2, 2}), s.attached);
  EXPECT_FALSE(equal_up_to_phase(half, s.gated, 1e-6));
}

TEST(Dht, AncillaOutcomes) {
  for (DhtVariant v : {DhtVariant::measurement_gate, DhtVariant::swap_gate}) {
    const std::vector<double> p =
        born_probabilities(dht_prepare(v).reunited, dht_ancilla_projectors());
    EXPECT_NEAR(p[0], 0.0, 1e-12);
    EXPECT_NEAR(p[1], 0.5, 1e-12);
    EXPECT_NEAR(p[2], 0.5, 1e-12);
    EXPECT_NEAR(p[3], 0.0, 1e-12);
  }
}

TEST(Dht, RunPostStates) {
  for (DhtVariant v : {DhtVariant::measurement_gate, DhtVariant::swap_gate}) {
    for (int t = 0; t < 40; ++t) {
      SeededRng rng = SeededRng::for_trial(61, static_cast<std::uint64_t>(t));
      const DhtRun run = dht_run(v, rng);
      ASSERT_TRUE(run.ancilla_outcome == 1 || run.ancilla_outcome == 2);
      EXPECT_NEAR(run.outcome_probability, 0.5, 1e-12);
      EXPECT_GE(run.post_state_fidelity, 1.0 - 1e-12);
      for (double f : run.step_fidelities) EXPECT_GE(f, 1.0 - 1e-12);
      if (v == DhtVariant::swap_gate) {
        // Data pair is |00> whatever the ancillas read.
        const std::size_t index = run.ancilla_outcome == 1 ? 0b0100 : 0b1000;
        EXPECT_NEAR(std::abs(run.post_state[index]), 1.0, 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace nogo
