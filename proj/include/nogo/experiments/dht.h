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
#include <string>

#include "nogo/core/projector_set.h"
#include "nogo/core/state_vector.h"
#include "nogo/sampler/seeded_rng.h"

namespace nogo {

// Four-qubit register for the ancilla-carried measurement protocol.
// Before reunion the subsystem order is (A, q1, q2, B): ancilla A, the
// singlet pair q1 q2, ancilla B. After reunion it is (A, B, q1, q2).

enum class DhtVariant { measurement_gate, swap_gate };

std::string dht_variant_name(DhtVariant variant);
/// Accepts "measurement" or "swap".
DhtVariant parse_dht_variant(const std::string& text);

struct DhtSteps {
  StateVector attached;  // |0_A> (x) singlet (x) |0_B>
  StateVector gated;     // after the two local gates on (A,q1) and (B,q2)
  StateVector reunited;  // subsystems reordered to (A, B, q1, q2)
};

/// Deterministic part of the protocol.
DhtSteps dht_prepare(DhtVariant variant);

/// The states printed for each step, written out amplitude by amplitude.
DhtSteps dht_expected_steps(DhtVariant variant);

/// Computational-basis measurement of the ancilla pair (subsystems 0, 1 of
/// the reunited register). Cell index is 2*A + B.
ProjectorSet dht_ancilla_projectors();

struct DhtRun {
  DhtSteps steps;
  std::array<double, 3> step_fidelities;  // against dht_expected_steps
  std::size_t ancilla_outcome;            // 2*A + B
  double outcome_probability;
  StateVector post_state;
  StateVector expected_post_state;        // |A B> (x) expected data pair
  double post_state_fidelity;
};

/// Final destructive measurement of the ancillas on prepared `steps`.
DhtRun dht_finish(DhtSteps steps, DhtVariant variant, SeededRng& rng);

/// Full run: prepare, compare with the expected states, and perform the final
/// destructive measurement of the ancillas. For the swap variant the data
/// pair is |00> whatever the outcome; for the measurement-gate variant it is
/// the copied pair |A B>.
DhtRun dht_run(DhtVariant variant, SeededRng& rng);

}  // namespace nogo
