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
#include <cstddef>

#include "nogo/core/projector_set.h"
#include "nogo/core/state_vector.h"
#include "nogo/qubit/bloch.h"
#include "nogo/sampler/seeded_rng.h"

namespace nogo {

/// Singlet (|01> - |10>)/sqrt(2).
StateVector bell_state();

/// Outcome cells of a two-axis measurement on the singlet, in the order
/// (+a,+b), (-a,+b), (+a,-b), (-a,-b).
using BellProbs = std::array<double, 4>;

/// Cell index for signs (+1 / -1) of the two sides.
std::size_t bell_cell(int alice, int bob);

/// Closed form: (1-a.b)/4, (1+a.b)/4, (1+a.b)/4, (1-a.b)/4.
BellProbs bell_joint_probs(const BlochVector& a, const BlochVector& b);

/// The same four numbers computed as Tr((P_{+-a} (x) P_{+-b}) rho) on the
/// singlet density matrix.
BellProbs bell_joint_probs_born(const BlochVector& a, const BlochVector& b);

/// E(a,b) = -a.b.
double bell_correlator(const BlochVector& a, const BlochVector& b);

/// p++ - p-+ - p+- + p--.
double correlator_from_probs(const BellProbs& p);

/// Four-cell product set P_{+-a} (x) P_{+-b}, cell order as BellProbs.
ProjectorSet bell_product_set(const BlochVector& a, const BlochVector& b);

struct BellInequality {
  double lhs;  // |E(a,b) - E(a,c)|
  double rhs;  // 1 - E(b,c)
  bool violated;
};

BellInequality bell_original_inequality(const BlochVector& a, const BlochVector& b,
                                        const BlochVector& c);

/// S = E(a,b) + E(b,c) + E(c,d) - E(d,a).
double chsh(const BlochVector& a, const BlochVector& b, const BlochVector& c,
            const BlochVector& d);

struct ChshScanResult {
  double max_abs_s;
  std::array<double, 4> angles;  // equatorial azimuths (radians) of a, b, c, d
};

/// Grid search for max |S| over coplanar (equatorial) axes on a uniform grid
/// of `steps` angles in [0, 2pi), followed by three refinement passes that
/// halve the step around the best point. a is pinned at angle 0 since S only
/// depends on angle differences. Throws for steps < 4.
ChshScanResult chsh_scan(int steps);

/// Largest |S| reachable by a local deterministic strategy that assigns a
/// fixed +-1 to each of the four axes (all 16 assignments).
double local_deterministic_chsh_max();

enum class BellMode { simultaneous, left_then_right, right_then_left };

struct BellTrialOutcome {
  int alice;  // +1 / -1 along a
  int bob;    // +1 / -1 along b
  std::size_t cell;
};

/// One measurement of the singlet along a (left) and b (right).
///
/// simultaneous: one four-cell P-measurement, i.e. a single roulette draw.
/// left_then_right / right_then_left: two partial P-measurements
/// P_{+-a} (x) I and I (x) P_{+-b} in the given order.
BellTrialOutcome bell_trial(const BlochVector& a, const BlochVector& b, BellMode mode,
                            SeededRng& rng);

}  // namespace nogo
