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
#include <cstdint>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "nogo/core/gates.h"
#include "nogo/core/projector_set.h"
#include "nogo/core/state_vector.h"
#include "nogo/sampler/seeded_rng.h"
#include "nogo/spin1/frame3.h"
#include "nogo/spin1/spin1.h"

namespace nogo {

/// (|11> + |22> + |33>)/sqrt(3) over two spin-1 systems (dims 3, 3).
StateVector two_spin1_singlet();

/// (|0_nu 0_nu> + |+_nu -_nu> + |-_nu +_nu>)/sqrt(3) built from the J_nu
/// eigenvectors; equal to two_spin1_singlet() for every axis.
StateVector two_spin1_singlet_in_spin_basis(Axis axis);

/// Probabilities of |i_K>|j_K'> where side II uses the frame vectors of
/// `frame`: entry (i, j) is |<i|f_j>|^2 / 3 = R(i, j)^2 / 3 with f_j column j.
Eigen::Matrix3d singlet_joint_frame_probs(const Frame3& frame);

/// Six-cell set {|i_K'><i_K'| (x) P(J_axis'^2 = v)} for both sides using
/// the frame. Cell index is i + 3 v.
ProjectorSet ck_projector_set(const Frame3& frame, Axis axis);

struct CkTrialOutcome {
  int k_value;             // side I: K outcome, 1..3
  JsqTriple triple;        // side I: implied (J_x^2, J_y^2, J_z^2)
  int axis_value;          // side II: J_axis^2 outcome
  bool agree;              // side I's entry for `axis` equals side II's value
};

/// Side I measures the full frame (K), side II only J_axis^2, as one
/// six-projector P-measurement on the singlet.
CkTrialOutcome ck_frame_axis_trial(const Frame3& frame, Axis axis, SeededRng& rng);

/// An ordered frame for the classical model: three distinct axis names.
class OrderedFrame {
 public:
  /// Throws std::invalid_argument for empty or repeated names.
  static OrderedFrame create(std::array<std::string, 3> slots);
  /// Parses "x,y,z" style comma-separated names.
  static OrderedFrame parse(const std::string& text);

  const std::array<std::string, 3>& slots() const noexcept { return slots_; }
  bool contains(const std::string& axis) const;
  std::string to_string() const;

 private:
  explicit OrderedFrame(std::array<std::string, 3> slots) : slots_(std::move(slots)) {}
  std::array<std::string, 3> slots_;
};

/// Both sides run the same roulette with the shared variate r over equal
/// probabilities (1/3, 1/3, 1/3) and report the axis in the chosen slot.
std::pair<std::string, std::string> classical_shared_seed_trial(const OrderedFrame& frame_one,
                                                                const OrderedFrame& frame_two,
                                                                double r);

/// J^2 value a side assigns to `axis` when it selected `selected`: 0 if it
/// is the selected axis, 1 otherwise.
int classical_jsq_value(const std::string& selected, const std::string& axis);

/// Fraction of `trials` shared-variate trials in which both sides assign the
/// same J^2 value to `shared_axis`. Trial t draws r from
/// SeededRng::for_trial(master_seed, t). Throws if either frame lacks the axis.
double classical_agreement_rate(const OrderedFrame& frame_one, const OrderedFrame& frame_two,
                                const std::string& shared_axis, std::uint64_t trials,
                                std::uint64_t master_seed);

/// Exact agreement probability from the roulette intervals.
double classical_agreement_analytic(const OrderedFrame& frame_one, const OrderedFrame& frame_two,
                                    const std::string& shared_axis);

}  // namespace nogo
