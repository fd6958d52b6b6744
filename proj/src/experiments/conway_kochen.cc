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

#include "nogo/experiments/conway_kochen.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nogo/sampler/measurement.h"
#include "nogo/sampler/roulette.h"

namespace nogo {

namespace {

constexpr std::array<double, 3> kUniformThird = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

void require_shared(const OrderedFrame& one, const OrderedFrame& two, const std::string& axis) {
  if (!one.contains(axis) || !two.contains(axis)) {
    throw std::invalid_argument("axis '" + axis + "' is not shared by both frames");
  }
}

}  // namespace

StateVector two_spin1_singlet() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(9);
  const double s = 1.0 / std::sqrt(3.0);
  v(0) = s;
  v(4) = s;
  v(8) = s;
  return StateVector::from_amplitudes({3, 3}, std::move(v));
}

StateVector two_spin1_singlet_in_spin_basis(Axis axis) {
  const SpinEigenbasis e = spin_eigenbasis(axis);
  const Eigen::VectorXcd sum = tensor(e.zero, e.zero).amplitudes() +
                               tensor(e.plus, e.minus).amplitudes() +
                               tensor(e.minus, e.plus).amplitudes();
  return StateVector::from_amplitudes({3, 3}, sum / std::sqrt(3.0));
}

Eigen::Matrix3d singlet_joint_frame_probs(const Frame3& frame) {
  const Eigen::Matrix3d& r = frame.matrix();
  Eigen::Matrix3d p;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      p(i, j) = r(i, j) * r(i, j) / 3.0;
    }
  }
  return p;
}

ProjectorSet ck_projector_set(const Frame3& frame, Axis axis) {
  std::vector<Operator> k_cells;
  for (const StateVector& e : k_eigenbasis()) {
    k_cells.push_back(conjugate_by_frame(density(e), frame));
  }
  const ProjectorSet side_one = ProjectorSet::create(std::move(k_cells), {1.0, 2.0, 3.0});
  return product(side_one, jsq_projector_set(axis, frame));
}

CkTrialOutcome ck_frame_axis_trial(const Frame3& frame, Axis axis, SeededRng& rng) {
  const MeasurementOutcome out =
      measure_projective(two_spin1_singlet(), ck_projector_set(frame, axis), rng);
  const int k_value = static_cast<int>(out.index % 3) + 1;
  const int axis_value = static_cast<int>(out.index / 3);
  const JsqTriple triple = k_value_to_jsq_triple(k_value);
  return {k_value, triple, axis_value, triple[static_cast<std::size_t>(axis)] == axis_value};
}

OrderedFrame OrderedFrame::create(std::array<std::string, 3> slots) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (slots[i].empty()) {
      throw std::invalid_argument("frame slot names must be non-empty");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (slots[i] == slots[j]) {
        throw std::invalid_argument("frame slot names must be distinct");
      }
    }
  }
  return OrderedFrame(std::move(slots));
}

OrderedFrame OrderedFrame::parse(const std::string& text) {
  std::array<std::string, 3> slots;
  std::stringstream in(text);
  std::string item;
  std::size_t n = 0;
  while (std::getline(in, item, ',')) {
    if (n == 3) {
      throw std::invalid_argument("frame needs exactly three axis names: '" + text + "'");
    }
    slots[n++] = item;
  }
  if (n != 3) {
    throw std::invalid_argument("frame needs exactly three axis names: '" + text + "'");
  }
  return create(std::move(slots));
}

bool OrderedFrame::contains(const std::string& axis) const {
  return std::find(slots_.begin(), slots_.end(), axis) != slots_.end();
}

std::string OrderedFrame::to_string() const {
  return slots_[0] + "," + slots_[1] + "," + slots_[2];
}

std::pair<std::string, std::string> classical_shared_seed_trial(const OrderedFrame& frame_one,
                                                                const OrderedFrame& frame_two,
                                                                double r) {
  return {frame_one.slots()[roulette(r, kUniformThird)],
          frame_two.slots()[roulette(r, kUniformThird)]};
}

int classical_jsq_value(const std::string& selected, const std::string& axis) {
  return selected == axis ? 0 : 1;
}

double classical_agreement_rate(const OrderedFrame& frame_one, const OrderedFrame& frame_two,
                                const std::string& shared_axis, std::uint64_t trials,
                                std::uint64_t master_seed) {
  require_shared(frame_one, frame_two, shared_axis);
  if (trials == 0) {
    throw std::invalid_argument("trials must be positive");
  }
  std::uint64_t agree = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SeededRng rng = SeededRng::for_trial(master_seed, t);
    const auto [one, two] = classical_shared_seed_trial(frame_one, frame_two, rng.uniform());
    if (classical_jsq_value(one, shared_axis) == classical_jsq_value(two, shared_axis)) {
      ++agree;
    }
  }
  return static_cast<double>(agree) / static_cast<double>(trials);
}

double classical_agreement_analytic(const OrderedFrame& frame_one, const OrderedFrame& frame_two,
                                    const std::string& shared_axis) {
  require_shared(frame_one, frame_two, shared_axis);
  // Cells [c_{i-1}, c_i) of side one against [d_{j-1}, d_j) of side two.
  double rate = 0.0;
  double lo_one = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double hi_one = lo_one + kUniformThird[i];
    double lo_two = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
      const double hi_two = lo_two + kUniformThird[j];
      const double overlap = std::max(0.0, std::min(hi_one, hi_two) - std::max(lo_one, lo_two));
      if (classical_jsq_value(frame_one.slots()[i], shared_axis) ==
          classical_jsq_value(frame_two.slots()[j], shared_axis)) {
        rate += overlap;
      }
      lo_two = hi_two;
    }
    lo_one = hi_one;
  }
  return rate;
}

}  // namespace nogo
