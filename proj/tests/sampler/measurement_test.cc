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

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "nogo/core/gates.h"
#include "nogo/experiments/bell.h"
#include "nogo/qubit/bloch.h"
#include "nogo/spin1/spin1.h"
#include "support/random.h"

namespace nogo {
namespace {

StateVector rich_blue_state() {
  return StateVector::from_values({3}, {4.0 / 9, 4.0 / 9, 7.0 / 9});
}

std::vector<StateVector> standard_basis(std::size_t n) {
  std::vector<StateVector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(StateVector::basis({n}, i));
  return basis;
}

TEST(MeasureFilter, Examples) {
  testing::TestRandom rnd(1);
  SeededRng rng(1);
  const StateVector s = rnd.state(3);
  for (int i = 0; i < 100; ++i) {
    const FilterOutcome out = measure_filter(s, s, rng);
    ASSERT_TRUE(out.yes);
    ASSERT_TRUE(out.post_state.has_value());
  }
  for (int i = 0; i < 100; ++i) {
    const FilterOutcome out =
        measure_filter(StateVector::basis({2}, 0), StateVector::basis({2}, 1), rng);
    ASSERT_FALSE(out.yes);
    ASSERT_FALSE(out.post_state.has_value());
  }
  const FilterOutcome blue = measure_filter(rich_blue_state(), StateVector::basis({3}, 2), rng);
  EXPECT_NEAR(blue.probability_yes, 49.0 / 81.0, 1e-12);
  EXPECT_THROW(measure_filter(s, StateVector::basis({2}, 0), rng), std::invalid_argument);
}

TEST(MeasureFilter, YesPostStateIsFilter) {
  SeededRng rng(5);
  const StateVector phi = StateVector::basis({3}, 2);
  for (int i = 0; i < 50; ++i) {
    const FilterOutcome out = measure_filter(rich_blue_state(), phi, rng);
    if (out.yes) {
      EXPECT_TRUE(equal_up_to_phase(*out.post_state, phi));
    }
  }
}

TEST(MeasureBasis, Examples) {
  SeededRng rng(2);
  const auto basis = standard_basis(3);
  const MeasurementOutcome same = measure_basis(basis[1], basis, rng);
  EXPECT_EQ(same.index, 1u);
  EXPECT_NEAR(same.probability, 1.0, 1e-15);

  const StateVector s = rich_blue_state();
  std::map<std::size_t, double> seen;
  for (int i = 0; i < 200; ++i) {
    const MeasurementOutcome out = measure_basis(s, basis, rng);
    seen[out.index] = out.probability;
    EXPECT_TRUE(equal_up_to_phase(out.post_state, basis[out.index]));
  }
  EXPECT_NEAR(seen.at(0), 16.0 / 81.0, 1e-12);
  EXPECT_NEAR(seen.at(1), 16.0 / 81.0, 1e-12);
  EXPECT_NEAR(seen.at(2), 49.0 / 81.0, 1e-12);
}

TEST(MeasureBasis, BellStateInProductBasis) {
  testing::TestRandom rnd(3);
  SeededRng rng(3);
  const BlochVector a = rnd.axis();
  const BlochVector b = rnd.axis();
  const std::vector<StateVector> basis = {
      tensor(state_from_bloch(a), state_from_bloch(b)),
      tensor(state_from_bloch(-a), state_from_bloch(b)),
      tensor(state_from_bloch(a), state_from_bloch(-b)),
      tensor(state_from_bloch(-a), state_from_bloch(-b)),
  };
  const BellProbs expected = bell_joint_probs(a, b);
  for (int i = 0; i < 100; ++i) {
    const MeasurementOutcome out = measure_basis(bell_state(), basis, rng);
    EXPECT_NEAR(out.probability, expected[out.index], 1e-12);
  }
}

TEST(MeasureBasis, Rejections) {
  SeededRng rng(4);
  const std::vector<StateVector> incomplete = {StateVector::basis({3}, 0)};
  EXPECT_THROW(measure_basis(rich_blue_state(), incomplete, rng), std::invalid_argument);
  const std::vector<StateVector> repeated = {StateVector::basis({2}, 0),
                                             StateVector::basis({2}, 0)};
  EXPECT_THROW(measure_basis(StateVector::basis({2}, 0), repeated, rng), std::invalid_argument);
}

TEST(MeasureProjective, Examples) {
  testing::TestRandom rnd(5);
  SeededRng rng(5);
  const StateVector s = rnd.state(3);
  const ProjectorSet whole = ProjectorSet::create({Operator::identity(3)});
  const MeasurementOutcome trivial = measure_projective(s, whole, rng);
  EXPECT_NEAR(trivial.probability, 1.0, 1e-12);
  EXPECT_LE(testing::max_abs(trivial.post_state.amplitudes() - s.amplitudes()), 1e-15);

  const BlochVector a = rnd.axis();
  const StateVector basis[] = {state_from_bloch(a), state_from_bloch(-a)};
  const std::size_t left[] = {0};
  const ProjectorSet p_left = lift(ProjectorSet::from_basis(basis), left, {2, 2});
  for (int i = 0; i < 50; ++i) {
    const MeasurementOutcome out = measure_projective(bell_state(), p_left, rng);
    EXPECT_NEAR(out.probability, 0.5, 1e-12);
    const BlochVector mine = out.index == 0 ? a : -a;
    EXPECT_TRUE(
        equal_up_to_phase(out.post_state, tensor(state_from_bloch(mine), state_from_bloch(-mine))));
  }
}

TEST(MeasureProjective, TableStageOne) {
  SeededRng rng(6);
  const StateVector s = StateVector::from_values({3}, {0.6, Complex(0.0, 0.48), 0.64});
  bool saw_zero = false;
  for (int i = 0; i < 200; ++i) {
    const MeasurementOutcome out = measure_projective(s, jsq_projector_set(Axis::x), rng);
    if (out.label == 0.0) {
      saw_zero = true;
      EXPECT_NEAR(out.probability, 0.36, 1e-12);
      EXPECT_TRUE(equal_up_to_phase(out.post_state, StateVector::basis({3}, 0)));
    }
  }
  EXPECT_TRUE(saw_zero);
}

TEST(MeasureProjective, DegenerateCellNeverSelected) {
  SeededRng rng(7);
  const ProjectorSet z = ProjectorSet::from_basis(
      std::vector<StateVector>{StateVector::basis({2}, 0), StateVector::basis({2}, 1)});
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(measure_projective(StateVector::basis({2}, 1), z, rng).index, 1u);
  }
  EXPECT_THROW(measure_projective(StateVector::basis({3}, 0), z, rng), std::invalid_argument);
}

TEST(MeasureProjective, BornExactnessAndRepeatabilityProperty) {
  testing::TestRandom rnd(8);
  SeededRng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const StateVector s = rnd.state(4);
    const BlochVector a = rnd.axis();
    const StateVector basis[] = {state_from_bloch(a), state_from_bloch(-a)};
    const ProjectorSet set =
        lift(ProjectorSet::from_basis(basis), std::vector<std::size_t>{1}, {2, 2});
    const Operator rho = density(s);
    const MeasurementOutcome out = measure_projective(s, set, rng);
    EXPECT_NEAR(out.probability, trace_prob(set[out.index], rho), 1e-12);
    EXPECT_NEAR(out.post_state.norm(), 1.0, 1e-12);
    const MeasurementOutcome again = measure_projective(out.post_state, set, rng);
    EXPECT_EQ(again.index, out.index);
    EXPECT_NEAR(again.probability, 1.0, 1e-12);
  }
}

TEST(SpectralDecomposition, PauliZ) {
  const SpectralDecomposition d = spectral_decomposition(pauli(Axis::z));
  // Labels ascend, so the -1 eigenspace comes first.
  EXPECT_EQ(d.eigenvalues.size(), 2u);
  EXPECT_NEAR(d.eigenvalues[0], -1.0, 1e-12);
  EXPECT_NEAR(d.eigenvalues[1], 1.0, 1e-12);
  EXPECT_LE(max_abs_diff(d.projectors[0], Operator::from_rows({{0.0, 0.0}, {0.0, 1.0}})), 1e-12);
  EXPECT_LE(max_abs_diff(d.projectors[1], Operator::from_rows({{1.0, 0.0}, {0.0, 0.0}})), 1e-12);
}

TEST(SpectralDecomposition, KAndJxSquared) {
  const SpectralDecomposition k = spectral_decomposition(k_operator());
  ASSERT_EQ(k.eigenvalues.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(k.eigenvalues[i], static_cast<double>(i + 1), 1e-12);
    EXPECT_LE(max_abs_diff(k.projectors[i], density(StateVector::basis({3}, i))), 1e-12);
  }
  const SpectralDecomposition jx2 = spectral_decomposition(jsq(Axis::x));
  ASSERT_EQ(jx2.eigenvalues.size(), 2u);
  EXPECT_NEAR(jx2.eigenvalues[0], 0.0, 1e-12);
  EXPECT_NEAR(jx2.eigenvalues[1], 1.0, 1e-12);
  EXPECT_NEAR(jx2.projectors[0].trace().real(), 1.0, 1e-12);
  EXPECT_NEAR(jx2.projectors[1].trace().real(), 2.0, 1e-12);
}

TEST(SpectralDecomposition, ReconstructionProperty) {
  testing::TestRandom rnd(9);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXcd m(4, 4);
    for (Eigen::Index i = 0; i < 16; ++i) m(i) = Complex(rnd.gaussian(), rnd.gaussian());
    const Operator a(m + m.adjoint());
    const SpectralDecomposition d = spectral_decomposition(a);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(4, 4);
    for (std::size_t l = 0; l < d.eigenvalues.size(); ++l) {
      sum += d.eigenvalues[l] * d.projectors[l].matrix();
    }
    EXPECT_LE(testing::max_abs(sum - a.matrix()), 1e-8);
  }
  EXPECT_THROW(spectral_decomposition(Operator::from_rows({{1.0, 1.0}, {0.0, 1.0}})),
               std::invalid_argument);
}

TEST(MeasureOperator, Examples) {
  SeededRng rng(10);
  const MeasurementOutcome z = measure_operator(StateVector::basis({2}, 0), pauli(Axis::z), rng);
  EXPECT_EQ(z.label, 1.0);
  EXPECT_NEAR(z.probability, 1.0, 1e-12);

  const StateVector s = StateVector::from_values({3}, {0.6, Complex(0.0, 0.48), 0.64});
  const double expected[] = {0.36, 0.2304, 0.4096};
  for (int i = 0; i < 100; ++i) {
    const MeasurementOutcome out = measure_operator(s, k_operator(), rng);
    const auto k = static_cast<std::size_t>(std::lround(out.label));
    ASSERT_GE(k, 1u);
    ASSERT_LE(k, 3u);
    EXPECT_NEAR(out.probability, expected[k - 1], 1e-12);
  }
}

TEST(EnumerateBranches, CommutingOrderIndependenceProperty) {
  testing::TestRandom rnd(11);
  const std::size_t first[] = {0};
  const std::size_t second[] = {1};
  for (int trial = 0; trial < 20; ++trial) {
    const BlochVector a = rnd.axis();
    const BlochVector b = rnd.axis();
    const StateVector ba[] = {state_from_bloch(a), state_from_bloch(-a)};
    const StateVector bb[] = {state_from_bloch(b), state_from_bloch(-b)};
    const ProjectorSet pa = lift(ProjectorSet::from_basis(ba), first, {2, 2});
    const ProjectorSet pb = lift(ProjectorSet::from_basis(bb), second, {2, 2});
    const StateVector s = StateVector::normalized(
        {2, 2}, tensor(rnd.state(2), rnd.state(2)).amplitudes() + rnd.state(4).amplitudes());
    const std::vector<ProjectorSet> ab = {pa, pb};
    const std::vector<ProjectorSet> ba_order = {pb, pa};
    std::map<std::pair<std::size_t, std::size_t>, double> p_ab;
    std::map<std::pair<std::size_t, std::size_t>, double> p_ba;
    for (const Branch& br : enumerate_branches(s, ab)) {
      p_ab[{br.outcomes[0], br.outcomes[1]}] = br.probability;
    }
    for (const Branch& br : enumerate_branches(s, ba_order)) {
      p_ba[{br.outcomes[1], br.outcomes[0]}] = br.probability;
    }
    ASSERT_EQ(p_ab.size(), p_ba.size());
    for (const auto& [key, p] : p_ab) {
      EXPECT_NEAR(p, p_ba.at(key), 1e-12);
    }
  }
}

}  // namespace
}  // namespace nogo
