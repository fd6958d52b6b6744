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

#include "nogo/experiments/ks_color.h"

#include <stdexcept>

#include <gtest/gtest.h>

#include "support/random.h"

namespace nogo {
namespace {

TEST(ColorState, Validation) {
  EXPECT_THROW(ColorState::create(1.0, 1.0, 0.0), std::invalid_argument);
  EXPECT_NO_THROW(ColorState::create(0.0, 0.6, 0.8));
}

TEST(KsFilterProb, Examples) {
  EXPECT_NEAR(ks_filter_prob(rich_blue(), ColorState::create(0, 0, 1)), 49.0 / 81.0, 1e-12);
  EXPECT_NEAR(ks_filter_prob(rich_blue(), cadet_blue()), (26.0 / 27.0) * (26.0 / 27.0), 1e-12);
  EXPECT_NEAR(ks_filter_prob(cadet_blue(), cadet_blue()), 1.0, 1e-12);
}

TEST(KsFrameProbs, Examples) {
  const auto p = ks_frame_probs(rich_blue(), Frame3::identity());
  EXPECT_NEAR(p[0], 16.0 / 81.0, 1e-12);
  EXPECT_NEAR(p[1], 16.0 / 81.0, 1e-12);
  EXPECT_NEAR(p[2], 49.0 / 81.0, 1e-12);
  const auto aligned = ks_frame_probs(ColorState::create(1, 0, 0), Frame3::identity());
  EXPECT_EQ(aligned[0], 1.0);
  EXPECT_EQ(aligned[1], 0.0);
  EXPECT_EQ(aligned[2], 0.0);
}

TEST(KsFrameProbs, SumToOneProperty) {
  testing::TestRandom rnd(31);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Vector3d v = rnd.unit_vector();
    const auto p = ks_frame_probs(ColorState::create(v.x(), v.y(), v.z()), rnd.rotation());
    EXPECT_NEAR(p[0] + p[1] + p[2], 1.0, 1e-12);
  }
}

TEST(KsIndependentYes, PrintedPercentages) {
  const auto p = ks_frame_probs(rich_blue(), Frame3::identity());
  const auto n = ks_independent_yes(p[0], p[1], p[2]);
  const double printed[] = {0.254, 0.515, 0.207, 0.024};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(n[k], printed[k], 5e-4) << k;
  // Frozen from tests/oracles/physics_oracle.py.
  EXPECT_NEAR(n[0], 0.25440265241108606, 1e-15);
  EXPECT_NEAR(n[1], 0.51479844422993337, 1e-15);
  EXPECT_NEAR(n[2], 0.20719515430687507, 1e-15);
  EXPECT_NEAR(n[3], 0.023603749052105501, 1e-15);
  EXPECT_NEAR(n[0] + n[1] + n[2] + n[3], 1.0, 1e-12);
}

TEST(KsIndependentYes, Examples) {
  const auto one = ks_independent_yes(1, 0, 0);
  EXPECT_EQ(one[0], 0.0);
  EXPECT_EQ(one[1], 1.0);
  EXPECT_EQ(one[2], 0.0);
  EXPECT_EQ(one[3], 0.0);
  const auto none = ks_independent_yes(0, 0, 0);
  EXPECT_EQ(none[0], 1.0);
  EXPECT_THROW(ks_independent_yes(1.2, 0, 0), std::invalid_argument);
  EXPECT_THROW(ks_independent_yes(0, -0.1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace nogo
