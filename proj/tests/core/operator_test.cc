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

#include "nogo/core/operator.h"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "nogo/core/gates.h"
#include "nogo/qubit/bloch.h"
#include "support/random.h"

namespace nogo {
namespace {

const double kS = 1.0 / std::sqrt(2.0);

TEST(Operator, RejectsNonSquare) {
  EXPECT_THROW(Operator(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
  EXPECT_THROW(Operator(Eigen::MatrixXcd(0, 0)), std::invalid_argument);
  EXPECT_THROW(Operator::from_rows({{1.0, 0.0}, {0.0}}), std::invalid_argument);
}

TEST(Operator, Predicates) {
  const Operator h = Complex(kS) * Operator::from_rows({{1.0, 1.0}, {1.0, -1.0}});
  EXPECT_TRUE(h.is_unitary());
  EXPECT_TRUE(h.is_hermitian());
  EXPECT_FALSE(h.is_projector());
  const Operator p0 = Operator::from_rows({{1.0, 0.0}, {0.0, 0.0}});
  EXPECT_TRUE(p0.is_projector());
  EXPECT_FALSE(p0.is_unitary());
  const Operator upper = Operator::from_rows({{1.0, 1.0}, {0.0, 1.0}});
  EXPECT_FALSE(upper.is_hermitian());
  EXPECT_FALSE(upper.is_unitary());
}

TEST(Apply, Examples) {
  testing::TestRandom rnd(1);
  const StateVector s = rnd.state(2);
  EXPECT_LE(testing::max_abs(apply(Operator::identity(2), s).amplitudes() - s.amplitudes()), 0.0);

  const StateVector flipped = apply(pauli(Axis::x), StateVector::basis({2}, 0));
  EXPECT_EQ(flipped[1], Complex(1.0));

  const StateVector zero_one = StateVector::basis({2, 2}, 1);
  EXPECT_EQ(apply(swap_gate(), zero_one)[2], Complex(1.0));
}

TEST(Apply, RejectsNonUnitaryEveryTime) {
  const Operator p0 = Operator::from_rows({{1.0, 0.0}, {0.0, 0.0}});
  const StateVector s = StateVector::basis({2}, 0);
  EXPECT_THROW(apply(p0, s), std::invalid_argument);
  EXPECT_THROW(apply(p0, s), std::invalid_argument);
  EXPECT_THROW(apply(Operator::identity(3), s), std::invalid_argument);
}

TEST(Apply, PreservesNormProperty) {
  testing::TestRandom rnd(2);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::MatrixXcd m(4, 4);
    for (Eigen::Index i = 0; i < 16; ++i) m(i) = Complex(rnd.gaussian(), rnd.gaussian());
    const Operator u(Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ());
    ASSERT_TRUE(u.is_unitary());
    const StateVector out = apply(u, rnd.state(4));
    EXPECT_NEAR(out.norm(), 1.0, 1e-10);
  }
}

TEST(Apply, ConcurrentUseOfOneOperator) {
  const Operator u = swap_gate();
  const StateVector s = StateVector::basis({2, 2}, 1);
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 200; ++i) ok[t] += apply(u, s)[2] == Complex(1.0) ? 1 : 0;
    });
  }
  for (auto& th : threads) th.join();
  for (int c : ok) EXPECT_EQ(c, 200);
}

TEST(Lift, Examples) {
  const Dims dims{2, 2};
  const std::size_t first[] = {0};
  const std::size_t second[] = {1};
  const Operator z = pauli(Axis::z);
  EXPECT_LE(max_abs_diff(lift(z, first, dims), kron(z, Operator::identity(2))), 0.0);
  const Operator pa = axis_projector(BlochVector::create(kS, 0.0, kS));
  EXPECT_LE(max_abs_diff(lift(pa, second, dims), kron(Operator::identity(2), pa)), 0.0);
}

TEST(Lift, OrderedTargets) {
  const Dims dims{2, 2};
  const std::size_t reversed[] = {1, 0};
  const Operator m = measurement_gate();
  // Factor k acts on targets[k], so {1,0} equals conjugation by the swap.
  const Operator expected = swap_gate() * m * swap_gate();
  EXPECT_LE(max_abs_diff(lift(m, reversed, dims), expected), 1e-15);
}

TEST(Lift, Errors) {
  const Dims dims{2, 2, 2};
  const std::size_t overlap[] = {1, 1};
  const std::size_t out_of_range[] = {3};
  const std::size_t one[] = {0};
  EXPECT_THROW(lift(swap_gate(), overlap, dims), std::invalid_argument);
  EXPECT_THROW(lift(pauli(Axis::x), out_of_range, dims), std::invalid_argument);
  EXPECT_THROW(lift(swap_gate(), one, dims), std::invalid_argument);
}

TEST(Lift, DisjointTargetsCommuteProperty) {
  testing::TestRandom rnd(4);
  const Dims dims{2, 3};
  const std::size_t first[] = {0};
  const std::size_t second[] = {1};
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXcd a(2, 2);
    Eigen::MatrixXcd b(3, 3);
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = Complex(rnd.gaussian(), rnd.gaussian());
    for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = Complex(rnd.gaussian(), rnd.gaussian());
    const Operator la = lift(Operator(a), first, dims);
    const Operator lb = lift(Operator(b), second, dims);
    EXPECT_LE(max_abs_diff(la * lb, lb * la), 1e-12);
  }
}

TEST(Lift, MiddleSubsystem) {
  testing::TestRandom rnd(8);
  const StateVector a = rnd.state(2);
  const StateVector b = rnd.state(2);
  const StateVector c = rnd.state(2);
  const std::size_t middle[] = {1};
  const StateVector out = apply(lift(pauli(Axis::y), middle, {2, 2, 2}), tensor(tensor(a, b), c));
  const StateVector expected = tensor(tensor(a, apply(pauli(Axis::y), b)), c);
  EXPECT_LE(testing::max_abs(out.amplitudes() - expected.amplitudes()), 1e-15);
}

TEST(Density, Examples) {
  const Operator d0 = density(StateVector::basis({2}, 0));
  EXPECT_LE(max_abs_diff(d0, Operator::from_rows({{1.0, 0.0}, {0.0, 0.0}})), 0.0);

  const Operator dp = density(StateVector::from_values({2}, {kS, kS}));
  EXPECT_LE(max_abs_diff(dp, Operator::from_rows({{0.5, 0.5}, {0.5, 0.5}})), 1e-15);
  EXPECT_TRUE(dp.is_projector());
  EXPECT_NEAR(dp.trace().real(), 1.0, 1e-15);

  const Operator de = density(equator_state(BlochVector::create(1.0, 0.0, 0.0)));
  const Operator half_i_plus_x =
      Complex(0.5) * (Operator::identity(2) + pauli(Axis::x));
  EXPECT_LE(max_abs_diff(de, half_i_plus_x), 1e-15);
}

TEST(TraceProb, Examples) {
  testing::TestRandom rnd(9);
  for (int trial = 0; trial < 20; ++trial) {
    const BlochVector a = rnd.axis();
    const BlochVector b = rnd.axis();
    const Operator rho = axis_density(a);
    EXPECT_NEAR(trace_prob(Operator::identity(2), rho), 1.0, 1e-12);
    EXPECT_NEAR(trace_prob(axis_projector(a), rho), 1.0, 1e-12);
    EXPECT_NEAR(trace_prob(axis_projector(b), rho), 0.5 * (1.0 + a.dot(b)), 1e-12);
  }
  EXPECT_THROW(trace_prob(Operator::identity(3), Operator::identity(2)), std::invalid_argument);
}

TEST(Outer, Rank1) {
  const Operator o = outer(StateVector::basis({2}, 0), StateVector::basis({2}, 1));
  EXPECT_EQ(o(0, 1), Complex(1.0));
  EXPECT_EQ(o(1, 0), Complex(0.0));
}

}  // namespace
}  // namespace nogo
