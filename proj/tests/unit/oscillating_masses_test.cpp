// Copyright 2026 The xPIPG Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xpipg/oscillating_masses.hpp"

#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "xpipg/dynamics.hpp"
#include "xpipg/random.hpp"

namespace xpipg {
namespace {

OscMassParams params(int l, int tau, std::uint64_t seed = 3) {
  OscMassParams p;
  p.masses = l;
  p.horizon = tau;
  p.initial_state = sample_initial_state(l, 0.1, 0.05, seed);
  return p;
}

TEST(OscillatingMassesTest, Dimensions) {
  for (int l : {1, 2, 4}) {
    for (int tau : {2, 5, 20}) {
      const ConicQP qp = oscillating_masses(params(l, tau));
      EXPECT_EQ(qp.num_variables(), 3 * tau * l + 2 * l);
      EXPECT_EQ(qp.num_constraints(), 2 * tau * l);
      EXPECT_TRUE(validate(qp).empty());
      EXPECT_TRUE(qp.cone.all_zero());
      EXPECT_EQ(qp.cone.dim(), 2 * tau * l);
      EXPECT_EQ(qp.P.to_dense(), Eigen::MatrixXd::Identity(qp.num_variables(), qp.num_variables()));
      EXPECT_EQ(qp.q, Vector::Zero(qp.num_variables()));
      EXPECT_EQ(qp.g, Vector::Zero(qp.num_constraints()));
    }
  }
}

TEST(OscillatingMassesTest, SingleMassBlockPattern) {
  const OscMassParams p = params(1, 2);
  const ConicQP qp = oscillating_masses(p);
  ASSERT_EQ(qp.num_variables(), 8);
  ASSERT_EQ(qp.num_constraints(), 4);
  const DiscreteDynamics d = build_dynamics(1, p.sampling_period);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(4, 8);
  for (int t = 0; t < 2; ++t) {
    expected.block(2 * t, 2 * t, 2, 2) = -d.A;
    expected.block(2 * t, 2 * (t + 1), 2, 2) += Eigen::MatrixXd::Identity(2, 2);
    expected.block(2 * t, 6 + t, 2, 1) = -d.B;
  }
  EXPECT_EQ(qp.H.to_dense(), expected);
}

TEST(OscillatingMassesTest, RowsTouchOnlyAdjacentBlocks) {
  const OscMassParams p = params(3, 6);
  const ConicQP qp = oscillating_masses(p);
  const Index sdim = 2 * p.masses;
  for (const Triplet& t : qp.H.triplets()) {
    const int step = static_cast<int>(t.row / sdim);
    const bool in_x = t.col >= state_offset(p, step) && t.col < state_offset(p, step + 2);
    const bool in_u = t.col >= input_offset(p, step) && t.col < input_offset(p, step + 1);
    EXPECT_TRUE(in_x || in_u) << "row " << t.row << " col " << t.col;
  }
}

TEST(OscillatingMassesTest, PinnedBounds) {
  const OscMassParams p = params(2, 4);
  const ConicQP qp = oscillating_masses(p);
  for (Index i = 0; i < 4; ++i) {
    EXPECT_EQ(qp.box.lower[state_offset(p, 0) + i], p.initial_state[i]);
    EXPECT_EQ(qp.box.upper[state_offset(p, 0) + i], p.initial_state[i]);
    EXPECT_EQ(qp.box.lower[state_offset(p, 4) + i], 0.0);
    EXPECT_EQ(qp.box.upper[state_offset(p, 4) + i], 0.0);
    EXPECT_EQ(qp.box.lower[state_offset(p, 2) + i], -1.0);
    EXPECT_EQ(qp.box.upper[state_offset(p, 2) + i], 1.0);
  }
  EXPECT_EQ(qp.box.lower[input_offset(p, 0)], -0.5);
  EXPECT_EQ(qp.box.upper[input_offset(p, 3) + 1], 0.5);
}

TEST(OscillatingMassesTest, RolledOutTrajectorySatisfiesDynamics) {
  for (int l : {1, 3, 5}) {
    const OscMassParams p = params(l, 12, 17 + l);
    const ConicQP qp = oscillating_masses(p);
    const DiscreteDynamics d = build_dynamics(l, p.sampling_period);
    CounterRng rng(99);
    Vector z = Vector::Zero(qp.num_variables());
    Vector x = p.initial_state;
    z.segment(state_offset(p, 0), 2 * l) = x;
    for (int t = 0; t < p.horizon; ++t) {
      Vector u(l);
      for (int i = 0; i < l; ++i) u[i] = rng.uniform() - 0.5;
      z.segment(input_offset(p, t), l) = u;
      x = d.A * x + d.B * u;
      z.segment(state_offset(p, t + 1), 2 * l) = x;
    }
    EXPECT_LE((qp.H * z - qp.g).lpNorm<Eigen::Infinity>(), 1e-10);
  }
}

TEST(OscillatingMassesTest, RejectsInvalidParams) {
  OscMassParams p = params(2, 3);
  p.horizon = 1;
  EXPECT_THROW(oscillating_masses(p), std::invalid_argument);
  p = params(2, 3);
  p.sampling_period = 0.0;
  EXPECT_THROW(oscillating_masses(p), std::invalid_argument);
  p = params(2, 3);
  p.input_bound = 0.0;
  EXPECT_THROW(oscillating_masses(p), std::invalid_argument);
  p = params(2, 3);
  p.initial_state = Vector::Zero(3);
  EXPECT_THROW(oscillating_masses(p), std::invalid_argument);
}

TEST(SampleInitialStateTest, DegenerateAndDeterministic) {
  const Vector x = sample_initial_state(3, 0.8, 0.0, 12);
  Vector expected(6);
  expected << 0.8, 0.8, 0.8, 0.0, 0.0, 0.0;
  EXPECT_EQ(x, expected);
  EXPECT_EQ(sample_initial_state(4, 0.1, 0.05, 7), sample_initial_state(4, 0.1, 0.05, 7));
  EXPECT_NE(sample_initial_state(4, 0.1, 0.05, 7), sample_initial_state(4, 0.1, 0.05, 8));
  EXPECT_THROW(sample_initial_state(2, 0.1, -1.0, 0), std::invalid_argument);
}

}  // namespace
}  // namespace xpipg
