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

// Two-point boundary-value optimal control of a chain of oscillating masses,
// written as a conic QP. With l masses and horizon tau the decision vector is
//
//   z = (x_0, ..., x_tau, u_0, ..., u_{tau-1}),   n = 2l(tau+1) + l tau,
//
// states time-major, each x_t of length 2l (positions then velocities). The
// objective is 1/2 ||z||^2, the rows of H encode x_{t+1} - A x_t - B u_t = 0
// (m = 2 l tau, K = {0}), and D pins x_0 to the initial state and x_tau to
// zero while bounding interior states and all inputs in the infinity norm.

#ifndef XPIPG_OSCILLATING_MASSES_HPP
#define XPIPG_OSCILLATING_MASSES_HPP

#include <cstdint>

#include "xpipg/problem.hpp"

namespace xpipg {

struct OscMassParams {
  int masses = 1;
  int horizon = 2;
  double sampling_period = 0.1;
  double state_bound = 1.0;
  double input_bound = 0.5;
  Vector initial_state;  // length 2 * masses
};

// Throws std::invalid_argument for masses < 1, horizon < 2, non-positive
// period or bounds, or a wrong-length initial state.
ConicQP oscillating_masses(const OscMassParams& params);

// Column offset of x_t and u_t inside z.
Index state_offset(const OscMassParams& params, int t);
Index input_offset(const OscMassParams& params, int t);

// x0 ~ Normal([gamma 1_l; 0_l], sigma^2 I), drawn from CounterRng(seed).
Vector sample_initial_state(int masses, double gamma, double sigma,
                            std::uint64_t seed);

}  // namespace xpipg

#endif  // XPIPG_OSCILLATING_MASSES_HPP
