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

#include <stdexcept>
#include <vector>

#include "xpipg/dynamics.hpp"
#include "xpipg/random.hpp"

namespace xpipg {

namespace {

void check_params(const OscMassParams& p) {
  if (p.masses < 1) throw std::invalid_argument("oscillating_masses: l < 1");
  if (p.horizon < 2) throw std::invalid_argument("oscillating_masses: tau < 2");
  if (!(p.sampling_period > 0.0)) {
    throw std::invalid_argument("oscillating_masses: sampling period <= 0");
  }
  if (!(p.state_bound > 0.0) || !(p.input_bound > 0.0)) {
    throw std::invalid_argument("oscillating_masses: bounds must be positive");
  }
  if (p.initial_state.size() != 2 * static_cast<Index>(p.masses)) {
    throw std::invalid_argument(
        "oscillating_masses: initial state must have length 2l");
  }
}

}  // namespace

Index state_offset(const OscMassParams& p, int t) {
  return 2 * static_cast<Index>(p.masses) * t;
}

Index input_offset(const OscMassParams& p, int t) {
  const Index l = p.masses;
  return 2 * l * (p.horizon + 1) + l * t;
}

ConicQP oscillating_masses(const OscMassParams& p) {
  check_params(p);
  const Index l = p.masses;
  const Index nx = 2 * l;
  const int tau = p.horizon;
  const Index n = 3 * tau * l + 2 * l;
  const Index m = 2 * tau * l;

  const DiscreteDynamics dyn = build_dynamics(p.masses, p.sampling_period);

  std::vector<Triplet> h;
  h.reserve(static_cast<std::size_t>(tau * nx * (1 + nx + l)));
  for (int t = 0; t < tau; ++t) {
    const Index row0 = nx * t;
    const Index xt = state_offset(p, t);
    const Index xnext = state_offset(p, t + 1);
    const Index ut = input_offset(p, t);
    for (Index i = 0; i < nx; ++i) {
      // Columns ascending within the row: x_t, x_{t+1}, u_t.
      for (Index j = 0; j < nx; ++j) {
        if (dyn.A(i, j) != 0.0) h.push_back({row0 + i, xt + j, -dyn.A(i, j)});
      }
      h.push_back({row0 + i, xnext + i, 1.0});
      for (Index j = 0; j < l; ++j) {
        if (dyn.B(i, j) != 0.0) h.push_back({row0 + i, ut + j, -dyn.B(i, j)});
      }
    }
  }

  BoxProduct box{Vector(n), Vector(n)};
  box.lower.segment(0, nx) = p.initial_state;
  box.upper.segment(0, nx) = p.initial_state;
  for (int t = 1; t < tau; ++t) {
    box.lower.segment(state_offset(p, t), nx).setConstant(-p.state_bound);
    box.upper.segment(state_offset(p, t), nx).setConstant(p.state_bound);
  }
  box.lower.segment(state_offset(p, tau), nx).setZero();
  box.upper.segment(state_offset(p, tau), nx).setZero();
  box.lower.segment(input_offset(p, 0), l * tau).setConstant(-p.input_bound);
  box.upper.segment(input_offset(p, 0), l * tau).setConstant(p.input_bound);

  return ConicQP{SparseMatrix::identity(n),
                 Vector::Zero(n),
                 SparseMatrix::from_triplets(m, n, std::move(h)),
                 Vector::Zero(m),
                 ConeSpec::zero(m),
                 std::move(box)};
}

Vector sample_initial_state(int masses, double gamma, double sigma,
                            std::uint64_t seed) {
  if (masses < 1) throw std::invalid_argument("sample_initial_state: l < 1");
  if (!(sigma >= 0.0)) {
    throw std::invalid_argument("sample_initial_state: sigma < 0");
  }
  CounterRng rng(seed);
  const Index l = masses;
  Vector x0(2 * l);
  for (Index i = 0; i < 2 * l; ++i) {
    const double mean = i < l ? gamma : 0.0;
    x0[i] = mean + sigma * rng.normal();
  }
  return x0;
}

}  // namespace xpipg
