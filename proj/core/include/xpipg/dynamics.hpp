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

#ifndef XPIPG_DYNAMICS_HPP
#define XPIPG_DYNAMICS_HPP

#include <Eigen/Dense>

namespace xpipg {

/// Matrix exponential by truncated Taylor series with scaling and squaring.
/// The matrix is scaled by 2^-s with s the smallest count giving
/// ||M||_inf / 2^s <= 0.5; series terms are summed until a term's infinity
/// norm drops below 1e-16, then the result is squared s times.
Eigen::MatrixXd expm(const Eigen::MatrixXd& m);

struct DiscreteDynamics {
  Eigen::MatrixXd A;  // 2l x 2l
  Eigen::MatrixXd B;  // 2l x l
};

/// Continuous drift of a chain of `masses` unit masses joined by unit springs
/// between two walls: [[0, I], [-L, 0]] with L tridiagonal (2 on the diagonal,
/// -1 off it).
Eigen::MatrixXd mass_chain_drift(int masses);

/// Zero-order-hold discretization of the mass chain with sampling period
/// `dt`. A = exp(dt M); B = (integral_0^dt exp(sM) ds) [0; I], read off the
/// top-right block of exp(dt [[M, E], [0, 0]]) with E = [0; I].
/// Throws std::invalid_argument unless masses >= 1 and dt > 0.
DiscreteDynamics build_dynamics(int masses, double dt);

}  // namespace xpipg

#endif  // XPIPG_DYNAMICS_HPP
