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

#ifndef XPIPG_SPECTRAL_HPP
#define XPIPG_SPECTRAL_HPP

#include <cstdint>

#include "xpipg/sparse_matrix.hpp"

namespace xpipg {

struct NormEstimate {
  double value = 0.0;
  int iterations = 0;
  double residual = 0.0;  // relative change of the estimate at termination
};

inline constexpr double kDefaultPowerTolerance = 1e-9;
inline constexpr int kDefaultPowerMaxIterations = 5000;
// Power iteration approaches the norm from below; step sizes use the estimate
// multiplied by this factor.
inline constexpr double kNormInflation = 1.01;

// |Rayleigh quotient| of a symmetric matrix under power iteration from a
// seeded random unit vector. Zero matrix: value 0 after 0 iterations.
NormEstimate spectral_norm_sym(const SparseMatrix& P,
                               double tol = kDefaultPowerTolerance,
                               int max_iterations = kDefaultPowerMaxIterations,
                               std::uint64_t seed = 0);

// Largest singular value, via power iteration on x -> H^T H x.
NormEstimate spectral_norm_rect(const SparseMatrix& H,
                                double tol = kDefaultPowerTolerance,
                                int max_iterations = kDefaultPowerMaxIterations,
                                std::uint64_t seed = 0);

struct StepSizes {
  double alpha = 0.0;
  double beta = 0.0;
};

// Used when both norms vanish and the admissible alpha is unbounded.
inline constexpr double kAlphaCap = 1e6;

// alpha = safety * 2 / (sqrt(normP^2 + 4 omega normH^2) + normP),
// beta = omega * alpha. For norms that upper-bound ||P|| and ||H|| this gives
// alpha (||P|| + beta ||H||^2) < 1. Throws std::invalid_argument for
// omega <= 0, safety outside (0, 1) or negative norms.
StepSizes step_sizes(double norm_p, double norm_h, double omega = 1.0,
                     double safety = 0.9);

}  // namespace xpipg

#endif  // XPIPG_SPECTRAL_HPP
