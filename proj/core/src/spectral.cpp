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

#include "xpipg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xpipg/random.hpp"

namespace xpipg {

namespace {

bool all_zero(const SparseMatrix& a) {
  for (const Triplet& t : a.triplets()) {
    if (t.value != 0.0) return false;
  }
  return true;
}

Vector random_unit_vector(Index n, std::uint64_t seed) {
  CounterRng rng(seed);
  Vector x(n);
  for (Index i = 0; i < n; ++i) x[i] = rng.normal();
  return x / x.norm();
}

// Power iteration for the dominant eigenvalue magnitude of a symmetric
// operator given by `apply`.
template <typename Apply>
NormEstimate power_iteration(Index n, Apply apply, double tol,
                             int max_iterations, std::uint64_t seed) {
  Vector x = random_unit_vector(n, seed);
  Vector y(n);
  NormEstimate est;
  double previous = 0.0;
  for (int k = 1; k <= max_iterations; ++k) {
    apply(x, y);
    const double rayleigh = std::abs(x.dot(y));
    const double y_norm = y.norm();
    est.value = rayleigh;
    est.iterations = k;
    if (y_norm == 0.0) {
      // x fell into the null space; nothing more to learn from this start.
      est.residual = 0.0;
      break;
    }
    est.residual = std::abs(rayleigh - previous) / std::max(rayleigh, 1e-300);
    if (k > 1 && est.residual < tol) break;
    previous = rayleigh;
    x = y / y_norm;
  }
  return est;
}

}  // namespace

NormEstimate spectral_norm_sym(const SparseMatrix& P, double tol,
                               int max_iterations, std::uint64_t seed) {
  if (P.rows() != P.cols()) {
    throw std::invalid_argument("spectral_norm_sym: matrix must be square");
  }
  if (P.rows() == 0 || all_zero(P)) return {};
  return power_iteration(
      P.rows(), [&](const Vector& x, Vector& y) { P.multiply(x, y); }, tol,
      max_iterations, seed);
}

NormEstimate spectral_norm_rect(const SparseMatrix& H, double tol,
                                int max_iterations, std::uint64_t seed) {
  if (H.rows() == 0 || H.cols() == 0 || all_zero(H)) return {};
  Vector hx(H.rows());
  NormEstimate est = power_iteration(
      H.cols(),
      [&](const Vector& x, Vector& y) {
        H.multiply(x, hx);
        H.multiply_transposed(hx, y);
      },
      tol, max_iterations, seed);
  est.value = std::sqrt(est.value);
  return est;
}

StepSizes step_sizes(double norm_p, double norm_h, double omega,
                     double safety) {
  if (!(omega > 0.0)) throw std::invalid_argument("step_sizes: omega <= 0");
  if (!(safety > 0.0 && safety < 1.0)) {
    throw std::invalid_argument("step_sizes: safety outside (0, 1)");
  }
  if (!(norm_p >= 0.0) || !(norm_h >= 0.0)) {
    throw std::invalid_argument("step_sizes: negative norm");
  }
  const double denominator =
      std::sqrt(norm_p * norm_p + 4.0 * omega * norm_h * norm_h) + norm_p;
  const double alpha =
      denominator == 0.0 ? safety * kAlphaCap : safety * 2.0 / denominator;
  return {alpha, omega * alpha};
}

}  // namespace xpipg
