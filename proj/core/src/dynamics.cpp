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

#include "xpipg/dynamics.hpp"

#include <stdexcept>

namespace xpipg {

namespace {

double inf_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("expm: matrix must be square");
  }
  const Eigen::Index n = m.rows();
  int squarings = 0;
  double scale = 1.0;
  const double norm = inf_norm(m);
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const Eigen::MatrixXd x = m * scale;

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  // ||x|| <= 0.5 bounds the tail; the cap only guards against NaN input.
  for (int k = 1; k <= 64; ++k) {
    term = term * x / static_cast<double>(k);
    result += term;
    if (inf_norm(term) < 1e-16) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Eigen::MatrixXd mass_chain_drift(int masses) {
  const Eigen::Index l = masses;
  Eigen::MatrixXd drift = Eigen::MatrixXd::Zero(2 * l, 2 * l);
  drift.topRightCorner(l, l).setIdentity();
  for (Eigen::Index i = 0; i < l; ++i) {
    drift(l + i, i) = -2.0;
    if (i > 0) drift(l + i, i - 1) = 1.0;
    if (i + 1 < l) drift(l + i, i + 1) = 1.0;
  }
  return drift;
}

DiscreteDynamics build_dynamics(int masses, double dt) {
  if (masses < 1) throw std::invalid_argument("build_dynamics: masses < 1");
  if (!(dt > 0.0)) throw std::invalid_argument("build_dynamics: dt <= 0");
  const Eigen::Index l = masses;
  Eigen::MatrixXd augmented = Eigen::MatrixXd::Zero(3 * l, 3 * l);
  augmented.topLeftCorner(2 * l, 2 * l) = mass_chain_drift(masses);
  augmented.block(l, 2 * l, l, l).setIdentity();
  const Eigen::MatrixXd e = expm(dt * augmented);
  return {e.topLeftCorner(2 * l, 2 * l), e.topRightCorner(2 * l, l)};
}

}  // namespace xpipg
