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

#include "xpipg/projections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace xpipg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// max over the interval [lo, hi] of c * v with 0 * inf = 0.
double interval_sup(double lo, double hi, double v) {
  if (v > 0.0) return hi * v;
  if (v < 0.0) return lo * v;
  return 0.0;
}

void project_soc(Eigen::Ref<Vector> y) {
  const double t = y[0];
  const double norm_x = y.tail(y.size() - 1).norm();
  if (norm_x <= t) return;
  if (norm_x <= -t) {
    y.setZero();
    return;
  }
  const double scale = 0.5 * (t + norm_x);
  y.tail(y.size() - 1) *= scale / norm_x;
  y[0] = scale;
}

}  // namespace

void project_box_in_place(Vector& z, const BoxProduct& box) {
  z = z.cwiseMax(box.lower).cwiseMin(box.upper);
}

Vector project_box(const Vector& z, const BoxProduct& box) {
  Vector out = z;
  project_box_in_place(out, box);
  return out;
}

void project_cone_in_place(Vector& y, const ConeSpec& cone) {
  Index offset = 0;
  for (const ConeBlock& b : cone.blocks) {
    auto block = y.segment(offset, b.dim);
    switch (b.kind) {
      case ConeKind::kZero:
        block.setZero();
        break;
      case ConeKind::kNonneg:
        block = block.cwiseMax(0.0);
        break;
      case ConeKind::kSecondOrder:
        project_soc(block);
        break;
    }
    offset += b.dim;
  }
}

Vector project_cone(const Vector& y, const ConeSpec& cone) {
  Vector out = y;
  project_cone_in_place(out, cone);
  return out;
}

void project_polar_in_place(Vector& w, const ConeSpec& cone) {
  Index offset = 0;
  for (const ConeBlock& b : cone.blocks) {
    auto block = w.segment(offset, b.dim);
    switch (b.kind) {
      case ConeKind::kZero:
        break;
      case ConeKind::kNonneg:
        block = block.cwiseMin(0.0);
        break;
      case ConeKind::kSecondOrder: {
        Vector p = block;
        project_soc(p);
        block -= p;
        break;
      }
    }
    offset += b.dim;
  }
}

Vector project_polar(const Vector& w, const ConeSpec& cone) {
  Vector out = w;
  project_polar_in_place(out, cone);
  return out;
}

double support_box(const BoxProduct& box, const Vector& v) {
  double total = 0.0;
  for (Index i = 0; i < v.size(); ++i) {
    const double term = interval_sup(box.lower[i], box.upper[i], v[i]);
    if (term == kInf) return kInf;
    total += term;
  }
  return total;
}

double inf_linear_over_box(const SparseMatrix& H, const Vector& g,
                           const BoxProduct& box, const Vector& v,
                           ProjectionWorkspace& ws) {
  H.multiply_transposed(v, ws.scratch);
  double total = -g.dot(v);
  for (Index i = 0; i < ws.scratch.size(); ++i) {
    // min(lower u, upper u) = -sup(-u).
    const double term = -interval_sup(box.lower[i], box.upper[i], -ws.scratch[i]);
    if (term == -kInf) return -kInf;
    total += term;
  }
  return total;
}

double inf_linear_over_box(const SparseMatrix& H, const Vector& g,
                           const BoxProduct& box, const Vector& v) {
  ProjectionWorkspace ws;
  return inf_linear_over_box(H, g, box, v, ws);
}

BoxProduct recession_box(const BoxProduct& box) {
  BoxProduct rec{Vector(box.size()), Vector(box.size())};
  for (Index i = 0; i < box.size(); ++i) {
    rec.lower[i] = std::isfinite(box.lower[i]) ? 0.0 : -kInf;
    rec.upper[i] = std::isfinite(box.upper[i]) ? 0.0 : kInf;
  }
  return rec;
}

}  // namespace xpipg
