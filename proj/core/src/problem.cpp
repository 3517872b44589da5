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

#include "xpipg/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace xpipg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string dims(Index rows, Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

bool all_finite(const SparseMatrix& a) {
  for (const Triplet& t : a.triplets()) {
    if (!std::isfinite(t.value)) return false;
  }
  return true;
}

}  // namespace

BoxProduct BoxProduct::unbounded(Index n) {
  return {Vector::Constant(n, -kInf), Vector::Constant(n, kInf)};
}

BoxProduct BoxProduct::uniform(Index n, double lo, double hi) {
  return {Vector::Constant(n, lo), Vector::Constant(n, hi)};
}

std::string_view to_string(ConeKind kind) {
  switch (kind) {
    case ConeKind::kZero:
      return "zero";
    case ConeKind::kNonneg:
      return "nonneg";
    case ConeKind::kSecondOrder:
      return "soc";
  }
  return "unknown";
}

Index ConeSpec::dim() const {
  Index total = 0;
  for (const ConeBlock& b : blocks) total += b.dim;
  return total;
}

bool ConeSpec::all_zero() const {
  for (const ConeBlock& b : blocks) {
    if (b.kind != ConeKind::kZero) return false;
  }
  return true;
}

ConeSpec ConeSpec::zero(Index dim) {
  if (dim == 0) return {};
  return {{{ConeKind::kZero, dim}}};
}

ConeSpec ConeSpec::nonneg(Index dim) {
  if (dim == 0) return {};
  return {{{ConeKind::kNonneg, dim}}};
}

std::vector<std::string> validate(const ConicQP& qp) {
  std::vector<std::string> report;
  const Index n = qp.q.size();
  const Index m = qp.g.size();

  if (qp.P.rows() != n || qp.P.cols() != n) {
    report.push_back("P is " + dims(qp.P.rows(), qp.P.cols()) +
                     ", expected " + dims(n, n));
  }
  if (qp.H.rows() != m || qp.H.cols() != n) {
    report.push_back("H is " + dims(qp.H.rows(), qp.H.cols()) +
                     ", expected " + dims(m, n));
  }
  if (qp.box.lower.size() != n || qp.box.upper.size() != n) {
    report.push_back("box has lower length " +
                     std::to_string(qp.box.lower.size()) + " and upper length " +
                     std::to_string(qp.box.upper.size()) + ", expected " +
                     std::to_string(n));
  }
  if (qp.cone.dim() != m) {
    report.push_back("cone dimension " + std::to_string(qp.cone.dim()) +
                     " does not match m = " + std::to_string(m));
  }
  for (std::size_t k = 0; k < qp.cone.blocks.size(); ++k) {
    if (qp.cone.blocks[k].dim < 1) {
      report.push_back("cone block " + std::to_string(k) +
                       " has dimension < 1");
    }
  }

  if (!qp.q.allFinite()) report.push_back("q has non-finite entries");
  if (!qp.g.allFinite()) report.push_back("g has non-finite entries");
  if (!all_finite(qp.P)) report.push_back("P has non-finite entries");
  if (!all_finite(qp.H)) report.push_back("H has non-finite entries");

  if (qp.box.lower.size() == qp.box.upper.size()) {
    for (Index i = 0; i < qp.box.lower.size(); ++i) {
      const double lo = qp.box.lower[i];
      const double hi = qp.box.upper[i];
      if (std::isnan(lo) || std::isnan(hi)) {
        report.push_back("bound is NaN at coordinate " + std::to_string(i));
      } else if (lo > hi) {
        report.push_back("bounds reversed at coordinate " + std::to_string(i));
      } else if (lo == kInf || hi == -kInf) {
        report.push_back("empty interval at coordinate " + std::to_string(i));
      }
    }
  }

  if (qp.P.rows() == qp.P.cols()) {
    for (const Triplet& t : qp.P.triplets()) {
      if (t.row == t.col) continue;
      // Each off-diagonal pair is examined once: from its upper entry, or from
      // the lower entry when the upper one is not stored.
      if (t.row > t.col && qp.P.contains(t.col, t.row)) continue;
      const double mirror = qp.P.coeff(t.col, t.row);
      const double scale = std::max(std::abs(t.value), std::abs(mirror));
      if (std::abs(t.value - mirror) > kSymmetryTolerance * scale) {
        report.push_back("P asymmetric at (" +
                         std::to_string(std::min(t.row, t.col)) + ", " +
                         std::to_string(std::max(t.row, t.col)) + ")");
      }
    }
  }
  return report;
}

}  // namespace xpipg
