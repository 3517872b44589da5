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

// Problem model for conic quadratic programs of the form
//
//   minimize    1/2 z'Pz + q'z
//   subject to  Hz - g in K,  z in D,
//
// where K is a product of zero, nonnegative-orthant and second-order cones and
// D is a product of closed intervals (a box, possibly with infinite bounds and
// singleton coordinates).

#ifndef XPIPG_PROBLEM_HPP
#define XPIPG_PROBLEM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "xpipg/sparse_matrix.hpp"

namespace xpipg {

struct BoxProduct {
  Vector lower;
  Vector upper;

  Index size() const { return lower.size(); }

  static BoxProduct unbounded(Index n);
  static BoxProduct uniform(Index n, double lo, double hi);
};

enum class ConeKind { kZero, kNonneg, kSecondOrder };

std::string_view to_string(ConeKind kind);

struct ConeBlock {
  ConeKind kind = ConeKind::kZero;
  Index dim = 0;

  friend bool operator==(const ConeBlock&, const ConeBlock&) = default;
};

// Ordered product of primitive cones. For a second-order block of dimension d
// the first coordinate is the scalar t and the remaining d-1 the vector x, with
// membership ||x|| <= t.
struct ConeSpec {
  std::vector<ConeBlock> blocks;

  Index dim() const;
  bool all_zero() const;

  static ConeSpec zero(Index dim);
  static ConeSpec nonneg(Index dim);

  friend bool operator==(const ConeSpec&, const ConeSpec&) = default;
};

struct ConicQP {
  SparseMatrix P;
  Vector q;
  SparseMatrix H;
  Vector g;
  ConeSpec cone;
  BoxProduct box;

  Index num_variables() const { return q.size(); }
  Index num_constraints() const { return g.size(); }
};

// Relative tolerance on mirrored entries of P.
inline constexpr double kSymmetryTolerance = 1e-12;

// Returns one human-readable line per violation; empty means well-formed.
// Positive semidefiniteness of P is assumed, not checked.
std::vector<std::string> validate(const ConicQP& qp);

}  // namespace xpipg

#endif  // XPIPG_PROBLEM_HPP
