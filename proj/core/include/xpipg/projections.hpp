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

// Euclidean projections onto the box D, the cone K and its polar, plus the
// support function of D and the closed-form infimum of a linear functional of
// Hz - g over D.
//
// Extended reals are IEEE infinities. Products of a zero direction with an
// infinite bound count as 0.

#ifndef XPIPG_PROJECTIONS_HPP
#define XPIPG_PROJECTIONS_HPP

#include "xpipg/problem.hpp"

namespace xpipg {

// Scratch storage for inf_linear_over_box; carries no state between calls.
struct ProjectionWorkspace {
  Vector scratch;
};

void project_box_in_place(Vector& z, const BoxProduct& box);
Vector project_box(const Vector& z, const BoxProduct& box);

// Blockwise: zero -> 0, nonneg -> max(y, 0), second-order (t, x) -> itself if
// ||x|| <= t, 0 if ||x|| <= -t, else (t + ||x||)/2 * (1, x/||x||).
void project_cone_in_place(Vector& y, const ConeSpec& cone);
Vector project_cone(const Vector& y, const ConeSpec& cone);

// Projection onto the polar cone, w - project_cone(w) (Moreau).
void project_polar_in_place(Vector& w, const ConeSpec& cone);
Vector project_polar(const Vector& w, const ConeSpec& cone);

// sup_{z in box} <z, v>; may be +inf.
double support_box(const BoxProduct& box, const Vector& v);

// inf_{z in box} <Hz - g, v> = -<g, v> + sum_i min(lower_i u_i, upper_i u_i)
// with u = H^T v; may be -inf.
double inf_linear_over_box(const SparseMatrix& H, const Vector& g,
                           const BoxProduct& box, const Vector& v);
double inf_linear_over_box(const SparseMatrix& H, const Vector& g,
                           const BoxProduct& box, const Vector& v,
                           ProjectionWorkspace& ws);

// Recession cone of a box: [0,0] for bounded coordinates, half-lines for
// one-sided ones, the whole line for free ones.
BoxProduct recession_box(const BoxProduct& box);

}  // namespace xpipg

#endif  // XPIPG_PROJECTIONS_HPP
