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

#ifndef XPIPG_XPIPG_HPP
#define XPIPG_XPIPG_HPP

#include "xpipg/dynamics.hpp"
#include "xpipg/oscillating_masses.hpp"
#include "xpipg/problem.hpp"
#include "xpipg/problem_io.hpp"
#include "xpipg/projections.hpp"
#include "xpipg/random.hpp"
#include "xpipg/solver.hpp"
#include "xpipg/sparse_matrix.hpp"
#include "xpipg/spectral.hpp"

#endif  // XPIPG_XPIPG_HPP
