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

#ifndef XPIPG_RANDOM_HPP
#define XPIPG_RANDOM_HPP

#include <cstdint>

namespace xpipg {

// Counter-based SplitMix64 stream: the k-th raw draw (k = 1, 2, ...) is
// mix64(seed + k * 0x9E3779B97F4A7C15), where mix64 is the SplitMix64
// finalizer. The sequence depends only on the seed, never on the platform's
// standard library.
//
// Uniforms take the top 53 bits: u = (draw >> 11 + 0.5) * 2^-53, so u is in
// the open interval (0, 1). Normals come from the Box-Muller transform on two
// consecutive uniforms (u1, u2): r = sqrt(-2 ln u1), the cosine branch is
// returned first and the sine branch on the following call.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();
  double uniform();
  double normal();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t mix64(std::uint64_t x);

}  // namespace xpipg

#endif  // XPIPG_RANDOM_HPP
