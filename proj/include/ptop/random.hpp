// Copyright 2026 The ptop Authors
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

// Seeded random p-spaces.
//
// The generator is std::mt19937_64 (whose output sequence is fixed by the
// C++ standard) seeded with the 64-bit seed. Bounded integers are drawn by
// rejection: with r = 2^64 mod bound, raw outputs below r are discarded and
// the rest are reduced modulo bound. No standard distribution classes are
// used, so outputs are identical on every conforming platform.
//
// RandomPSpace(n, k, seed) draws, in this order:
//   1. for i = 1..k: a subbasis of UniformBelow(n + 2) masks, each
//      UniformBelow(2^n); T_i is its topology closure;
//   2. k - 1 distinct numerators from {1, ..., 999} by a partial
//      Fisher-Yates shuffle, sorted; levels are numerator / 1000, then 1;
//   3. a base numerator UniformBelow(lowest level numerator), over 1000.
// The cut at level i is T_1 & ... & T_i.

#ifndef PTOP_RANDOM_HPP_
#define PTOP_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "ptop/pspace.hpp"

namespace ptop {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

inline constexpr unsigned kMaxRandomLevels = 1000;

// Throws kCapExceeded if n > 13, kRangeError unless 1 <= k <= 1000.
PSpace RandomPSpace(GroundSize n, unsigned k, std::uint64_t seed);

}  // namespace ptop

#endif  // PTOP_RANDOM_HPP_
