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

// Level cuts of a p-space. For every threshold q the family
// {A : p(A) >= q} is a classical topology, and a p-space is the same data as
// the nested chain of its cuts at its distinct values.

#ifndef PTOP_LEVELS_HPP_
#define PTOP_LEVELS_HPP_

#include <optional>
#include <vector>

#include "ptop/pspace.hpp"
#include "ptop/topology.hpp"

namespace ptop {

// {A : p(A) >= q}, ascending. Throws kProbabilityOutOfRange.
Topology LevelCut(const PSpace& p, Probability q);

// q-open predicate: p(A) <= q. The direction is the
// opposite of LevelCut and of q-covers. Throws kMaskOutOfRange or
// kProbabilityOutOfRange.
bool IsQOpen(const PSpace& p, SubsetMask a, Probability q);

// levels[0] < ... < levels.back() == 1, with cuts[i] the open sets at
// levels[i]; cuts shrink as the level rises. Subsets in no cut take `base`,
// which must lie below levels[0].
struct LevelChain {
  GroundSize n = 0;
  std::vector<Probability> levels;
  std::vector<Topology> cuts;
  std::optional<Probability> base;

  friend bool operator==(const LevelChain&, const LevelChain&) = default;
};

// Levels are the distinct positive values of p. A value of 0, when present,
// becomes the base; the base is absent otherwise.
LevelChain Decompose(const PSpace& p);

// p(A) = the highest level whose cut contains A, or base. Throws
// kRangeError (malformed level list), kProbabilityOutOfRange,
// kNotATopology, kChainNotNested or kMissingBase.
PSpace Reconstruct(const LevelChain& chain);

}  // namespace ptop

#endif  // PTOP_LEVELS_HPP_
