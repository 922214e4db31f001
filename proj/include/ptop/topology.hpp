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

// Classical topologies on a finite ground set, represented as a sorted list
// of open-set masks.

#ifndef PTOP_TOPOLOGY_HPP_
#define PTOP_TOPOLOGY_HPP_

#include <optional>
#include <span>
#include <vector>

#include "ptop/error.hpp"
#include "ptop/subset.hpp"

namespace ptop {

using Topology = std::vector<SubsetMask>;

// Returns nullopt if `opens` contains the empty set and the full set and is
// closed under pairwise union and intersection. Otherwise returns a witness:
// (0, 0) for a missing empty set, (full, full) for a missing full set, or
// the lexicographically first pair whose union or intersection is missing.
// Duplicate masks are tolerated. Throws kMaskOutOfRange.
std::optional<WitnessPair> FindTopologyViolation(
    GroundSize n, std::span<const SubsetMask> opens);

inline bool IsTopology(GroundSize n, std::span<const SubsetMask> opens) {
  return !FindTopologyViolation(n, opens).has_value();
}

// Throws kNotATopology carrying the witness from FindTopologyViolation.
void CheckTopology(GroundSize n, std::span<const SubsetMask> opens);

// Smallest topology containing `subbasis`: adds the empty and full sets and
// closes under pairwise union and intersection. Result is sorted.
Topology TopologyFromSubbasis(GroundSize n,
                              std::span<const SubsetMask> subbasis);

// Every topology on n points, each sorted, in ascending order of the family
// bitmask. n <= 4.
std::vector<Topology> EnumerateTopologies(GroundSize n);

// True iff the preimage of every open of `codomain` is open in `domain`.
bool IsClassicallyContinuous(const PointMap& f, const Topology& domain,
                             const Topology& codomain);

}  // namespace ptop

#endif  // PTOP_TOPOLOGY_HPP_
