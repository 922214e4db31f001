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

// Subspaces and p-continuous maps.
//
// The subspace structure on Y is the trace
//
//   p_Y(A) = max { p(B) : B subset of X, B & Y == A },   A subset of Y,
//
// (the supremum is attained because X is finite). Points of Y are renumbered
// in increasing order, see Compress. A map f: (X, p) -> (Z, q) is
// p-continuous when p(f^{-1}(A)) >= q(A) for every A subset of Z.

#ifndef PTOP_MAPS_HPP_
#define PTOP_MAPS_HPP_

#include <optional>

#include "ptop/pspace.hpp"
#include "ptop/subset.hpp"

namespace ptop {

// Maximum number of candidate supersets SubspaceProb will enumerate.
inline constexpr std::size_t kTraceIterationCap = std::size_t{1} << 20;

// p_Y(a) by enumerating the 2^(n - |y|) candidates. Throws kNotASubset,
// kMaskOutOfRange or kCapExceeded.
Probability SubspaceProb(const PSpace& p, SubsetMask y, SubsetMask a);

// The subspace (Y, p_Y) on |y| points. One OpenMP-parallel scatter-max pass
// over all 2^n subsets. Throws kMaskOutOfRange.
PSpace Subspace(const PSpace& p, SubsetMask y);

// Map from the |y| compressed points into the n-point ground set.
PointMap InclusionMap(SubsetMask y, GroundSize n);

struct ContinuityResult {
  // Smallest codomain mask A with p(f^{-1}(A)) < q(A); empty iff continuous.
  std::optional<SubsetMask> witness;

  bool continuous() const { return !witness.has_value(); }
};

// OpenMP-parallel scan over the 2^m codomain subsets with a min-reduction
// on the witness. Throws kDimensionMismatch or kCapExceeded.
ContinuityResult CheckPContinuous(const PointMap& f, const PSpace& domain,
                                  const PSpace& codomain);

// g after f. Throws kDimensionMismatch unless f's codomain is g's domain.
PointMap Compose(const PointMap& f, const PointMap& g);

}  // namespace ptop

#endif  // PTOP_MAPS_HPP_
