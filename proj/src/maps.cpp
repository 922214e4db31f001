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

#include "ptop/maps.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ptop/error.hpp"

namespace ptop {

Probability SubspaceProb(const PSpace& p, SubsetMask y, SubsetMask a) {
  const GroundSize n = p.ground_size();
  CheckMask(y, n);
  if (!IsSubset(a, y)) {
    throw Error(ErrorCode::kNotASubset,
                "mask " + std::to_string(a) + " is not a subset of " +
                    std::to_string(y));
  }
  const SubsetMask outside = FullMask(n) & ~y;
  if (PowersetSize(static_cast<GroundSize>(Cardinality(outside))) >
      kTraceIterationCap) {
    throw Error(ErrorCode::kCapExceeded, "trace enumeration too large");
  }
  Probability best = 0.0;
  ForEachSubmask(outside, [&](SubsetMask c) { best = std::max(best, p[a | c]); });
  return best;
}

PSpace Subspace(const PSpace& p, SubsetMask y) {
  const GroundSize n = p.ground_size();
  CheckMask(y, n);
  const auto k = static_cast<GroundSize>(Cardinality(y));
  const std::size_t out_size = PowersetSize(k);
  const auto size = static_cast<std::int64_t>(PowersetSize(n));

  // Compress(B & y, y) for every B, via the lowest-bit recurrence.
  std::vector<SubsetMask> index(size, 0);
  std::vector<SubsetMask> point_image(n, 0);
  {
    unsigned rank = 0;
    for (GroundSize i = 0; i < n; ++i) {
      if ((y >> i) & 1u) point_image[i] = SubsetMask{1} << rank++;
    }
  }
  for (std::int64_t b = 1; b < size; ++b) {
    const auto low = static_cast<unsigned>(std::countr_zero(
        static_cast<std::uint64_t>(b)));
    index[b] = index[b & (b - 1)] | point_image[low];
  }

  std::vector<Probability> table(out_size, 0.0);
#pragma omp parallel
  {
    std::vector<Probability> local(out_size, 0.0);
#pragma omp for schedule(static) nowait
    for (std::int64_t b = 0; b < size; ++b) {
      const SubsetMask i = index[b];
      if (local[i] < p[static_cast<SubsetMask>(b)]) {
        local[i] = p[static_cast<SubsetMask>(b)];
      }
    }
#pragma omp critical(ptop_subspace_merge)
    for (std::size_t i = 0; i < out_size; ++i) {
      if (table[i] < local[i]) table[i] = local[i];
    }
  }
  return PSpace::FromTrustedWeights(WeightTable(k, std::move(table)));
}

PointMap InclusionMap(SubsetMask y, GroundSize n) {
  CheckMask(y, n);
  std::vector<GroundSize> image;
  for (GroundSize i = 0; i < n; ++i) {
    if ((y >> i) & 1u) image.push_back(i);
  }
  const auto k = static_cast<GroundSize>(image.size());
  return PointMap(k, n, std::move(image));
}

ContinuityResult CheckPContinuous(const PointMap& f, const PSpace& domain,
                                  const PSpace& codomain) {
  if (f.domain_size() != domain.ground_size() ||
      f.codomain_size() != codomain.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "map " + std::to_string(f.domain_size()) + " -> " +
                    std::to_string(f.codomain_size()) +
                    " does not match spaces on " +
                    std::to_string(domain.ground_size()) + " and " +
                    std::to_string(codomain.ground_size()) + " points");
  }
  const std::vector<SubsetMask> pre = PreimageTable(f);
  const auto size = static_cast<std::int64_t>(pre.size());
  std::int64_t first = size;
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t a = 0; a < size; ++a) {
    if (a < first &&
        domain[pre[a]] < codomain[static_cast<SubsetMask>(a)]) {
      first = a;
    }
  }
  ContinuityResult result;
  if (first < size) result.witness = static_cast<SubsetMask>(first);
  return result;
}

PointMap Compose(const PointMap& f, const PointMap& g) {
  if (f.codomain_size() != g.domain_size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cannot compose: codomain of size " +
                    std::to_string(f.codomain_size()) +
                    " feeds a domain of size " +
                    std::to_string(g.domain_size()));
  }
  std::vector<GroundSize> image(f.domain_size());
  for (GroundSize x = 0; x < f.domain_size(); ++x) image[x] = g(f(x));
  return PointMap(f.domain_size(), g.codomain_size(), std::move(image));
}

}  // namespace ptop
