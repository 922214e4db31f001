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

// Test-only generators and brute-force oracles. The oracles deliberately
// avoid the library's fast paths (bit tricks, fixpoints, pruning) and work
// straight from the definitions.

#ifndef PTOP_TESTS_SUPPORT_HPP_
#define PTOP_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ptop/error.hpp"
#include "ptop/maps.hpp"
#include "ptop/pspace.hpp"
#include "ptop/random.hpp"
#include "ptop/subset.hpp"
#include "ptop/topology.hpp"

namespace ptop::testing {

// Code of the Error thrown by fn, or nullopt if it returns normally.
template <typename Fn>
std::optional<ErrorCode> CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline const PSpace& P1() {
  static const PSpace p =
      PSpace::FromWeights(WeightTable(2, {1.0, 0.5, 0.3, 1.0}));
  return p;
}

inline WeightTable Table(GroundSize n, std::vector<Probability> v) {
  return WeightTable(n, std::move(v));
}

// Values are drawn from {0, 1/8, ..., 1} so that ties are common.
inline WeightTable RandomWeights(Rng& rng, GroundSize n) {
  std::vector<Probability> v(PowersetSize(n));
  for (auto& x : v) x = static_cast<double>(rng.UniformBelow(9)) / 8.0;
  return WeightTable(n, std::move(v));
}

// A valid p-space half of the time, a single-entry perturbation of one
// otherwise. Used where both outcomes of a check should be exercised.
inline WeightTable MixedWeights(Rng& rng, GroundSize n) {
  const PSpace p = RandomPSpace(n, 1 + rng.UniformBelow(4), rng.Next());
  std::vector<Probability> v(p.values().begin(), p.values().end());
  if (rng.UniformBelow(2) == 0) {
    v[rng.UniformBelow(v.size())] =
        static_cast<double>(rng.UniformBelow(5)) / 4.0;
  }
  return WeightTable(n, std::move(v));
}

inline PointMap RandomMap(Rng& rng, GroundSize dom, GroundSize cod) {
  std::vector<GroundSize> image(dom);
  for (auto& y : image) y = static_cast<GroundSize>(rng.UniformBelow(cod));
  return PointMap(dom, cod, std::move(image));
}

inline std::vector<PointMap> AllMaps(GroundSize dom, GroundSize cod) {
  std::vector<PointMap> out;
  if (cod == 0) {
    if (dom == 0) out.emplace_back(0, 0, std::vector<GroundSize>{});
    return out;
  }
  std::vector<GroundSize> image(dom, 0);
  while (true) {
    out.emplace_back(dom, cod, image);
    GroundSize i = 0;
    while (i < dom && ++image[i] == cod) image[i++] = 0;
    if (i == dom) break;
  }
  return out;
}

inline std::vector<Probability> Pointwise(
    const std::vector<Probability>& a, const std::vector<Probability>& b,
    bool take_min) {
  std::vector<Probability> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = take_min ? std::min(a[i], b[i]) : std::max(a[i], b[i]);
  }
  return out;
}

inline std::vector<Probability> Values(const PSpace& p) {
  return {p.values().begin(), p.values().end()};
}

// --- oracles -------------------------------------------------------------

// p_Y(A) straight from the definition: scan every subset B of X.
inline Probability OracleTrace(const PSpace& p, SubsetMask y, SubsetMask a) {
  Probability best = -1.0;
  for (SubsetMask b = 0; b < PowersetSize(p.ground_size()); ++b) {
    if ((b & y) == a) best = std::max(best, p[b]);
  }
  return best;
}

// The pairwise axioms over all ordered pairs, as a plain yes/no.
inline bool OracleIsPSpace(const WeightTable& w) {
  const SubsetMask full = FullMask(w.ground_size());
  if (w[0] != 1.0 || w[full] != 1.0) return false;
  const auto size = static_cast<SubsetMask>(PowersetSize(w.ground_size()));
  for (SubsetMask a = 0; a < size; ++a) {
    for (SubsetMask b = 0; b < size; ++b) {
      const Probability m = std::min(w[a], w[b]);
      if (w[a | b] < m || w[a & b] < m) return false;
    }
  }
  return true;
}

// Smallest sub-list (by size, then by lexicographic index tuple) that
// covers all n points, found by enumerating all 2^m sub-lists.
inline std::vector<SubsetMask> OracleMinSubcover(
    const std::vector<SubsetMask>& members, GroundSize n) {
  const std::size_t m = members.size();
  std::optional<std::vector<std::size_t>> best;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    SubsetMask u = 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) {
      if ((pick >> i) & 1u) {
        u |= members[i];
        idx.push_back(i);
      }
    }
    if (u != FullMask(n)) continue;
    if (!best || idx.size() < best->size() ||
        (idx.size() == best->size() && idx < *best)) {
      best = idx;
    }
  }
  std::vector<SubsetMask> out;
  if (best) {
    for (std::size_t i : *best) out.push_back(members[i]);
  }
  return out;
}

// max over every ordered split (A, X \ A), both non-empty.
inline std::optional<Probability> OracleThreshold(const PSpace& p) {
  const SubsetMask full = FullMask(p.ground_size());
  std::optional<Probability> best;
  for (SubsetMask a = 1; a < full; ++a) {
    const Probability m = std::min(p[a], p[full & ~a]);
    if (!best || m > *best) best = m;
  }
  return best;
}

// Number of distinct topologies reached by closing every family of subsets.
inline std::size_t OracleCountTopologies(GroundSize n) {
  const std::size_t subsets = PowersetSize(n);
  std::set<Topology> seen;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    std::vector<SubsetMask> members;
    for (SubsetMask a = 0; a < subsets; ++a) {
      if ((fam >> a) & 1u) members.push_back(a);
    }
    seen.insert(TopologyFromSubbasis(n, members));
  }
  return seen.size();
}

}  // namespace ptop::testing

#endif  // PTOP_TESTS_SUPPORT_HPP_
