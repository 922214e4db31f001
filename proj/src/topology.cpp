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

#include "ptop/topology.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace ptop {

std::optional<WitnessPair> FindTopologyViolation(
    GroundSize n, std::span<const SubsetMask> opens) {
  CheckGroundSize(n);
  std::vector<char> member(PowersetSize(n), 0);
  for (SubsetMask a : opens) {
    CheckMask(a, n);
    member[a] = 1;
  }
  const SubsetMask full = FullMask(n);
  if (!member[0]) return WitnessPair{0, 0};
  if (!member[full]) return WitnessPair{full, full};

  std::vector<SubsetMask> sorted(opens.begin(), opens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const SubsetMask a = sorted[i];
      const SubsetMask b = sorted[j];
      if (!member[a | b] || !member[a & b]) return WitnessPair{a, b};
    }
  }
  return std::nullopt;
}

void CheckTopology(GroundSize n, std::span<const SubsetMask> opens) {
  if (auto w = FindTopologyViolation(n, opens)) {
    throw Error(ErrorCode::kNotATopology,
                "open sets not closed at pair (" + std::to_string(w->a) +
                    ", " + std::to_string(w->b) + ")",
                w);
  }
}

Topology TopologyFromSubbasis(GroundSize n,
                              std::span<const SubsetMask> subbasis) {
  CheckGroundSize(n);
  std::vector<char> member(PowersetSize(n), 0);
  Topology opens;
  auto add = [&](SubsetMask a) {
    if (!member[a]) {
      member[a] = 1;
      opens.push_back(a);
    }
  };
  add(0);
  add(FullMask(n));
  for (SubsetMask a : subbasis) {
    CheckMask(a, n);
    add(a);
  }
  // Worklist closure: each newly admitted set is combined once with every
  // set admitted before it, so every pair is eventually examined.
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const SubsetMask a = opens[i];
      const SubsetMask b = opens[j];
      add(a | b);
      add(a & b);
    }
  }
  std::sort(opens.begin(), opens.end());
  return opens;
}

std::vector<Topology> EnumerateTopologies(GroundSize n) {
  CheckGroundSize(n, 4);
  const std::size_t subsets = PowersetSize(n);
  const SubsetMask full = FullMask(n);
  std::vector<Topology> out;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    // Skip families missing the empty set or the full set.
    if (!(fam & 1u) || !((fam >> full) & 1u)) continue;
    bool closed = true;
    for (SubsetMask a = 0; a < subsets && closed; ++a) {
      if (!((fam >> a) & 1u)) continue;
      for (SubsetMask b = a + 1; b < subsets; ++b) {
        if (!((fam >> b) & 1u)) continue;
        if (!((fam >> (a | b)) & 1u) || !((fam >> (a & b)) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    Topology t;
    for (SubsetMask a = 0; a < subsets; ++a) {
      if ((fam >> a) & 1u) t.push_back(a);
    }
    out.push_back(std::move(t));
  }
  return out;
}

bool IsClassicallyContinuous(const PointMap& f, const Topology& domain,
                             const Topology& codomain) {
  for (SubsetMask open : codomain) {
    if (!std::binary_search(domain.begin(), domain.end(), Preimage(f, open))) {
      return false;
    }
  }
  return true;
}

}  // namespace ptop
