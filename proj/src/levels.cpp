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

#include "ptop/levels.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "ptop/error.hpp"

namespace ptop {

Topology LevelCut(const PSpace& p, Probability q) {
  CheckProbability(q);
  Topology cut;
  const auto t = p.values();
  for (SubsetMask a = 0; a < t.size(); ++a) {
    if (t[a] >= q) cut.push_back(a);
  }
  assert(IsTopology(p.ground_size(), cut));
  return cut;
}

bool IsQOpen(const PSpace& p, SubsetMask a, Probability q) {
  CheckProbability(q);
  return Prob(p, a) <= q;
}

LevelChain Decompose(const PSpace& p) {
  LevelChain chain;
  chain.n = p.ground_size();
  std::vector<Probability> distinct(p.values().begin(), p.values().end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  if (distinct.front() == 0.0) {
    chain.base = 0.0;
    distinct.erase(distinct.begin());
  }
  chain.levels = distinct;
  for (Probability q : chain.levels) chain.cuts.push_back(LevelCut(p, q));
  return chain;
}

PSpace Reconstruct(const LevelChain& chain) {
  const GroundSize n = chain.n;
  CheckGroundSize(n);
  if (chain.levels.empty() || chain.levels.size() != chain.cuts.size()) {
    throw Error(ErrorCode::kRangeError,
                "level chain needs one cut per level and at least one level");
  }
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    CheckProbability(chain.levels[i]);
    if (i > 0 && !(chain.levels[i - 1] < chain.levels[i])) {
      throw Error(ErrorCode::kRangeError, "levels must strictly increase");
    }
  }
  if (chain.levels.back() != 1.0) {
    throw Error(ErrorCode::kRangeError, "top level must be 1");
  }
  if (chain.base) {
    CheckProbability(*chain.base);
    if (!(*chain.base < chain.levels.front())) {
      throw Error(ErrorCode::kProbabilityOutOfRange,
                  "base must lie below the lowest level");
    }
  }

  const std::size_t size = PowersetSize(n);
  std::vector<char> below(size, 1);  // membership in the previous cut
  std::vector<Probability> table(size, chain.base.value_or(0.0));
  std::vector<char> covered(size, 0);
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    const Topology& cut = chain.cuts[i];
    CheckTopology(n, cut);
    std::vector<char> member(size, 0);
    for (SubsetMask a : cut) {
      if (!below[a]) {
        throw Error(ErrorCode::kChainNotNested,
                    "mask " + std::to_string(a) + " is in cut " +
                        std::to_string(i) + " but not in the cut below",
                    WitnessPair{a, a});
      }
      member[a] = 1;
      covered[a] = 1;
      table[a] = chain.levels[i];
    }
    below = std::move(member);
  }
  if (!chain.base) {
    for (SubsetMask a = 0; a < size; ++a) {
      if (!covered[a]) {
        throw Error(ErrorCode::kMissingBase,
                    "mask " + std::to_string(a) +
                        " lies in no cut and the chain has no base",
                    WitnessPair{a, a});
      }
    }
  }
  return PSpace::FromTrustedWeights(WeightTable(n, std::move(table)));
}

}  // namespace ptop
