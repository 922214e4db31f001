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

#include "ptop/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ptop/error.hpp"
#include "ptop/levels.hpp"
#include "ptop/topology.hpp"

namespace ptop {

std::uint64_t Rng::UniformBelow(std::uint64_t bound) {
  const std::uint64_t reject_below = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= reject_below) return x % bound;
  }
}

PSpace RandomPSpace(GroundSize n, unsigned k, std::uint64_t seed) {
  CheckGroundSize(n, kPairwiseCap);
  if (k < 1 || k > kMaxRandomLevels) {
    throw Error(ErrorCode::kRangeError,
                "level count " + std::to_string(k) + " outside [1, " +
                    std::to_string(kMaxRandomLevels) + "]");
  }
  Rng rng(seed);
  const std::size_t size = PowersetSize(n);

  LevelChain chain;
  chain.n = n;
  std::vector<char> running(size, 1);
  for (unsigned i = 0; i < k; ++i) {
    const auto count = rng.UniformBelow(n + 2);
    std::vector<SubsetMask> subbasis;
    for (std::uint64_t j = 0; j < count; ++j) {
      subbasis.push_back(static_cast<SubsetMask>(rng.UniformBelow(size)));
    }
    const Topology t = TopologyFromSubbasis(n, subbasis);
    std::vector<char> member(size, 0);
    for (SubsetMask a : t) member[a] = 1;
    Topology cut;
    for (SubsetMask a = 0; a < size; ++a) {
      running[a] = running[a] && member[a];
      if (running[a]) cut.push_back(a);
    }
    chain.cuts.push_back(std::move(cut));
  }

  std::vector<unsigned> pool(999);
  std::iota(pool.begin(), pool.end(), 1u);
  for (unsigned i = 0; i + 1 < k; ++i) {
    const auto j = i + rng.UniformBelow(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<unsigned> numerators(pool.begin(), pool.begin() + (k - 1));
  std::sort(numerators.begin(), numerators.end());
  numerators.push_back(1000);
  for (unsigned num : numerators) chain.levels.push_back(num / 1000.0);
  chain.base = static_cast<double>(rng.UniformBelow(numerators.front())) /
               1000.0;
  return Reconstruct(chain);
}

}  // namespace ptop
