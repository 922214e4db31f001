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

#include <algorithm>

#include "doctest.h"
#include "ptop/levels.hpp"
#include "support.hpp"

namespace ptop {
namespace {

using testing::CodeOf;
using testing::P1;

TEST_CASE("level_cut examples") {
  CHECK(LevelCut(P1(), 1.0) == Topology{0b00, 0b11});
  CHECK(LevelCut(P1(), 0.5) == Topology{0b00, 0b01, 0b11});
  CHECK(LevelCut(P1(), 0.0) == Topology{0b00, 0b01, 0b10, 0b11});
  CHECK(CodeOf([] { LevelCut(P1(), 1.5); }) ==
        ErrorCode::kProbabilityOutOfRange);
}

TEST_CASE("is_q_open uses the <= convention") {
  CHECK(IsQOpen(P1(), 0b10, 0.3));
  CHECK_FALSE(IsQOpen(P1(), 0b01, 0.3));
  CHECK(IsQOpen(P1(), 0b00, 1.0));
  CHECK_FALSE(IsQOpen(P1(), 0b11, 0.99));
  CHECK(CodeOf([] { IsQOpen(P1(), 0b100, 0.5); }) ==
        ErrorCode::kMaskOutOfRange);
  CHECK(CodeOf([] { IsQOpen(P1(), 0b01, -0.1); }) ==
        ErrorCode::kProbabilityOutOfRange);
}

TEST_CASE("decompose examples") {
  const LevelChain c = Decompose(P1());
  CHECK(c.levels == std::vector<Probability>{0.3, 0.5, 1.0});
  REQUIRE(c.cuts.size() == 3);
  CHECK(c.cuts[0] == Topology{0b00, 0b01, 0b10, 0b11});
  CHECK(c.cuts[1] == Topology{0b00, 0b01, 0b11});
  CHECK(c.cuts[2] == Topology{0b00, 0b11});
  CHECK_FALSE(c.base.has_value());

  const SubsetMask sierpinski[] = {0b00, 0b01, 0b11};
  const LevelChain s = Decompose(FromTopology(2, sierpinski));
  CHECK(s.levels == std::vector<Probability>{1.0});
  CHECK(s.cuts == std::vector<Topology>{{0b00, 0b01, 0b11}});
  CHECK(s.base == 0.0);

  const LevelChain ones = Decompose(PSpace::FromWeights(WeightTable(1, {1, 1})));
  CHECK(ones.levels == std::vector<Probability>{1.0});
  CHECK(ones.cuts == std::vector<Topology>{{0b0, 0b1}});
  CHECK_FALSE(ones.base.has_value());
}

TEST_CASE("reconstruct examples") {
  CHECK(Reconstruct(Decompose(P1())) == P1());

  LevelChain indiscrete{3, {1.0}, {{0b000, 0b111}}, 0.0};
  std::vector<Probability> expected(8, 0.0);
  expected.front() = expected.back() = 1.0;
  CHECK(testing::Values(Reconstruct(indiscrete)) == expected);

  LevelChain two{2, {0.5, 1.0}, {{0b00, 0b01, 0b11}, {0b00, 0b11}}, 0.2};
  CHECK(testing::Values(Reconstruct(two)) ==
        std::vector<Probability>{1, 0.5, 0.2, 1});
}

TEST_CASE("reconstruct errors") {
  LevelChain not_nested{2, {0.5, 1.0}, {{0b00, 0b11}, {0b00, 0b01, 0b11}}, 0};
  CHECK(CodeOf([&] { Reconstruct(not_nested); }) ==
        ErrorCode::kChainNotNested);
  LevelChain not_top{2, {1.0}, {{0b00, 0b01}}, 0};
  CHECK(CodeOf([&] { Reconstruct(not_top); }) == ErrorCode::kNotATopology);
  LevelChain no_base{2, {1.0}, {{0b00, 0b11}}, std::nullopt};
  CHECK(CodeOf([&] { Reconstruct(no_base); }) == ErrorCode::kMissingBase);
  LevelChain top_below_one{2, {0.9}, {{0b00, 0b11}}, 0};
  CHECK(CodeOf([&] { Reconstruct(top_below_one); }) ==
        ErrorCode::kRangeError);
  LevelChain base_too_high{2, {0.5, 1.0}, {{0b00, 0b11}, {0b00, 0b11}}, 0.5};
  CHECK(CodeOf([&] { Reconstruct(base_too_high); }) ==
        ErrorCode::kProbabilityOutOfRange);
}

TEST_CASE("cuts are nested topologies and round trip is exact") {
  Rng rng(314);
  for (int iter = 0; iter < 200; ++iter) {
    const auto n = static_cast<GroundSize>(rng.UniformBelow(8));
    const PSpace p = RandomPSpace(n, 1 + rng.UniformBelow(5), rng.Next());
    const LevelChain c = Decompose(p);
    CHECK(c.levels.back() == 1.0);
    for (std::size_t i = 0; i < c.cuts.size(); ++i) {
      CHECK(IsTopology(n, c.cuts[i]));
      if (i > 0) {
        CHECK(std::includes(c.cuts[i - 1].begin(), c.cuts[i - 1].end(),
                            c.cuts[i].begin(), c.cuts[i].end()));
      }
    }
    CHECK(Reconstruct(c) == p);

    // Monotonicity of both conventions along a grid of thresholds.
    for (int k = 0; k + 1 <= 8; ++k) {
      const double q = k / 8.0;
      const double q2 = (k + 1) / 8.0;
      const Topology lo = LevelCut(p, q);
      const Topology hi = LevelCut(p, q2);
      CHECK(std::includes(lo.begin(), lo.end(), hi.begin(), hi.end()));
      for (SubsetMask a = 0; a < PowersetSize(n); ++a) {
        if (IsQOpen(p, a, q)) CHECK(IsQOpen(p, a, q2));
      }
    }
  }
}

TEST_CASE("reconstruct of arbitrary valid chains satisfies the axioms") {
  Rng rng(27);
  for (int iter = 0; iter < 200; ++iter) {
    const auto n = static_cast<GroundSize>(rng.UniformBelow(6));
    LevelChain c;
    c.n = n;
    const auto k = 1 + rng.UniformBelow(4);
    Topology running;
    for (std::uint64_t i = 0; i < k; ++i) {
      std::vector<SubsetMask> sub;
      for (int j = 0; j < 3; ++j) {
        sub.push_back(static_cast<SubsetMask>(rng.UniformBelow(PowersetSize(n))));
      }
      Topology t = TopologyFromSubbasis(n, sub);
      if (i > 0) {
        Topology meet;
        std::set_intersection(running.begin(), running.end(), t.begin(),
                              t.end(), std::back_inserter(meet));
        t = meet;
      }
      running = t;
      c.cuts.push_back(t);
      c.levels.push_back(i + 1 == k ? 1.0 : (i + 1) / 8.0);
    }
    c.base = 0.0;
    CHECK(VerifyPairwise(Reconstruct(c).weights()).empty());
  }
}

}  // namespace
}  // namespace ptop
