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

#include "ptop/properties.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "ptop/error.hpp"

namespace ptop {

Cover::Cover(GroundSize n, std::vector<SubsetMask> members)
    : n_(n), members_(std::move(members)) {
  CheckGroundSize(n_);
  std::vector<SubsetMask> sorted = members_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    CheckMask(sorted[i], n_);
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw Error(ErrorCode::kDuplicateMask,
                  "cover member " + std::to_string(sorted[i]) +
                      " listed twice");
    }
  }
}

SubsetMask Cover::Union() const {
  SubsetMask u = 0;
  for (SubsetMask a : members_) u |= a;
  return u;
}

CoverCheck CheckQCover(const PSpace& p, const Cover& c, Probability q) {
  CheckProbability(q);
  if (c.ground_size() != p.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cover on " + std::to_string(c.ground_size()) +
                    " points, space on " + std::to_string(p.ground_size()));
  }
  CoverCheck out;
  const SubsetMask missing = FullMask(c.ground_size()) & ~c.Union();
  if (missing != 0) {
    out.status = CoverStatus::kNotCovering;
    out.uncovered_point = static_cast<GroundSize>(std::countr_zero(missing));
    return out;
  }
  std::optional<SubsetMask> low;
  for (SubsetMask a : c.members()) {
    if (p[a] < q && (!low || a < *low)) low = a;
  }
  if (low) {
    out.status = CoverStatus::kLowProbability;
    out.low_member = *low;
  }
  return out;
}

CompactnessResult IsQCompact(const PSpace& /*p*/, Probability q) {
  CheckProbability(q);
  return {};
}

namespace {

class SubcoverSearch {
 public:
  SubcoverSearch(const std::vector<SubsetMask>& members, SubsetMask full)
      : members_(members),
        full_(full),
        suffix_union_(members.size() + 1, 0),
        suffix_max_card_(members.size() + 1, 0) {
    for (std::size_t i = members.size(); i-- > 0;) {
      suffix_union_[i] = suffix_union_[i + 1] | members[i];
      suffix_max_card_[i] =
          std::max(suffix_max_card_[i + 1], Cardinality(members[i]));
    }
  }

  // Lexicographically first index tuple of length k that covers, if any.
  bool Search(std::size_t k) {
    chosen_.clear();
    return Extend(0, k, 0);
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  bool Extend(std::size_t start, std::size_t remaining, SubsetMask covered) {
    if (covered == full_) return true;
    if (remaining == 0) return false;
    const SubsetMask open = full_ & ~covered;
    const int need = Cardinality(open);
    for (std::size_t i = start; i + remaining <= members_.size(); ++i) {
      // Bounds only weaken as i grows, so a failure ends the loop.
      if ((covered | suffix_union_[i]) != full_) break;
      if (static_cast<std::size_t>(suffix_max_card_[i]) * remaining <
          static_cast<std::size_t>(need)) {
        break;
      }
      // A member adding nothing cannot sit in a minimum cover.
      if ((members_[i] & open) == 0) continue;
      chosen_.push_back(i);
      if (Extend(i + 1, remaining - 1, covered | members_[i])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<SubsetMask>& members_;
  SubsetMask full_;
  std::vector<SubsetMask> suffix_union_;
  std::vector<int> suffix_max_card_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

Cover MinSubcover(const Cover& c) {
  if (!c.Covers()) {
    throw Error(ErrorCode::kNotACover,
                "members do not cover all " +
                    std::to_string(c.ground_size()) + " points");
  }
  const SubsetMask full = FullMask(c.ground_size());
  SubcoverSearch search(c.members(), full);
  // Iterative deepening: the first k with a solution is optimal, and the
  // depth-first order inside one k is lexicographic on index tuples.
  for (std::size_t k = 0; k <= c.members().size(); ++k) {
    if (search.Search(k)) {
      std::vector<SubsetMask> picked;
      for (std::size_t i : search.chosen()) picked.push_back(c.members()[i]);
      return Cover(c.ground_size(), std::move(picked));
    }
  }
  throw Error(ErrorCode::kNotACover, "no subcover found");  // unreachable
}

std::optional<Disconnection> FindDisconnection(const PSpace& p,
                                               Probability q) {
  CheckProbability(q);
  const GroundSize n = p.ground_size();
  if (n <= 1) return std::nullopt;
  const SubsetMask full = FullMask(n);
  // Candidates A = 1 | (s << 1) contain point 0; s = all ones gives A = X.
  const auto count = static_cast<std::int64_t>(PowersetSize(n - 1)) - 1;
  std::int64_t first = count;
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t s = 0; s < count; ++s) {
    const SubsetMask a = 1u | (static_cast<SubsetMask>(s) << 1);
    if (s < first && p[a] >= q && p[full ^ a] >= q) first = s;
  }
  if (first == count) return std::nullopt;
  const SubsetMask a = 1u | (static_cast<SubsetMask>(first) << 1);
  return Disconnection{a, full ^ a};
}

std::optional<Probability> ConnectivityThreshold(const PSpace& p) {
  const GroundSize n = p.ground_size();
  if (n <= 1) return std::nullopt;
  const SubsetMask full = FullMask(n);
  const auto count = static_cast<std::int64_t>(PowersetSize(n - 1)) - 1;
  Probability best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::int64_t s = 0; s < count; ++s) {
    const SubsetMask a = 1u | (static_cast<SubsetMask>(s) << 1);
    best = std::max(best, std::min(p[a], p[full ^ a]));
  }
  return best;
}

}  // namespace ptop
