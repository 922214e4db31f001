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

// Covers, compactness and connectedness at a probability level q.

#ifndef PTOP_PROPERTIES_HPP_
#define PTOP_PROPERTIES_HPP_

#include <optional>
#include <vector>

#include "ptop/pspace.hpp"
#include "ptop/subset.hpp"

namespace ptop {

// A family of distinct subsets of an n-point set.
class Cover {
 public:
  Cover() = default;
  // Throws kMaskOutOfRange or kDuplicateMask.
  Cover(GroundSize n, std::vector<SubsetMask> members);

  GroundSize ground_size() const { return n_; }
  const std::vector<SubsetMask>& members() const { return members_; }
  SubsetMask Union() const;
  bool Covers() const { return Union() == FullMask(n_); }

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  GroundSize n_ = 0;
  std::vector<SubsetMask> members_;
};

enum class CoverStatus { kCover, kNotCovering, kLowProbability };

struct CoverCheck {
  CoverStatus status = CoverStatus::kCover;
  // kNotCovering: lowest point outside the union.
  GroundSize uncovered_point = 0;
  // kLowProbability: smallest member mask with p < q.
  SubsetMask low_member = 0;

  bool ok() const { return status == CoverStatus::kCover; }
};

// A failure to cover is reported before a low-probability member. Throws
// kDimensionMismatch or kProbabilityOutOfRange.
CoverCheck CheckQCover(const PSpace& p, const Cover& c, Probability q);

enum class CompactnessReason { kFiniteTrivial };

struct CompactnessResult {
  bool compact = true;
  CompactnessReason reason = CompactnessReason::kFiniteTrivial;
};

// Every q-cover of a finite set has at most 2^n distinct members, so it is
// its own finite subcover.
CompactnessResult IsQCompact(const PSpace& p, Probability q);

// A minimum-cardinality sub-list of c.members() whose union is full. Among
// optimal sub-lists, the one with the lexicographically smallest increasing
// index tuple wins; members keep their input order. Exact iterative
// deepening branch and bound. Throws kNotACover.
Cover MinSubcover(const Cover& c);

struct Disconnection {
  SubsetMask a = 0;
  SubsetMask b = 0;
};

// A partition (A, X \ A) with both parts non-empty and p(A), p(X \ A) >= q,
// where A is the smallest such mask containing point 0, or nullopt when p
// is connected at level q. OpenMP-parallel over the 2^(n-1) candidates.
std::optional<Disconnection> FindDisconnection(const PSpace& p,
                                               Probability q);

inline bool IsQConnected(const PSpace& p, Probability q) {
  return !FindDisconnection(p, q).has_value();
}

// max over partitions into two non-empty parts of min(p(A), p(X \ A)), or
// nullopt ("always connected") when n <= 1. p is q-connected iff q exceeds
// the threshold.
std::optional<Probability> ConnectivityThreshold(const PSpace& p);

}  // namespace ptop

#endif  // PTOP_PROPERTIES_HPP_
