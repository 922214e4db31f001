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

// Probabilistic topologies on a finite ground set X.
//
// A p-topology assigns every subset A of X a value p(A) in [0, 1], read as
// the probability that A is open, subject to
//
//   p(empty) = p(X) = 1,
//   p(A | B) >= min(p(A), p(B)),
//   p(A & B) >= min(p(A), p(B)).
//
// On a finite set the pairwise inequalities imply the ones for arbitrary
// families (induction on the number of distinct members; the empty family
// is covered by the boundary condition), so the pair scan in
// VerifyPairwise decides the axioms. VerifyExhaustive checks every family
// directly and exists to confirm that reduction.
//
// Probabilities are binary64 values that are only ever compared, or
// combined with min and max. No arithmetic happens after parsing, so
// equality comparisons throughout the library are exact.

#ifndef PTOP_PSPACE_HPP_
#define PTOP_PSPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ptop/subset.hpp"
#include "ptop/topology.hpp"

namespace ptop {

using Probability = double;

// Throws kProbabilityOutOfRange unless 0 <= q <= 1 (NaN is rejected).
void CheckProbability(Probability q);

struct Entry {
  SubsetMask mask = 0;
  Probability value = 0;
};

// 2^n values in [0, 1] with no axiom constraints. Candidate input for
// verification and completion.
class WeightTable {
 public:
  WeightTable() : WeightTable(0, {1.0}) {}
  // Throws kCapExceeded, kRangeError (wrong table length) or
  // kProbabilityOutOfRange. Negative zero is stored as +0.
  WeightTable(GroundSize n, std::vector<Probability> values);

  // Listed entries override the defaults: 1 for the empty and full sets,
  // 0 for every other subset. Throws kMaskOutOfRange,
  // kProbabilityOutOfRange, kDuplicateMask or kCapExceeded.
  static WeightTable Build(GroundSize n, std::span<const Entry> entries);

  GroundSize ground_size() const { return n_; }
  std::span<const Probability> values() const { return values_; }
  Probability operator[](SubsetMask a) const { return values_[a]; }

  friend bool operator==(const WeightTable&, const WeightTable&) = default;

 private:
  GroundSize n_;
  std::vector<Probability> values_;
};

// Default value of mask `a` in a sparse listing over n points.
constexpr Probability DefaultValue(SubsetMask a, GroundSize n) {
  return (a == 0 || a == FullMask(n)) ? 1.0 : 0.0;
}

enum class ViolationKind { kRange, kBoundary, kUnion, kIntersection };

std::string_view ViolationKindName(ViolationKind kind);

// Witness of a failed axiom: `actual` is the value found where at least
// `required` was needed, so required > actual always.
//
// Pairwise reports: kBoundary names the offending mask in `a`; kUnion and
// kIntersection name the pair (a, b), a < b. Exhaustive reports also set
// `family` (bit S set iff subset S is a member); there `a` and `b` are the
// smallest and largest members. kRange is never produced from a
// WeightTable, whose constructor already rejects out-of-range values.
struct ViolationReport {
  ViolationKind kind = ViolationKind::kBoundary;
  SubsetMask a = 0;
  SubsetMask b = 0;
  Probability required = 0;
  Probability actual = 0;
  std::uint64_t family = 0;

  friend bool operator==(const ViolationReport&,
                         const ViolationReport&) = default;
};

inline constexpr std::size_t kUnlimitedReports =
    std::numeric_limits<std::size_t>::max();
inline constexpr GroundSize kPairwiseCap = 13;
inline constexpr GroundSize kExhaustiveCap = 4;

// All axiom violations in deterministic order: boundary (empty set, then
// full set), union pairs in lexicographic (a, b) order, then intersection
// pairs. Truncated to the first `max_reports`. OpenMP-parallel over a; the
// output does not depend on the thread count. Throws kCapExceeded if
// n > 13.
std::vector<ViolationReport> VerifyPairwise(
    const WeightTable& w, std::size_t max_reports = kUnlimitedReports);

// Checks the union axiom over every family of subsets (the empty family has
// union empty and infimum 1) and the intersection axiom over every family
// (the empty family has intersection X). Reports: boundary, then union and
// intersection violations in ascending family order. Throws kCapExceeded if
// n > 4.
std::vector<ViolationReport> VerifyExhaustive(const WeightTable& w);

inline bool SatisfiesAxioms(const WeightTable& w) {
  return VerifyPairwise(w, 1).empty();
}

// A WeightTable known to satisfy the p-topology axioms.
class PSpace {
 public:
  // The space on the empty ground set: n = 0, p(empty) = 1.
  PSpace() = default;

  // Throws kNotAPSpace (with the first violation as witness) or
  // kCapExceeded if n > 13.
  static PSpace FromWeights(WeightTable w);

  // For constructions that are valid by proof (completion, subspaces,
  // level chains). Debug builds still verify when n <= 13.
  static PSpace FromTrustedWeights(WeightTable w);

  GroundSize ground_size() const { return w_.ground_size(); }
  std::span<const Probability> values() const { return w_.values(); }
  const WeightTable& weights() const { return w_; }
  Probability operator[](SubsetMask a) const { return w_[a]; }

  friend bool operator==(const PSpace&, const PSpace&) = default;

 private:
  explicit PSpace(WeightTable w) : w_(std::move(w)) {}
  WeightTable w_;
};

// p(a). Throws kMaskOutOfRange.
Probability Prob(const PSpace& p, SubsetMask a);

// Pointwise-least p-topology above w. Sets the boundary to 1, then raises
// p(A | B) and p(A & B) to min(p(A), p(B)) until nothing changes. Each pass
// is OpenMP-parallel; the fixpoint is unique so the result is independent
// of the schedule. Throws kCapExceeded if n > 13.
PSpace Complete(const WeightTable& w);

// Classical topology as a p-space: 1 on open sets, 0 elsewhere. Throws
// kNotATopology.
PSpace FromTopology(GroundSize n, std::span<const SubsetMask> opens);

}  // namespace ptop

#endif  // PTOP_PSPACE_HPP_
