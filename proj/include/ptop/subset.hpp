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

// Bitmask kernel for the powerset of a finite ground set {0, ..., n-1}.
//
// A subset A is an unsigned mask with bit i set iff point i belongs to A.
// Every table in this library is indexed by such masks, so the point order
// fixed here is also the order used by the file formats.

#ifndef PTOP_SUBSET_HPP_
#define PTOP_SUBSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ptop {

using SubsetMask = std::uint32_t;
using GroundSize = unsigned;

// Absolute cap on the ground size. Tables hold 2^n values.
inline constexpr GroundSize kMaxGroundSize = 20;

// Effective cap: kMaxGroundSize, lowered by the PTOP_MAX_N environment
// variable when it is set to a smaller non-negative integer. Read once.
GroundSize MaxGroundSize();

// Throws kCapExceeded unless n <= limit and n <= MaxGroundSize().
void CheckGroundSize(GroundSize n, GroundSize limit = kMaxGroundSize);

constexpr SubsetMask FullMask(GroundSize n) {
  return n == 0 ? 0u : (~SubsetMask{0} >> (32 - n));
}

constexpr std::size_t PowersetSize(GroundSize n) { return std::size_t{1} << n; }

constexpr bool InRange(SubsetMask a, GroundSize n) {
  return n >= 32 || (a >> n) == 0;
}

constexpr bool IsSubset(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

inline int Cardinality(SubsetMask a) { return std::popcount(a); }

// Throws kMaskOutOfRange if a >= 2^n.
void CheckMask(SubsetMask a, GroundSize n);

// A total function between finite ground sets.
class PointMap {
 public:
  PointMap() = default;
  // Throws kRangeError if some image point is >= codomain_size.
  PointMap(GroundSize domain_size, GroundSize codomain_size,
           std::vector<GroundSize> image);

  static PointMap Identity(GroundSize n);

  GroundSize domain_size() const { return domain_size_; }
  GroundSize codomain_size() const { return codomain_size_; }
  std::span<const GroundSize> image() const { return image_; }
  GroundSize operator()(GroundSize x) const { return image_[x]; }

  friend bool operator==(const PointMap&, const PointMap&) = default;

 private:
  GroundSize domain_size_ = 0;
  GroundSize codomain_size_ = 0;
  std::vector<GroundSize> image_;
};

// f^{-1}(b) as a mask over the domain. Throws kMaskOutOfRange if b is not a
// subset of the codomain.
SubsetMask Preimage(const PointMap& f, SubsetMask b);

// Preimages of every codomain subset, indexed by codomain mask.
std::vector<SubsetMask> PreimageTable(const PointMap& f);

// True iff a and b are disjoint and together cover all n points. Either part
// may be empty.
bool IsPartition(SubsetMask a, SubsetMask b, GroundSize n);

// Re-indexes a subset a of y onto {0, ..., |y|-1}: the k-th lowest member
// of y becomes point k (parallel bit extract). Throws kNotASubset.
SubsetMask Compress(SubsetMask a, SubsetMask y);

// Inverse of Compress (parallel bit deposit). Throws kMaskOutOfRange if c
// has bits at or above |y|.
SubsetMask Decompress(SubsetMask c, SubsetMask y);

// Calls fn(sub) for every submask of `mask`, in ascending order.
template <typename Fn>
void ForEachSubmask(SubsetMask mask, Fn&& fn) {
  SubsetMask sub = 0;
  while (true) {
    fn(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace ptop

#endif  // PTOP_SUBSET_HPP_
