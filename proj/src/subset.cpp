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

#include "ptop/subset.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "ptop/error.hpp"

namespace ptop {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMaskOutOfRange: return "MaskOutOfRange";
    case ErrorCode::kNotASubset: return "NotASubset";
    case ErrorCode::kProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::kDuplicateMask: return "DuplicateMask";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotATopology: return "NotATopology";
    case ErrorCode::kNotAPSpace: return "NotAPSpace";
    case ErrorCode::kChainNotNested: return "ChainNotNested";
    case ErrorCode::kMissingBase: return "MissingBase";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotACover: return "NotACover";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::kRangeError: return "RangeError";
  }
  return "Unknown";
}

namespace {

GroundSize ReadMaxGroundSize() {
  const char* env = std::getenv("PTOP_MAX_N");
  if (env == nullptr) return kMaxGroundSize;
  unsigned value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  // Unparseable values are ignored; the variable can only lower the cap.
  if (ec != std::errc() || ptr != end) return kMaxGroundSize;
  return value < kMaxGroundSize ? value : kMaxGroundSize;
}

}  // namespace

GroundSize MaxGroundSize() {
  static const GroundSize cap = ReadMaxGroundSize();
  return cap;
}

void CheckGroundSize(GroundSize n, GroundSize limit) {
  const GroundSize cap = limit < MaxGroundSize() ? limit : MaxGroundSize();
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "ground size " + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap));
  }
}

void CheckMask(SubsetMask a, GroundSize n) {
  if (!InRange(a, n)) {
    throw Error(ErrorCode::kMaskOutOfRange,
                "mask " + std::to_string(a) + " is not a subset of a " +
                    std::to_string(n) + "-point set");
  }
}

PointMap::PointMap(GroundSize domain_size, GroundSize codomain_size,
                   std::vector<GroundSize> image)
    : domain_size_(domain_size),
      codomain_size_(codomain_size),
      image_(std::move(image)) {
  if (image_.size() != domain_size_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point map has " + std::to_string(image_.size()) +
                    " images for a domain of size " +
                    std::to_string(domain_size_));
  }
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] >= codomain_size_) {
      throw Error(ErrorCode::kRangeError,
                  "point " + std::to_string(x) + " maps to " +
                      std::to_string(image_[x]) + ", outside codomain of size " +
                      std::to_string(codomain_size_));
    }
  }
}

PointMap PointMap::Identity(GroundSize n) {
  std::vector<GroundSize> image(n);
  for (GroundSize i = 0; i < n; ++i) image[i] = i;
  return PointMap(n, n, std::move(image));
}

SubsetMask Preimage(const PointMap& f, SubsetMask b) {
  CheckMask(b, f.codomain_size());
  SubsetMask out = 0;
  for (GroundSize x = 0; x < f.domain_size(); ++x) {
    if ((b >> f(x)) & 1u) out |= SubsetMask{1} << x;
  }
  return out;
}

std::vector<SubsetMask> PreimageTable(const PointMap& f) {
  CheckGroundSize(f.codomain_size());
  const GroundSize m = f.codomain_size();
  // Fibers of single points, then unions built up from the lowest set bit.
  std::vector<SubsetMask> fiber(m, 0);
  for (GroundSize x = 0; x < f.domain_size(); ++x) {
    fiber[f(x)] |= SubsetMask{1} << x;
  }
  std::vector<SubsetMask> table(PowersetSize(m), 0);
  for (std::size_t b = 1; b < table.size(); ++b) {
    const auto low = static_cast<unsigned>(std::countr_zero(b));
    table[b] = table[b & (b - 1)] | fiber[low];
  }
  return table;
}

bool IsPartition(SubsetMask a, SubsetMask b, GroundSize n) {
  CheckMask(a, n);
  CheckMask(b, n);
  return (a | b) == FullMask(n) && (a & b) == 0;
}

SubsetMask Compress(SubsetMask a, SubsetMask y) {
  if (!IsSubset(a, y)) {
    throw Error(ErrorCode::kNotASubset,
                "mask " + std::to_string(a) + " is not a subset of " +
                    std::to_string(y));
  }
  SubsetMask out = 0;
  unsigned k = 0;
  for (SubsetMask rest = y; rest != 0; rest &= rest - 1, ++k) {
    const SubsetMask bit = rest & (~rest + 1);
    if (a & bit) out |= SubsetMask{1} << k;
  }
  return out;
}

SubsetMask Decompress(SubsetMask c, SubsetMask y) {
  CheckMask(c, static_cast<GroundSize>(Cardinality(y)));
  SubsetMask out = 0;
  unsigned k = 0;
  for (SubsetMask rest = y; rest != 0; rest &= rest - 1, ++k) {
    if ((c >> k) & 1u) out |= rest & (~rest + 1);
  }
  return out;
}

}  // namespace ptop
