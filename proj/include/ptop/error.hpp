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

#ifndef PTOP_ERROR_HPP_
#define PTOP_ERROR_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ptop {

enum class ErrorCode {
  kMaskOutOfRange,
  kNotASubset,
  kProbabilityOutOfRange,
  kDuplicateMask,
  kCapExceeded,
  kNotATopology,
  kNotAPSpace,
  kChainNotNested,
  kMissingBase,
  kDimensionMismatch,
  kNotACover,
  kSyntaxError,
  kUnsupportedVersion,
  kRangeError,
};

std::string_view ErrorCodeName(ErrorCode code);

// A pair of subsets that demonstrates why an input was rejected, e.g. two
// open sets whose union is missing from a would-be topology.
struct WitnessPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
};

// All library failures are reported by throwing Error. The CLI maps every
// Error to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<WitnessPair> witness = std::nullopt)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code),
        detail_(what),
        witness_(witness) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }
  const std::optional<WitnessPair>& witness() const noexcept {
    return witness_;
  }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<WitnessPair> witness_;
};

}  // namespace ptop

#endif  // PTOP_ERROR_HPP_
