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

// Text formats.
//
// PTOP v1 (a weight table / p-space):
//
//   ptop 1
//   n <ground size>
//   <mask> <probability>      zero or more lines
//
// Masks are decimal, 0b-binary or 0x-hex. Unlisted masks take 0, except the
// empty and full sets which take 1. `#` starts a comment; blank lines are
// ignored. The canonical form written by SerializePSpace lists exactly the
// non-default entries in ascending mask order, with decimal masks and
// probabilities in shortest round-trip notation.
//
// PMAP v1 (a point map):
//
//   pmap 1
//   dom <n>
//   cod <m>
//   <x> <f(x)>                exactly one line per domain point

#ifndef PTOP_IO_HPP_
#define PTOP_IO_HPP_

#include <string>
#include <string_view>

#include "ptop/pspace.hpp"
#include "ptop/subset.hpp"

namespace ptop {

// Decimal, 0b or 0x. Throws kSyntaxError.
SubsetMask ParseMask(std::string_view text);

// Decimal floating point; the whole token must parse. Throws kSyntaxError
// or kProbabilityOutOfRange.
Probability ParseProbability(std::string_view text);

// Shortest decimal text that parses back to the same binary64 value.
std::string FormatProbability(Probability q);

// Throws kSyntaxError (message names the line), kUnsupportedVersion,
// kCapExceeded and the WeightTable::Build errors.
WeightTable ParsePSpace(std::string_view text);

std::string SerializePSpace(const WeightTable& w);
inline std::string SerializePSpace(const PSpace& p) {
  return SerializePSpace(p.weights());
}

// Throws kSyntaxError, kUnsupportedVersion, kRangeError or kCapExceeded.
PointMap ParsePMap(std::string_view text);
std::string SerializePMap(const PointMap& f);

// One line, no trailing newline, e.g. "union 1 2 required 0.7 actual 0.2".
// Exhaustive reports insert "family <bits>" after the witness masks.
std::string FormatReport(const ViolationReport& r);

}  // namespace ptop

#endif  // PTOP_IO_HPP_
