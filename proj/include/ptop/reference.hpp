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

// Single-threaded reference versions of the OpenMP kernels. They follow the
// definitions as directly as possible and are kept for cross-checking and
// benchmarking; the library entry points never call them.

#ifndef PTOP_REFERENCE_HPP_
#define PTOP_REFERENCE_HPP_

#include <optional>
#include <vector>

#include "ptop/maps.hpp"
#include "ptop/properties.hpp"
#include "ptop/pspace.hpp"

namespace ptop::reference {

std::vector<ViolationReport> VerifyPairwise(
    const WeightTable& w, std::size_t max_reports = kUnlimitedReports);

// In-place sweeps over all pairs, repeated until a sweep changes nothing.
PSpace Complete(const WeightTable& w);

// Calls SubspaceProb once per subset of y.
PSpace Subspace(const PSpace& p, SubsetMask y);

// Ascending scan calling Preimage on each codomain subset; stops at the
// first failure.
ContinuityResult CheckPContinuous(const PointMap& f, const PSpace& domain,
                                  const PSpace& codomain);

std::optional<Disconnection> FindDisconnection(const PSpace& p,
                                               Probability q);

std::optional<Probability> ConnectivityThreshold(const PSpace& p);

}  // namespace ptop::reference

#endif  // PTOP_REFERENCE_HPP_
