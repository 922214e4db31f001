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

#include "ptop/reference.hpp"

#include <algorithm>

#include "ptop/error.hpp"

namespace ptop::reference {

std::vector<ViolationReport> VerifyPairwise(const WeightTable& w,
                                            std::size_t max_reports) {
  const GroundSize n = w.ground_size();
  CheckGroundSize(n, kPairwiseCap);
  const SubsetMask full = FullMask(n);
  const SubsetMask size = static_cast<SubsetMask>(PowersetSize(n));

  std::vector<ViolationReport> out;
  std::vector<ViolationReport> inters;
  if (w[0] < 1.0) out.push_back({ViolationKind::kBoundary, 0, 0, 1.0, w[0]});
  if (full != 0 && w[full] < 1.0) {
    out.push_back({ViolationKind::kBoundary, full, 0, 1.0, w[full]});
  }
  for (SubsetMask a = 0; a < size; ++a) {
    for (SubsetMask b = a + 1; b < size; ++b) {
      const Probability m = std::min(w[a], w[b]);
      if (w[a | b] < m) {
        out.push_back({ViolationKind::kUnion, a, b, m, w[a | b]});
      }
      if (w[a & b] < m) {
        inters.push_back({ViolationKind::kIntersection, a, b, m, w[a & b]});
      }
    }
  }
  out.insert(out.end(), inters.begin(), inters.end());
  if (out.size() > max_reports) out.resize(max_reports);
  return out;
}

PSpace Complete(const WeightTable& w) {
  const GroundSize n = w.ground_size();
  CheckGroundSize(n, kPairwiseCap);
  const SubsetMask size = static_cast<SubsetMask>(PowersetSize(n));
  std::vector<Probability> t(w.values().begin(), w.values().end());
  t.front() = 1.0;
  t.back() = 1.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (SubsetMask a = 0; a < size; ++a) {
      for (SubsetMask b = 0; b < size; ++b) {
        const Probability m = std::min(t[a], t[b]);
        if (t[a | b] < m) {
          t[a | b] = m;
          changed = true;
        }
        if (t[a & b] < m) {
          t[a & b] = m;
          changed = true;
        }
      }
    }
  }
  return PSpace::FromTrustedWeights(WeightTable(n, std::move(t)));
}

PSpace Subspace(const PSpace& p, SubsetMask y) {
  CheckMask(y, p.ground_size());
  const auto k = static_cast<GroundSize>(Cardinality(y));
  std::vector<Probability> t(PowersetSize(k), 0.0);
  ForEachSubmask(y, [&](SubsetMask a) {
    t[Compress(a, y)] = SubspaceProb(p, y, a);
  });
  return PSpace::FromTrustedWeights(WeightTable(k, std::move(t)));
}

ContinuityResult CheckPContinuous(const PointMap& f, const PSpace& domain,
                                  const PSpace& codomain) {
  if (f.domain_size() != domain.ground_size() ||
      f.codomain_size() != codomain.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch, "map does not match spaces");
  }
  CheckGroundSize(codomain.ground_size());
  ContinuityResult result;
  const SubsetMask size =
      static_cast<SubsetMask>(PowersetSize(codomain.ground_size()));
  for (SubsetMask a = 0; a < size; ++a) {
    if (domain[Preimage(f, a)] < codomain[a]) {
      result.witness = a;
      break;
    }
  }
  return result;
}

std::optional<Disconnection> FindDisconnection(const PSpace& p,
                                               Probability q) {
  CheckProbability(q);
  const GroundSize n = p.ground_size();
  const SubsetMask full = FullMask(n);
  for (SubsetMask a = 1; a < full; ++a) {
    if ((a & 1u) && p[a] >= q && p[full ^ a] >= q) {
      return Disconnection{a, full ^ a};
    }
  }
  return std::nullopt;
}

std::optional<Probability> ConnectivityThreshold(const PSpace& p) {
  const GroundSize n = p.ground_size();
  if (n <= 1) return std::nullopt;
  const SubsetMask full = FullMask(n);
  Probability best = 0.0;
  for (SubsetMask a = 1; a < full; ++a) {
    best = std::max(best, std::min(p[a], p[full ^ a]));
  }
  return best;
}

}  // namespace ptop::reference
