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

#include "ptop/pspace.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ptop/error.hpp"

namespace ptop {

void CheckProbability(Probability q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::kProbabilityOutOfRange,
                "probability " + std::to_string(q) + " outside [0, 1]");
  }
}

WeightTable::WeightTable(GroundSize n, std::vector<Probability> values)
    : n_(n), values_(std::move(values)) {
  CheckGroundSize(n_);
  if (values_.size() != PowersetSize(n_)) {
    throw Error(ErrorCode::kRangeError,
                "table of " + std::to_string(values_.size()) +
                    " values for ground size " + std::to_string(n_));
  }
  for (Probability& v : values_) {
    CheckProbability(v);
    if (v == 0.0) v = 0.0;  // -0 -> +0
  }
}

WeightTable WeightTable::Build(GroundSize n, std::span<const Entry> entries) {
  CheckGroundSize(n);
  std::vector<Probability> values(PowersetSize(n), 0.0);
  values.front() = 1.0;
  values.back() = 1.0;
  std::vector<char> seen(values.size(), 0);
  for (const Entry& e : entries) {
    CheckMask(e.mask, n);
    CheckProbability(e.value);
    if (seen[e.mask]) {
      throw Error(ErrorCode::kDuplicateMask,
                  "mask " + std::to_string(e.mask) + " listed twice");
    }
    seen[e.mask] = 1;
    values[e.mask] = e.value;
  }
  return WeightTable(n, std::move(values));
}

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kRange: return "range";
    case ViolationKind::kBoundary: return "boundary";
    case ViolationKind::kUnion: return "union";
    case ViolationKind::kIntersection: return "intersection";
  }
  return "unknown";
}

namespace {

void AppendBoundaryReports(const WeightTable& w,
                           std::vector<ViolationReport>& out) {
  const SubsetMask full = FullMask(w.ground_size());
  if (w[0] < 1.0) out.push_back({ViolationKind::kBoundary, 0, 0, 1.0, w[0]});
  if (full != 0 && w[full] < 1.0) {
    out.push_back({ViolationKind::kBoundary, full, 0, 1.0, w[full]});
  }
}

}  // namespace

std::vector<ViolationReport> VerifyPairwise(const WeightTable& w,
                                            std::size_t max_reports) {
  CheckGroundSize(w.ground_size(), kPairwiseCap);
  std::vector<ViolationReport> out;
  AppendBoundaryReports(w, out);
  if (out.size() >= max_reports) {
    out.resize(max_reports);
    return out;
  }

  const auto size = static_cast<std::int64_t>(PowersetSize(w.ground_size()));
  const std::span<const Probability> t = w.values();
  std::vector<std::vector<ViolationReport>> unions(size);
  std::vector<std::vector<ViolationReport>> inters(size);

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t ia = 0; ia < size; ++ia) {
    const auto a = static_cast<SubsetMask>(ia);
    auto& u = unions[ia];
    auto& x = inters[ia];
    for (SubsetMask b = a + 1; b < size; ++b) {
      const Probability m = std::min(t[a], t[b]);
      if (t[a | b] < m && u.size() < max_reports) {
        u.push_back({ViolationKind::kUnion, a, b, m, t[a | b]});
      }
      if (t[a & b] < m && x.size() < max_reports) {
        x.push_back({ViolationKind::kIntersection, a, b, m, t[a & b]});
      }
    }
  }

  for (auto* lists : {&unions, &inters}) {
    for (const auto& part : *lists) {
      for (const auto& r : part) {
        if (out.size() >= max_reports) return out;
        out.push_back(r);
      }
    }
  }
  return out;
}

std::vector<ViolationReport> VerifyExhaustive(const WeightTable& w) {
  const GroundSize n = w.ground_size();
  CheckGroundSize(n, kExhaustiveCap);
  const std::size_t subsets = PowersetSize(n);
  const std::size_t families = std::size_t{1} << subsets;
  const SubsetMask full = FullMask(n);

  // Union, intersection and infimum of every family, built from the family
  // with its lowest member removed.
  std::vector<SubsetMask> uni(families);
  std::vector<SubsetMask> inter(families);
  std::vector<Probability> inf(families);
  uni[0] = 0;
  inter[0] = full;
  inf[0] = 1.0;

  std::vector<ViolationReport> boundary;
  std::vector<ViolationReport> unions;
  std::vector<ViolationReport> inters;
  if (w[0] < 1.0) {
    boundary.push_back({ViolationKind::kBoundary, 0, 0, 1.0, w[0], 0});
  }
  if (full != 0 && w[full] < 1.0) {
    boundary.push_back({ViolationKind::kBoundary, full, 0, 1.0, w[full], 0});
  }

  for (std::size_t fam = 1; fam < families; ++fam) {
    const auto low = static_cast<SubsetMask>(std::countr_zero(fam));
    const std::size_t rest = fam & (fam - 1);
    uni[fam] = uni[rest] | low;
    inter[fam] = inter[rest] & low;
    inf[fam] = std::min(inf[rest], w[low]);
    const auto high = static_cast<SubsetMask>(std::bit_width(fam) - 1);
    if (w[uni[fam]] < inf[fam]) {
      unions.push_back(
          {ViolationKind::kUnion, low, high, inf[fam], w[uni[fam]], fam});
    }
    if (w[inter[fam]] < inf[fam]) {
      inters.push_back({ViolationKind::kIntersection, low, high, inf[fam],
                        w[inter[fam]], fam});
    }
  }

  std::vector<ViolationReport> out = std::move(boundary);
  out.insert(out.end(), unions.begin(), unions.end());
  out.insert(out.end(), inters.begin(), inters.end());
  return out;
}

PSpace PSpace::FromWeights(WeightTable w) {
  const auto reports = VerifyPairwise(w, 1);
  if (!reports.empty()) {
    const ViolationReport& r = reports.front();
    throw Error(ErrorCode::kNotAPSpace,
                std::string(ViolationKindName(r.kind)) + " axiom fails at (" +
                    std::to_string(r.a) + ", " + std::to_string(r.b) + ")",
                WitnessPair{r.a, r.b});
  }
  return PSpace(std::move(w));
}

PSpace PSpace::FromTrustedWeights(WeightTable w) {
#ifndef NDEBUG
  if (w.ground_size() <= kPairwiseCap) return FromWeights(std::move(w));
#endif
  return PSpace(std::move(w));
}

Probability Prob(const PSpace& p, SubsetMask a) {
  CheckMask(a, p.ground_size());
  return p[a];
}

PSpace Complete(const WeightTable& w) {
  const GroundSize n = w.ground_size();
  CheckGroundSize(n, kPairwiseCap);
  const auto size = static_cast<std::int64_t>(PowersetSize(n));
  std::vector<Probability> table(w.values().begin(), w.values().end());
  table.front() = 1.0;
  table.back() = 1.0;

  // Jacobi-style passes: every pair reads the table from the previous pass
  // and raises a thread-local copy; the copies are merged with max.
  bool changed = true;
  while (changed) {
    std::vector<Probability> next = table;
#pragma omp parallel
    {
      std::vector<Probability> local = table;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::int64_t ia = 0; ia < size; ++ia) {
        const auto a = static_cast<SubsetMask>(ia);
        for (SubsetMask b = a + 1; b < size; ++b) {
          const Probability m = std::min(table[a], table[b]);
          if (local[a | b] < m) local[a | b] = m;
          if (local[a & b] < m) local[a & b] = m;
        }
      }
#pragma omp critical(ptop_complete_merge)
      for (std::int64_t i = 0; i < size; ++i) {
        if (next[i] < local[i]) next[i] = local[i];
      }
    }
    changed = next != table;
    table = std::move(next);
  }
  return PSpace::FromTrustedWeights(WeightTable(n, std::move(table)));
}

PSpace FromTopology(GroundSize n, std::span<const SubsetMask> opens) {
  CheckTopology(n, opens);
  std::vector<Probability> table(PowersetSize(n), 0.0);
  for (SubsetMask a : opens) table[a] = 1.0;
  return PSpace::FromTrustedWeights(WeightTable(n, std::move(table)));
}

}  // namespace ptop
