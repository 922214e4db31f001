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

// Command-line front end. Exit status: 0 success / property holds,
// 1 property fails (witness on stdout), 2 input error (message on stderr).

#include <omp.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptop/error.hpp"
#include "ptop/io.hpp"
#include "ptop/levels.hpp"
#include "ptop/maps.hpp"
#include "ptop/properties.hpp"
#include "ptop/pspace.hpp"
#include "ptop/random.hpp"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ptop::Error(ptop::ErrorCode::kSyntaxError,
                      "cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ptop::Error(ptop::ErrorCode::kSyntaxError,
                      "cannot write '" + path + "'");
  }
  out << text;
}

ptop::PSpace LoadPSpace(const std::string& path) {
  return ptop::PSpace::FromWeights(ptop::ParsePSpace(ReadFile(path)));
}

std::vector<ptop::SubsetMask> ParseMaskList(const std::string& text) {
  std::vector<ptop::SubsetMask> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(ptop::ParseMask(item));
  }
  return out;
}

struct Options {
  int jobs = 0;
  std::string file;
  std::string out;
  bool exhaustive = false;
  std::string subset;
  std::string map;
  std::string dom;
  std::string cod;
  std::string q;
  std::string members;
  bool minimal = false;
  unsigned n = 0;
  unsigned levels = 1;
  std::uint64_t seed = 0;
};

int RunValidate(const Options& o) {
  const ptop::WeightTable w = ptop::ParsePSpace(ReadFile(o.file));
  const auto reports =
      o.exhaustive ? ptop::VerifyExhaustive(w) : ptop::VerifyPairwise(w);
  if (reports.empty()) {
    std::cout << "ok\n";
    return kHolds;
  }
  for (const auto& r : reports) std::cout << ptop::FormatReport(r) << '\n';
  return kFails;
}

int RunComplete(const Options& o) {
  const ptop::WeightTable w = ptop::ParsePSpace(ReadFile(o.file));
  WriteOutput(o.out, ptop::SerializePSpace(ptop::Complete(w)));
  return kHolds;
}

int RunSubspace(const Options& o) {
  const ptop::PSpace p = LoadPSpace(o.file);
  WriteOutput(o.out,
              ptop::SerializePSpace(ptop::Subspace(p, ptop::ParseMask(o.subset))));
  return kHolds;
}

int RunContinuity(const Options& o) {
  const ptop::PointMap f = ptop::ParsePMap(ReadFile(o.map));
  const ptop::PSpace dom = LoadPSpace(o.dom);
  const ptop::PSpace cod = LoadPSpace(o.cod);
  const auto result = ptop::CheckPContinuous(f, dom, cod);
  if (result.continuous()) {
    std::cout << "continuous\n";
    return kHolds;
  }
  std::cout << "witness " << *result.witness << '\n';
  return kFails;
}

int RunLevels(const Options& o) {
  const ptop::LevelChain chain = ptop::Decompose(LoadPSpace(o.file));
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    std::cout << ptop::FormatProbability(chain.levels[i]) << ' '
              << chain.cuts[i].size();
    for (ptop::SubsetMask a : chain.cuts[i]) std::cout << ' ' << a;
    std::cout << '\n';
  }
  return kHolds;
}

int RunConnectivity(const Options& o) {
  const ptop::PSpace p = LoadPSpace(o.file);
  if (o.q.empty()) {
    if (auto m = ptop::ConnectivityThreshold(p)) {
      std::cout << "threshold " << ptop::FormatProbability(*m) << '\n';
    } else {
      std::cout << "always-connected\n";
    }
    return kHolds;
  }
  const auto split = ptop::FindDisconnection(p, ptop::ParseProbability(o.q));
  if (!split) {
    std::cout << "connected\n";
    return kHolds;
  }
  std::cout << "disconnected " << split->a << ' ' << split->b << '\n';
  return kFails;
}

int RunCover(const Options& o) {
  const ptop::PSpace p = LoadPSpace(o.file);
  const ptop::Cover cover(p.ground_size(), ParseMaskList(o.members));
  const auto check = ptop::CheckQCover(p, cover, ptop::ParseProbability(o.q));
  switch (check.status) {
    case ptop::CoverStatus::kNotCovering:
      std::cout << "not-covering " << check.uncovered_point << '\n';
      return kFails;
    case ptop::CoverStatus::kLowProbability:
      std::cout << "low-probability " << check.low_member << '\n';
      return kFails;
    case ptop::CoverStatus::kCover:
      break;
  }
  std::cout << "q-cover\n";
  if (o.minimal) {
    const ptop::Cover best = ptop::MinSubcover(cover);
    std::cout << "minimal";
    for (ptop::SubsetMask a : best.members()) {
      std::cout << ' ' << a;
    }
    std::cout << '\n';
  }
  return kHolds;
}

int RunGenerate(const Options& o) {
  WriteOutput(o.out,
              ptop::SerializePSpace(ptop::RandomPSpace(o.n, o.levels, o.seed)));
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic topologies on finite sets"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--jobs", o.jobs, "OpenMP threads for verification scans")
      ->check(CLI::NonNegativeNumber);

  auto* validate = app.add_subcommand("validate", "check the p-topology axioms");
  validate->add_option("file", o.file)->required();
  validate->add_flag("--exhaustive", o.exhaustive,
                     "check every family of subsets (n <= 4)");

  auto* complete =
      app.add_subcommand("complete", "least p-topology above a weight table");
  complete->add_option("file", o.file)->required();
  complete->add_option("-o,--output", o.out, "output file (default stdout)");

  auto* subspace = app.add_subcommand("subspace", "subspace structure on a subset");
  subspace->add_option("file", o.file)->required();
  subspace->add_option("--subset", o.subset)->required();
  subspace->add_option("-o,--output", o.out);

  auto* continuity = app.add_subcommand("continuity", "check p-continuity of a map");
  continuity->add_option("--map", o.map)->required();
  continuity->add_option("--dom", o.dom)->required();
  continuity->add_option("--cod", o.cod)->required();

  auto* levels = app.add_subcommand("levels", "print the level cuts");
  levels->add_option("file", o.file)->required();

  auto* connectivity =
      app.add_subcommand("connectivity", "connectivity threshold or q-check");
  connectivity->add_option("file", o.file)->required();
  connectivity->add_option("--q", o.q);

  auto* cover = app.add_subcommand("cover", "check a q-cover");
  cover->add_option("file", o.file)->required();
  cover->add_option("--q", o.q)->required();
  cover->add_option("--members", o.members, "comma-separated masks")->required();
  cover->add_flag("--minimal", o.minimal, "also print a minimum subcover");

  auto* generate = app.add_subcommand("generate", "seeded random p-space");
  generate->add_option("--n", o.n)->required();
  generate->add_option("--levels", o.levels)->required();
  generate->add_option("--seed", o.seed)->required();
  generate->add_option("-o,--output", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (o.jobs > 0) omp_set_num_threads(o.jobs);

  try {
    if (*validate) return RunValidate(o);
    if (*complete) return RunComplete(o);
    if (*subspace) return RunSubspace(o);
    if (*continuity) return RunContinuity(o);
    if (*levels) return RunLevels(o);
    if (*connectivity) return RunConnectivity(o);
    if (*cover) return RunCover(o);
    if (*generate) return RunGenerate(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
