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

#include "cli_runner.hpp"
#include "doctest.h"

namespace ptop::testing {
namespace {

TEST_CASE("validate") {
  CliResult r = RunCli("validate " + DataPath("p1.ptop"));
  CHECK(r.status == 0);
  CHECK(r.out == "ok\n");
  r = RunCli("validate " + DataPath("boundary.ptop"));
  CHECK(r.status == 1);
  CHECK(r.out == "boundary 1 required 1 actual 0.4\n");
  r = RunCli("--jobs 2 validate --exhaustive " + DataPath("union.ptop"));
  CHECK(r.status == 1);
  r = RunCli("validate " + DataPath("missing.ptop"));
  CHECK(r.status == 2);
  CHECK(r.out.empty());
}

TEST_CASE("complete and subspace") {
  CliResult r = RunCli("complete " + DataPath("union.ptop"));
  CHECK(r.status == 0);
  CHECK(r.out == "ptop 1\nn 3\n1 0.7\n2 0.7\n3 0.7\n");
  r = RunCli("subspace " + DataPath("p1.ptop") + " --subset 1");
  CHECK(r.status == 0);
  CHECK(r.out == "ptop 1\nn 1\n");
  r = RunCli("subspace " + DataPath("p1.ptop") + " --subset 4");
  CHECK(r.status == 2);
}

TEST_CASE("continuity") {
  CliResult r = RunCli("continuity --map " + DataPath("identity2.pmap") +
                       " --dom " + DataPath("p1.ptop") + " --cod " +
                       DataPath("p1.ptop"));
  CHECK(r.status == 0);
  CHECK(r.out == "continuous\n");
  r = RunCli("continuity --map " + DataPath("identity2.pmap") + " --dom " +
             DataPath("indiscrete2.ptop") + " --cod " + DataPath("p1.ptop"));
  CHECK(r.status == 1);
  CHECK(r.out == "witness 1\n");
}

TEST_CASE("levels") {
  const CliResult r = RunCli("levels " + DataPath("p1.ptop"));
  CHECK(r.status == 0);
  CHECK(r.out == "0.3 4 0 1 2 3\n0.5 3 0 1 3\n1 2 0 3\n");
}

TEST_CASE("connectivity") {
  CliResult r = RunCli("connectivity " + DataPath("p1.ptop"));
  CHECK(r.out == "threshold 0.3\n");
  r = RunCli("connectivity " + DataPath("p1.ptop") + " --q 0.3");
  CHECK(r.status == 1);
  CHECK(r.out == "disconnected 1 2\n");
  r = RunCli("connectivity " + DataPath("p1.ptop") + " --q 0.31");
  CHECK(r.status == 0);
  CHECK(r.out == "connected\n");
  r = RunCli("connectivity " + DataPath("p1.ptop") + " --q 2");
  CHECK(r.status == 2);
}

TEST_CASE("cover") {
  CliResult r = RunCli("cover " + DataPath("p1.ptop") +
                       " --q 0.3 --members 1,2,3 --minimal");
  CHECK(r.status == 0);
  CHECK(r.out == "q-cover\nminimal 3\n");
  r = RunCli("cover " + DataPath("p1.ptop") + " --q 0.4 --members 1,2");
  CHECK(r.status == 1);
  CHECK(r.out == "low-probability 2\n");
  r = RunCli("cover " + DataPath("p1.ptop") + " --q 0 --members 0b01");
  CHECK(r.status == 1);
  CHECK(r.out == "not-covering 1\n");
}

TEST_CASE("generate") {
  const CliResult a = RunCli("generate --n 6 --levels 4 --seed 99");
  const CliResult b = RunCli("generate --n 6 --levels 4 --seed 99");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("ptop 1\nn 6\n", 0) == 0);
  CHECK(RunCli("generate --n 14 --levels 2 --seed 1").status == 2);
}

TEST_CASE("usage errors") {
  CHECK(RunCli("").status == 2);
  CHECK(RunCli("frobnicate").status == 2);
  CHECK(RunCli("validate").status == 2);
}

}  // namespace
}  // namespace ptop::testing
