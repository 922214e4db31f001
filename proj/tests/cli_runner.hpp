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

// Runs the ptop binary through the shell and captures stdout and status.
// PTOP_CLI_PATH and PTOP_TEST_DATA_DIR come from the build.

#ifndef PTOP_TESTS_CLI_RUNNER_HPP_
#define PTOP_TESTS_CLI_RUNNER_HPP_

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace ptop::testing {

struct CliResult {
  int status = -1;
  std::string out;
};

inline std::string DataPath(const std::string& name) {
  return std::string(PTOP_TEST_DATA_DIR) + "/" + name;
}

// args is appended to the binary path verbatim; stderr is discarded.
inline CliResult RunCli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + PTOP_CLI_PATH + "\" " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

inline std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ptop::testing

#endif  // PTOP_TESTS_CLI_RUNNER_HPP_
