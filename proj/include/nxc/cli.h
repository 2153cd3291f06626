// Copyright 2026 The nexcodec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NXC_CLI_H_
#define NXC_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace nxc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Enough to rerun a command: the argv, the resolved inputs and the seed.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::string config_path;
  std::string preset;
  uint64_t seed = 0;
  std::string output;
  std::string timestamp;  // UTC, ISO 8601
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json ToJson() const;
  void Write(const std::string& path) const;
};

// Subcommands: train, compress, decompress, eval, bdrate, bench, synth,
// export-cdf. Returns 0 on success, 2 for usage/config errors and missing
// inputs, 1 for runtime failures.
int CliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nxc

#endif  // NXC_CLI_H_
