// Copyright 2026 The Authors.
//
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

#ifndef DYNSUB_TOOLS_CLI_H_
#define DYNSUB_TOOLS_CLI_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dynsub/experiment.h"
#include "dynsub/graph.h"

namespace dynsub::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

struct RunConfig {
  AlgoKind algo = AlgoKind::kFull;
  std::string dataset;
  StreamSpec stream;
  std::vector<std::size_t> ks;
  double eps = 0.0;
  double eps1 = 1.0;
  double epsp = 0.1;
  double sieve_eps = 0.1;
  std::uint64_t seed = 1;
  std::size_t repeats = 5;
  std::string out = ".";
  // "exact" or "practical".
  std::string profile = "practical";
  std::size_t blocks = 400;
  bool records = false;

  bool operator==(const RunConfig&) const = default;
};

// "20", "10,20,40" or "lo..hi:step". Throws std::invalid_argument.
std::vector<std::size_t> ExpandKGrid(std::string_view text);

struct ParseResult {
  // Set when the caller should exit right away (help, usage error).
  std::optional<int> exit_code;
  RunConfig config;
};

// Parses `dynsub run [flags]`. Help goes to `out`, errors to `err`.
ParseResult ParseArgs(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// A SNAP file path, "synthetic:ba:<n>:<m>:<seed>" or
// "synthetic:er:<n>:<avg_degree>:<seed>".
Graph LoadDataset(const std::string& dataset);

// Flag-named entries that reproduce `config` when fed back to ParseArgs,
// plus informational keys.
std::map<std::string, std::string> Manifest(const RunConfig& config, const Graph& graph);

int RunMain(const RunConfig& config, std::ostream& out, std::ostream& err);

// ParseArgs followed by RunMain.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dynsub::cli

#endif  // DYNSUB_TOOLS_CLI_H_
