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

// Experiment driver: builds an algorithm, replays a stream through it and
// records per-operation oracle calls and solution values.

#ifndef DYNSUB_EXPERIMENT_H_
#define DYNSUB_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynsub/algorithm.h"
#include "dynsub/graph.h"
#include "dynsub/oracle.h"
#include "dynsub/peeling.h"
#include "dynsub/simple_structure.h"
#include "dynsub/stream.h"
#include "dynsub/types.h"

namespace dynsub {

enum class AlgoKind { kFull, kSimple, kSieve, kRandom, kGreedy };

std::string AlgoName(AlgoKind kind);
std::optional<AlgoKind> ParseAlgoKind(std::string_view name);

struct AlgoParams {
  std::size_t k = 10;
  double eps = 0.0;
  double eps1 = 1.0;
  double eps_p = 0.1;
  double sieve_eps = 0.1;
  PeelingOptions peeling = PeelingOptions::Practical();
  SimpleSelection selection = SimpleSelection::kSingle;
};

// full and simple are guess ensembles; the rest are single instances.
std::unique_ptr<DynamicAlgorithm> MakeAlgorithm(AlgoKind kind, CountingOracle& oracle,
                                                const AlgoParams& params, std::uint64_t seed);

struct StreamSpec {
  enum class Kind { kWindow, kDegreeDelete, kDegreeDeleteSolution };
  Kind kind = Kind::kWindow;
  std::size_t window = 1;

  // "window:<n>", "degdel" or "degdel-solution". Throws
  // std::invalid_argument otherwise.
  static StreamSpec Parse(std::string_view text);
  std::string ToString() const;

  bool operator==(const StreamSpec&) const = default;
};

struct MetricsRecord {
  std::size_t op_index = 0;
  EventKind kind = EventKind::kInsert;
  ElementId element = 0;
  // Calls made by the update itself.
  std::uint64_t oracle_calls = 0;
  // Calls made to report the solution afterwards.
  std::uint64_t query_calls = 0;
  // Prefix sum of oracle_calls.
  std::uint64_t cumulative_calls = 0;
  double solution_value = 0.0;
  std::size_t solution_size = 0;
  std::string algo;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  double eps = 0.0;
  std::size_t repeat = 0;
};

struct RunResult {
  std::vector<MetricsRecord> records;
  // Mean solution value over operations; 0 for an empty stream.
  double average_f = 0.0;
  std::uint64_t total_calls = 0;
  std::uint64_t query_calls = 0;
};

// Replays a fixed stream. Throws what the algorithm throws.
RunResult RunEvents(DynamicAlgorithm& algo, CountingOracle& oracle,
                    std::span<const StreamEvent> stream, const MetricsRecord& tag = {});

// Generates the stream for `spec` (order from `stream_seed`) and replays it
// through a fresh algorithm seeded with `algo_seed`.
RunResult RunOnce(const Graph& graph, AlgoKind kind, const AlgoParams& params,
                  const StreamSpec& spec, std::uint64_t stream_seed, std::uint64_t algo_seed,
                  std::size_t repeat = 0);

struct BlockSeries {
  // Mean solution value per block.
  std::vector<double> f;
  // Summed update calls per block.
  std::vector<double> calls;
};

// min(blocks, n) equal blocks of the records; the last one absorbs the
// remainder.
BlockSeries Blocks(std::span<const MetricsRecord> records, std::size_t blocks = 400);

struct CellSummary {
  std::size_t k = 0;
  std::size_t repeats = 0;
  double mean_f = 0.0;
  // Sample standard deviation across repeats; 0 for a single repeat.
  double stddev_f = 0.0;
  double mean_calls = 0.0;
  double stddev_calls = 0.0;
  std::vector<double> repeat_f;
  std::vector<double> repeat_calls;
  // Blocks averaged over repeats.
  BlockSeries blocks;
};

struct ExperimentConfig {
  AlgoKind algo = AlgoKind::kFull;
  // k is taken from `ks`.
  AlgoParams params;
  std::vector<std::size_t> ks = {10};
  StreamSpec stream;
  std::uint64_t seed = 1;
  std::size_t repeats = 5;
  std::size_t blocks = 400;
  bool keep_records = false;
  std::size_t workers = 1;
};

struct ExperimentResult {
  std::vector<CellSummary> cells;
  // Per-operation records of every (k, repeat), in grid order; only when
  // keep_records is set.
  std::vector<MetricsRecord> records;
};

// Runs every (k, repeat) cell. The stream is the same for all cells;
// algorithm seeds differ per (k, repeat). Results do not depend on
// `workers`.
ExperimentResult RunExperiment(const Graph& graph, const ExperimentConfig& config);

std::uint64_t StreamSeed(std::uint64_t seed);
std::uint64_t RepeatSeed(std::uint64_t seed, std::size_t k, std::size_t repeat);

// Worker count from DYNSUB_WORKERS, defaulting to 1.
std::size_t WorkersFromEnv();

}  // namespace dynsub

#endif  // DYNSUB_EXPERIMENT_H_
