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

// Wall-clock and oracle-call benchmarks. Every benchmark reports
// calls_per_op, the mean number of oracle calls per stream operation (or per
// peel call).

#include <cstdint>
#include <numeric>
#include <vector>

#include "benchmark/benchmark.h"
#include "dynsub/experiment.h"
#include "dynsub/graph_gen.h"
#include "dynsub/oracle.h"
#include "dynsub/peeling.h"
#include "dynsub/stream.h"

namespace dynsub {
namespace {

void BM_Peel(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::size_t k = static_cast<std::size_t>(state.range(1));
  ModularFunction f(std::vector<double>(n, 1.0));
  CountingOracle oracle(f);
  ElementSet candidates(n);
  std::iota(candidates.begin(), candidates.end(), ElementId{0});
  Context base = oracle.NewContext();
  Rng rng(1);
  const PeelingOptions options =
      state.range(2) == 0 ? PeelingOptions::Exact() : PeelingOptions::Practical();
  std::uint64_t peels = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Peel(candidates, 1.0, k, 0.1, base, rng, options));
    ++peels;
  }
  state.counters["calls_per_op"] =
      static_cast<double>(oracle.query_count()) / static_cast<double>(peels);
}
BENCHMARK(BM_Peel)->Args({1000, 20, 1})->Args({10000, 20, 1})->Args({1000, 20, 0});

void BM_WindowStream(benchmark::State& state) {
  const auto kind = static_cast<AlgoKind>(state.range(0));
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  const Graph graph = PreferentialAttachment(n, 4, 7);
  AlgoParams params;
  params.k = 20;
  params.eps = 0.2;
  StreamSpec spec;
  spec.window = n / 2;
  std::uint64_t calls = 0;
  std::uint64_t ops = 0;
  for (auto _ : state) {
    RunResult run = RunOnce(graph, kind, params, spec, 11, 13);
    calls += run.total_calls;
    ops += run.records.size();
  }
  state.SetLabel(AlgoName(kind));
  state.counters["calls_per_op"] = static_cast<double>(calls) / static_cast<double>(ops);
}
BENCHMARK(BM_WindowStream)
    ->Args({static_cast<int>(AlgoKind::kSimple), 2000})
    ->Args({static_cast<int>(AlgoKind::kSieve), 2000})
    ->Args({static_cast<int>(AlgoKind::kFull), 1000})
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

}  // namespace
}  // namespace dynsub

BENCHMARK_MAIN();
