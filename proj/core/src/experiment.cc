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

#include "dynsub/experiment.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "dynsub/dynamic_structure.h"
#include "dynsub/guess_ensemble.h"
#include "dynsub/random_k.h"
#include "dynsub/reference.h"
#include "dynsub/sieve_streaming.h"

namespace dynsub {
namespace {

// Applies one event and appends its record.
class Recorder {
 public:
  Recorder(DynamicAlgorithm& algo, CountingOracle& oracle, const MetricsRecord& tag,
           RunResult& out)
      : algo_(algo), oracle_(oracle), tag_(tag), out_(out) {}

  const Solution& Apply(const StreamEvent& event) {
    const std::uint64_t before = oracle_.query_count();
    if (event.kind == EventKind::kInsert) {
      algo_.Insert(event.element);
    } else {
      algo_.Delete(event.element);
    }
    const std::uint64_t mid = oracle_.query_count();
    last_ = algo_.CurrentSolution();
    const std::uint64_t after = oracle_.query_count();

    MetricsRecord r = tag_;
    r.op_index = out_.records.size();
    r.kind = event.kind;
    r.element = event.element;
    r.oracle_calls = mid - before;
    r.query_calls = after - mid;
    out_.total_calls += r.oracle_calls;
    out_.query_calls += r.query_calls;
    r.cumulative_calls = out_.total_calls;
    r.solution_value = last_.value;
    r.solution_size = last_.elements.size();
    out_.records.push_back(std::move(r));
    sum_f_ += last_.value;
    return last_;
  }

  void Finish() {
    out_.average_f =
        out_.records.empty() ? 0.0 : sum_f_ / static_cast<double>(out_.records.size());
  }

 private:
  DynamicAlgorithm& algo_;
  CountingOracle& oracle_;
  const MetricsRecord& tag_;
  RunResult& out_;
  Solution last_;
  double sum_f_ = 0.0;
};

double Mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double SampleStddev(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double mean = Mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

std::string AlgoName(AlgoKind kind) {
  switch (kind) {
    case AlgoKind::kFull:
      return "full";
    case AlgoKind::kSimple:
      return "simple";
    case AlgoKind::kSieve:
      return "sieve";
    case AlgoKind::kRandom:
      return "random";
    case AlgoKind::kGreedy:
      return "greedy";
  }
  return "unknown";
}

std::optional<AlgoKind> ParseAlgoKind(std::string_view name) {
  for (AlgoKind kind : {AlgoKind::kFull, AlgoKind::kSimple, AlgoKind::kSieve, AlgoKind::kRandom,
                        AlgoKind::kGreedy}) {
    if (AlgoName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::unique_ptr<DynamicAlgorithm> MakeAlgorithm(AlgoKind kind, CountingOracle& oracle,
                                                const AlgoParams& params, std::uint64_t seed) {
  switch (kind) {
    case AlgoKind::kFull: {
      CoreParams p;
      p.k = params.k;
      p.eps = params.eps;
      p.eps1 = params.eps1;
      p.eps_p = params.eps_p;
      p.peeling = params.peeling;
      return GuessEnsemble::Full(oracle, p, seed);
    }
    case AlgoKind::kSimple: {
      SimpleParams p;
      p.k = params.k;
      p.eps = params.eps;
      p.eps_p = params.eps_p;
      p.selection = params.selection;
      p.peeling = params.peeling;
      return GuessEnsemble::Simple(oracle, p, seed);
    }
    case AlgoKind::kSieve:
      return std::make_unique<SieveStreaming>(oracle, params.k, params.sieve_eps);
    case AlgoKind::kRandom:
      return std::make_unique<RandomK>(oracle, params.k, seed);
    case AlgoKind::kGreedy:
      return std::make_unique<GreedyRecompute>(oracle, params.k);
  }
  throw std::invalid_argument("unknown algorithm");
}

StreamSpec StreamSpec::Parse(std::string_view text) {
  StreamSpec spec;
  if (text == "degdel") {
    spec.kind = Kind::kDegreeDelete;
    return spec;
  }
  if (text == "degdel-solution") {
    spec.kind = Kind::kDegreeDeleteSolution;
    return spec;
  }
  constexpr std::string_view kPrefix = "window:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    const std::string digits(text.substr(kPrefix.size()));
    std::size_t used = 0;
    unsigned long long window = 0;
    try {
      window = std::stoull(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == digits.size() && !digits.empty() && digits[0] != '-' && window >= 1) {
      spec.kind = Kind::kWindow;
      spec.window = static_cast<std::size_t>(window);
      return spec;
    }
  }
  throw std::invalid_argument("bad stream spec '" + std::string(text) +
                              "' (expected window:<n>, degdel or degdel-solution)");
}

std::string StreamSpec::ToString() const {
  switch (kind) {
    case Kind::kWindow:
      return "window:" + std::to_string(window);
    case Kind::kDegreeDelete:
      return "degdel";
    case Kind::kDegreeDeleteSolution:
      return "degdel-solution";
  }
  return "unknown";
}

RunResult RunEvents(DynamicAlgorithm& algo, CountingOracle& oracle,
                    std::span<const StreamEvent> stream, const MetricsRecord& tag) {
  RunResult out;
  out.records.reserve(stream.size());
  Recorder recorder(algo, oracle, tag, out);
  for (const StreamEvent& event : stream) recorder.Apply(event);
  recorder.Finish();
  return out;
}

RunResult RunOnce(const Graph& graph, AlgoKind kind, const AlgoParams& params,
                  const StreamSpec& spec, std::uint64_t stream_seed, std::uint64_t algo_seed,
                  std::size_t repeat) {
  CoverageFunction f(graph);
  CountingOracle oracle(f);
  std::unique_ptr<DynamicAlgorithm> algo = MakeAlgorithm(kind, oracle, params, algo_seed);
  MetricsRecord tag;
  tag.algo = AlgoName(kind);
  tag.seed = algo_seed;
  tag.k = params.k;
  tag.eps = params.eps;
  tag.repeat = repeat;

  const std::size_t n = graph.node_count();
  switch (spec.kind) {
    case StreamSpec::Kind::kWindow: {
      const ElementSet order = ShuffledOrder(n, stream_seed);
      return RunEvents(*algo, oracle, GenWindowStream(order, spec.window), tag);
    }
    case StreamSpec::Kind::kDegreeDelete:
      return RunEvents(*algo, oracle, GenDegreeDeleteStream(graph, stream_seed), tag);
    case StreamSpec::Kind::kDegreeDeleteSolution:
      break;
  }

  RunResult out;
  out.records.reserve(2 * n);
  Recorder recorder(*algo, oracle, tag, out);
  std::vector<std::uint8_t> live(n, 0);
  ElementSet solution;
  for (ElementId e : ShuffledOrder(n, stream_seed)) {
    solution = recorder.Apply(Ins(e)).elements;
    live[e] = 1;
  }
  SolutionDeletePicker picker(graph);
  while (auto victim = picker.Next(solution, live)) {
    live[*victim] = 0;
    solution = recorder.Apply(Del(*victim)).elements;
  }
  recorder.Finish();
  return out;
}

BlockSeries Blocks(std::span<const MetricsRecord> records, std::size_t blocks) {
  BlockSeries out;
  const std::size_t n = records.size();
  const std::size_t count = std::min(blocks, n);
  if (count == 0) return out;
  const std::size_t width = n / count;
  for (std::size_t b = 0; b < count; ++b) {
    const std::size_t begin = b * width;
    const std::size_t end = b + 1 == count ? n : begin + width;
    double f = 0.0;
    double calls = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      f += records[i].solution_value;
      calls += static_cast<double>(records[i].oracle_calls);
    }
    out.f.push_back(f / static_cast<double>(end - begin));
    out.calls.push_back(calls);
  }
  return out;
}

std::uint64_t StreamSeed(std::uint64_t seed) { return MixSeed(seed, 0x5354524541ULL); }

std::uint64_t RepeatSeed(std::uint64_t seed, std::size_t k, std::size_t repeat) {
  return MixSeed(MixSeed(seed, k), repeat + 1);
}

std::size_t WorkersFromEnv() {
  const char* value = std::getenv("DYNSUB_WORKERS");
  if (value == nullptr) return 1;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (end == value || *end != '\0' || parsed < 1) return 1;
  return static_cast<std::size_t>(parsed);
}

ExperimentResult RunExperiment(const Graph& graph, const ExperimentConfig& config) {
  if (config.repeats == 0) throw std::invalid_argument("repeats must be at least 1");
  if (config.ks.empty()) throw std::invalid_argument("k grid is empty");
  const std::size_t cells = config.ks.size();
  const std::size_t jobs = cells * config.repeats;
  std::vector<RunResult> results(jobs);
  const std::uint64_t stream_seed = StreamSeed(config.seed);

  auto run_job = [&](std::size_t job) {
    const std::size_t cell = job / config.repeats;
    const std::size_t repeat = job % config.repeats;
    AlgoParams params = config.params;
    params.k = config.ks[cell];
    results[job] = RunOnce(graph, config.algo, params, config.stream, stream_seed,
                           RepeatSeed(config.seed, params.k, repeat), repeat);
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, jobs));
  if (workers == 1) {
    for (std::size_t job = 0; job < jobs; ++job) run_job(job);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t job = w; job < jobs; job += workers) run_job(job);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  ExperimentResult out;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    CellSummary summary;
    summary.k = config.ks[cell];
    summary.repeats = config.repeats;
    for (std::size_t repeat = 0; repeat < config.repeats; ++repeat) {
      RunResult& run = results[cell * config.repeats + repeat];
      summary.repeat_f.push_back(run.average_f);
      summary.repeat_calls.push_back(static_cast<double>(run.total_calls));
      BlockSeries series = Blocks(run.records, config.blocks);
      if (summary.blocks.f.empty()) {
        summary.blocks.f.assign(series.f.size(), 0.0);
        summary.blocks.calls.assign(series.calls.size(), 0.0);
      }
      for (std::size_t b = 0; b < series.f.size(); ++b) {
        summary.blocks.f[b] += series.f[b] / static_cast<double>(config.repeats);
        summary.blocks.calls[b] += series.calls[b] / static_cast<double>(config.repeats);
      }
      if (config.keep_records) {
        out.records.insert(out.records.end(), std::make_move_iterator(run.records.begin()),
                           std::make_move_iterator(run.records.end()));
      }
      run = RunResult{};
    }
    summary.mean_f = Mean(summary.repeat_f);
    summary.stddev_f = SampleStddev(summary.repeat_f);
    summary.mean_calls = Mean(summary.repeat_calls);
    summary.stddev_calls = SampleStddev(summary.repeat_calls);
    out.cells.push_back(std::move(summary));
  }
  return out;
}

}  // namespace dynsub
