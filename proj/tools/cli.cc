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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <exception>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <system_error>

#include "dynsub/csv.h"
#include "dynsub/graph_gen.h"
#include "dynsub/snap_io.h"

namespace dynsub::cli {
namespace {

std::size_t ParseCount(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> SplitOn(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos
                                                                    : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::string JoinKs(const std::vector<std::size_t>& ks) {
  std::string out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ks[i]);
  }
  return out;
}

void Validate(const RunConfig& c) {
  for (std::size_t k : c.ks) {
    if (k < 1) throw std::invalid_argument("--k values must be at least 1");
  }
  if (!(c.eps >= 0.0 && c.eps < 1.0)) throw std::invalid_argument("--eps must lie in [0, 1)");
  if (!(c.eps1 > 0.0)) throw std::invalid_argument("--eps1 must be positive");
  if (!(c.epsp > 0.0 && c.epsp < 1.0)) throw std::invalid_argument("--epsp must lie in (0, 1)");
  if (!(c.sieve_eps > 0.0)) throw std::invalid_argument("--sieve-eps must be positive");
  if (c.repeats < 1) throw std::invalid_argument("--repeats must be at least 1");
  if (c.blocks < 1) throw std::invalid_argument("--blocks must be at least 1");
  if (c.profile != "exact" && c.profile != "practical") {
    throw std::invalid_argument("--profile must be exact or practical");
  }
}

}  // namespace

std::vector<std::size_t> ExpandKGrid(std::string_view text) {
  std::vector<std::size_t> ks;
  const std::size_t dots = text.find("..");
  if (dots != std::string_view::npos) {
    const std::size_t colon = text.find(':', dots);
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("k grid must look like lo..hi:step");
    }
    const std::size_t lo = ParseCount(text.substr(0, dots), "k");
    const std::size_t hi = ParseCount(text.substr(dots + 2, colon - dots - 2), "k");
    const std::size_t step = ParseCount(text.substr(colon + 1), "k step");
    if (step == 0 || lo > hi) throw std::invalid_argument("empty k grid");
    for (std::size_t k = lo; k <= hi; k += step) ks.push_back(k);
  } else {
    for (std::string_view part : SplitOn(text, ',')) ks.push_back(ParseCount(part, "k"));
  }
  for (std::size_t k : ks) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
  }
  return ks;
}

ParseResult ParseArgs(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParseResult result;
  RunConfig& c = result.config;
  CLI::App app{"Fully dynamic submodular maximization experiments"};
  app.name("dynsub");
  app.require_subcommand(1);
  CLI::App* run = app.add_subcommand("run", "Replay a stream through one algorithm");

  std::string algo = "full";
  std::string stream;
  std::string k_text;
  run->add_option("--algo", algo, "full | simple | sieve | random | greedy")
      ->capture_default_str();
  run->add_option("--dataset", c.dataset,
                  "SNAP edge list, synthetic:ba:<n>:<m>:<seed> or "
                  "synthetic:er:<n>:<avg_degree>:<seed>")
      ->required();
  run->add_option("--stream", stream, "window:<size> | degdel | degdel-solution")->required();
  run->add_option("--k", k_text, "k, a list 10,20 or a grid lo..hi:step (10..70:10)")
      ->required();
  run->add_option("--eps", c.eps, "fraction of a level deleted before a rebuild, in [0,1)")
      ->capture_default_str();
  run->add_option("--eps1", c.eps1, "threshold ladder ratio minus one")->capture_default_str();
  run->add_option("--epsp", c.epsp, "peeling error and guess spacing, in (0,1)")
      ->capture_default_str();
  run->add_option("--sieve-eps", c.sieve_eps, "guess spacing of the sieve baseline")
      ->capture_default_str();
  run->add_option("--seed", c.seed, "base seed")->capture_default_str();
  run->add_option("--repeats", c.repeats, "independent repeats per k")->capture_default_str();
  run->add_option("--out", c.out, "output directory")->capture_default_str();
  run->add_option("--profile", c.profile, "peeling sample budget: exact | practical")
      ->capture_default_str();
  run->add_option("--blocks", c.blocks, "blocks in the timestep CSVs")->capture_default_str();
  run->add_flag("--records", c.records, "also write per-operation records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    result.exit_code = app.exit(e, out, err);
    return result;
  } catch (const CLI::CallForAllHelp& e) {
    result.exit_code = app.exit(e, out, err);
    return result;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    result.exit_code = kExitUsage;
    return result;
  }

  try {
    auto kind = ParseAlgoKind(algo);
    if (!kind) throw std::invalid_argument("unknown --algo '" + algo + "'");
    c.algo = *kind;
    c.stream = StreamSpec::Parse(stream);
    c.ks = ExpandKGrid(k_text);
    Validate(c);
  } catch (const std::invalid_argument& e) {
    err << "dynsub: " << e.what() << "\n" << "Run 'dynsub run --help' for usage.\n";
    result.exit_code = kExitUsage;
  }
  return result;
}

Graph LoadDataset(const std::string& dataset) {
  constexpr std::string_view kSynthetic = "synthetic:";
  if (dataset.rfind(kSynthetic, 0) != 0) return LoadSnapEdges(dataset).graph;
  const auto parts = SplitOn(std::string_view(dataset).substr(kSynthetic.size()), ':');
  if (parts.size() != 4 || (parts[0] != "ba" && parts[0] != "er")) {
    throw std::invalid_argument("synthetic dataset must be ba:<n>:<m>:<seed> or "
                                "er:<n>:<avg_degree>:<seed>");
  }
  const std::size_t n = ParseCount(parts[1], "node count");
  const std::uint64_t seed = ParseCount(parts[3], "seed");
  if (parts[0] == "ba") return PreferentialAttachment(n, ParseCount(parts[2], "edges per node"), seed);
  double degree = 0.0;
  const std::string text(parts[2]);
  std::size_t used = 0;
  try {
    degree = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw std::invalid_argument("bad average degree");
  return RandomGraph(n, degree, seed);
}

std::map<std::string, std::string> Manifest(const RunConfig& c, const Graph& graph) {
  return {
      {"algo", AlgoName(c.algo)},
      {"dataset", c.dataset},
      {"stream", c.stream.ToString()},
      {"k", JoinKs(c.ks)},
      {"eps", FormatNumber(c.eps)},
      {"eps1", FormatNumber(c.eps1)},
      {"epsp", FormatNumber(c.epsp)},
      {"sieve-eps", FormatNumber(c.sieve_eps)},
      {"seed", std::to_string(c.seed)},
      {"repeats", std::to_string(c.repeats)},
      {"profile", c.profile},
      {"blocks", std::to_string(c.blocks)},
      {"info.nodes", std::to_string(graph.node_count())},
      {"info.edges", std::to_string(graph.edge_count())},
      {"info.stream_seed", std::to_string(StreamSeed(c.seed))},
      {"info.stream_order", "seeded shuffle of node ids (stream_seed)"},
      {"info.oracle_convention",
       "one call per evaluation of f on one set; marginal with cached f(S) = 1 call; "
       "solution queries counted separately"},
      {"info.stddev", "sample standard deviation over repeats"},
      {"info.not_compared", "sliding-window baselines from other work are not implemented"},
      {"info.version", "dynsub 0.1.0"},
  };
}

int RunMain(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    const Graph graph = LoadDataset(c.dataset);
    ExperimentConfig config;
    config.algo = c.algo;
    config.params.eps = c.eps;
    config.params.eps1 = c.eps1;
    config.params.eps_p = c.epsp;
    config.params.sieve_eps = c.sieve_eps;
    config.params.peeling =
        c.profile == "exact" ? PeelingOptions::Exact() : PeelingOptions::Practical();
    config.ks = c.ks;
    config.stream = c.stream;
    config.seed = c.seed;
    config.repeats = c.repeats;
    config.blocks = c.blocks;
    config.keep_records = c.records;
    config.workers = WorkersFromEnv();
    const ExperimentResult result = RunExperiment(graph, config);

    std::filesystem::create_directories(c.out);
    const std::filesystem::path dir(c.out);
    const std::string prefix = AlgoName(c.algo) + "_";
    WriteSummaryF((dir / (prefix + "summary_f.csv")).string(), result.cells);
    WriteSummaryOC((dir / (prefix + "summary_oc.csv")).string(), result.cells);
    for (const CellSummary& cell : result.cells) {
      const std::string k = std::to_string(cell.k);
      WriteBlocksF((dir / (prefix + "blocks_f_k" + k + ".csv")).string(), cell.blocks);
      WriteBlocksOC((dir / (prefix + "blocks_oc_k" + k + ".csv")).string(), cell.blocks);
    }
    if (c.records) WriteRecords((dir / (prefix + "records.csv")).string(), result.records);
    WriteManifest((dir / (prefix + "manifest.txt")).string(), Manifest(c, graph));

    for (const CellSummary& cell : result.cells) {
      out << AlgoName(c.algo) << " k=" << cell.k << " f=" << FormatNumber(cell.mean_f)
          << " calls=" << FormatNumber(cell.mean_calls) << "\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "dynsub: " << e.what() << "\n";
    return kExitRuntime;
  }
}

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParseResult parsed = ParseArgs(argc, argv, out, err);
  if (parsed.exit_code) return *parsed.exit_code;
  return RunMain(parsed.config, out, err);
}

}  // namespace dynsub::cli
