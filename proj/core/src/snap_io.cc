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

#include "dynsub/snap_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <utility>

namespace dynsub {
namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

SnapParseError::SnapParseError(const std::string& source, std::size_t line,
                               const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

LoadedGraph ParseSnapEdges(std::istream& in, const std::string& source) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size() && IsSpace(line[pos])) ++pos;
    if (pos == line.size() || line[pos] == '#') continue;

    std::uint64_t ids[2];
    int fields = 0;
    while (pos < line.size()) {
      std::size_t end = pos;
      while (end < line.size() && !IsSpace(line[end])) ++end;
      if (fields == 2) throw SnapParseError(source, line_no, "expected two node ids");
      auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, ids[fields]);
      if (ec != std::errc() || ptr != line.data() + end) {
        throw SnapParseError(source, line_no,
                             "bad node id '" + line.substr(pos, end - pos) + "'");
      }
      ++fields;
      pos = end;
      while (pos < line.size() && IsSpace(line[pos])) ++pos;
    }
    if (fields != 2) throw SnapParseError(source, line_no, "expected two node ids");
    raw.emplace_back(ids[0], ids[1]);
  }
  if (in.bad()) throw std::runtime_error(source + ": read error");

  LoadedGraph out;
  for (const auto& [u, v] : raw) {
    out.original_ids.push_back(u);
    out.original_ids.push_back(v);
  }
  std::sort(out.original_ids.begin(), out.original_ids.end());
  out.original_ids.erase(std::unique(out.original_ids.begin(), out.original_ids.end()),
                         out.original_ids.end());
  if (out.original_ids.size() > std::size_t{0xffffffff}) {
    throw std::runtime_error(source + ": too many nodes");
  }
  auto dense = [&](std::uint64_t id) {
    return static_cast<ElementId>(
        std::lower_bound(out.original_ids.begin(), out.original_ids.end(), id) -
        out.original_ids.begin());
  };
  std::vector<std::pair<ElementId, ElementId>> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) edges.emplace_back(dense(u), dense(v));
  out.graph = Graph::FromEdges(out.original_ids.size(), edges);
  return out;
}

LoadedGraph LoadSnapEdges(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  return ParseSnapEdges(in, path);
}

void WriteEdgeList(const Graph& graph, const std::string& path,
                   std::span<const std::uint64_t> original_ids) {
  if (!original_ids.empty() && original_ids.size() != graph.node_count()) {
    throw std::invalid_argument("id map size does not match the graph");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  auto label = [&](ElementId v) -> std::uint64_t {
    return original_ids.empty() ? v : original_ids[v];
  };
  out << "# Nodes: " << graph.node_count() << " Edges: " << graph.edge_count() << "\n";
  for (const auto& [u, v] : graph.Edges()) out << label(u) << '\t' << label(v) << '\n';
  out.flush();
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace dynsub
