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

// SNAP-style edge lists: one "u v" pair per line, '#' comments.

#ifndef DYNSUB_SNAP_IO_H_
#define DYNSUB_SNAP_IO_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynsub/graph.h"

namespace dynsub {

class SnapParseError : public std::runtime_error {
 public:
  SnapParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadedGraph {
  Graph graph;
  // original_ids[v] is the file's id of dense node v, ascending.
  std::vector<std::uint64_t> original_ids;
};

// Parses an edge list. Blank lines and lines starting with '#' are skipped;
// any other line must hold exactly two non-negative integers. Node ids are
// remapped to 0..n-1 in increasing order of the file ids.
LoadedGraph ParseSnapEdges(std::istream& in, const std::string& source = "<stream>");
// Throws std::runtime_error when the file cannot be read.
LoadedGraph LoadSnapEdges(const std::string& path);

// Writes every undirected edge once. Uses `original_ids` for labels when it
// is nonempty, dense ids otherwise.
void WriteEdgeList(const Graph& graph, const std::string& path,
                   std::span<const std::uint64_t> original_ids = {});

}  // namespace dynsub

#endif  // DYNSUB_SNAP_IO_H_
