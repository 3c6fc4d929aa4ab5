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

#include "dynsub/graph.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dynsub {

Graph Graph::FromEdges(std::size_t node_count,
                       std::span<const std::pair<ElementId, ElementId>> edges) {
  std::vector<std::pair<ElementId, ElementId>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw std::domain_error("edge endpoint " + std::to_string(std::max(u, v)) +
                              " outside graph of " + std::to_string(node_count) +
                              " nodes");
    }
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (const auto& arc : arcs) ++g.offsets_[arc.first + 1];
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.neighbors_.reserve(arcs.size());
  for (const auto& arc : arcs) g.neighbors_.push_back(arc.second);
  return g;
}

std::vector<std::pair<ElementId, ElementId>> Graph::Edges() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  out.reserve(edge_count());
  for (ElementId u = 0; u < node_count(); ++u) {
    for (ElementId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace dynsub
