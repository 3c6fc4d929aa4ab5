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

#ifndef DYNSUB_GRAPH_H_
#define DYNSUB_GRAPH_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dynsub/types.h"

namespace dynsub {

// Undirected simple graph in compressed sparse row form. Construction
// normalizes the edge list: self-loops are dropped, duplicates merged and
// every edge stored in both directions. Neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  static Graph FromEdges(std::size_t node_count,
                         std::span<const std::pair<ElementId, ElementId>> edges);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  // Number of undirected edges.
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const ElementId> neighbors(ElementId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(ElementId v) const { return offsets_[v + 1] - offsets_[v]; }

  // Each undirected edge once, as (u, v) with u < v, in sorted order.
  std::vector<std::pair<ElementId, ElementId>> Edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<ElementId> neighbors_;
};

}  // namespace dynsub

#endif  // DYNSUB_GRAPH_H_
