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

#include "dynsub/graph_gen.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dynsub/types.h"

namespace dynsub {

Graph RandomGraph(std::size_t n, double avg_degree, std::uint64_t seed) {
  if (!(avg_degree >= 0.0)) throw std::invalid_argument("average degree must be >= 0");
  const double max_edges = n < 2 ? 0.0 : 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const auto m = static_cast<std::size_t>(
      std::min(max_edges, std::round(0.5 * static_cast<double>(n) * avg_degree)));
  Rng rng(seed);
  std::uniform_int_distribution<ElementId> node(0, n == 0 ? 0 : static_cast<ElementId>(n - 1));
  std::set<std::pair<ElementId, ElementId>> chosen;
  std::vector<std::pair<ElementId, ElementId>> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    ElementId u = node(rng);
    ElementId v = node(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (chosen.emplace(u, v).second) edges.emplace_back(u, v);
  }
  return Graph::FromEdges(n, edges);
}

Graph PreferentialAttachment(std::size_t n, std::size_t edges_per_node, std::uint64_t seed) {
  if (edges_per_node == 0) throw std::invalid_argument("edges per node must be >= 1");
  Rng rng(seed);
  std::vector<std::pair<ElementId, ElementId>> edges;
  // Each endpoint appears once per incident edge.
  std::vector<ElementId> endpoints;
  const std::size_t core = std::min(n, edges_per_node + 1);
  for (ElementId u = 0; u < core; ++u) {
    for (ElementId v = u + 1; v < core; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<ElementId> targets;
  for (std::size_t w = core; w < n; ++w) {
    targets.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (targets.size() < edges_per_node) {
      const ElementId t = endpoints[pick(rng)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (ElementId t : targets) {
      edges.emplace_back(t, static_cast<ElementId>(w));
      endpoints.push_back(t);
      endpoints.push_back(static_cast<ElementId>(w));
    }
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace dynsub
