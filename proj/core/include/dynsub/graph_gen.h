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

// Seeded synthetic graphs.

#ifndef DYNSUB_GRAPH_GEN_H_
#define DYNSUB_GRAPH_GEN_H_

#include <cstddef>
#include <cstdint>

#include "dynsub/graph.h"

namespace dynsub {

// Uniform random graph with round(n * avg_degree / 2) distinct edges.
Graph RandomGraph(std::size_t n, double avg_degree, std::uint64_t seed);

// Preferential attachment: start from a clique on edges_per_node + 1 nodes,
// then every new node links to edges_per_node distinct earlier nodes picked
// proportionally to degree.
Graph PreferentialAttachment(std::size_t n, std::size_t edges_per_node, std::uint64_t seed);

}  // namespace dynsub

#endif  // DYNSUB_GRAPH_GEN_H_
