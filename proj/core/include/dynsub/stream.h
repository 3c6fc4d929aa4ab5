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

// Insertion/deletion streams and their generators.

#ifndef DYNSUB_STREAM_H_
#define DYNSUB_STREAM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynsub/graph.h"
#include "dynsub/types.h"

namespace dynsub {

enum class EventKind : std::uint8_t { kInsert, kDelete };

struct StreamEvent {
  EventKind kind = EventKind::kInsert;
  ElementId element = 0;

  bool operator==(const StreamEvent&) const = default;
};

using Stream = std::vector<StreamEvent>;

inline StreamEvent Ins(ElementId e) { return {EventKind::kInsert, e}; }
inline StreamEvent Del(ElementId e) { return {EventKind::kDelete, e}; }

// 0..n-1 in a seeded uniformly random order.
ElementSet ShuffledOrder(std::size_t n, std::uint64_t seed);

// Inserts `order` front to back, keeping at most `window` elements live:
// once the window is full each insertion is preceded by deleting the oldest
// live element. The remaining elements are deleted oldest first at the end.
// Throws std::invalid_argument when window == 0.
Stream GenWindowStream(std::span<const ElementId> order, std::size_t window);

// Nodes by non-increasing degree, ties by smaller id.
ElementSet DegreeOrder(const Graph& graph);

// Inserts every node in `insert_order`, then deletes all nodes in
// DegreeOrder.
Stream GenDegreeDeleteStream(const Graph& graph, std::span<const ElementId> insert_order);
// Same with a seeded shuffled insertion order.
Stream GenDegreeDeleteStream(const Graph& graph, std::uint64_t seed);

// Chooses deletions adaptively: the highest-degree live member of the
// current solution (ties by id), or the highest-degree live node when the
// solution has no live member. Meant for a deletion-only phase: the
// fallback cursor never moves back.
class SolutionDeletePicker {
 public:
  explicit SolutionDeletePicker(const Graph& graph);

  // Nothing when no node is live. `live` is indexed by node.
  std::optional<ElementId> Next(std::span<const ElementId> solution,
                                std::span<const std::uint8_t> live);

 private:
  const Graph* graph_;
  ElementSet order_;
  std::size_t cursor_ = 0;
};

// True iff every delete targets a live element and every insert a non-live
// element of 0..ground_size-1.
bool IsLegal(std::span<const StreamEvent> stream, std::size_t ground_size);

}  // namespace dynsub

#endif  // DYNSUB_STREAM_H_
