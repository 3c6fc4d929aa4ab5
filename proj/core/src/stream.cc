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

#include "dynsub/stream.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace dynsub {

ElementSet ShuffledOrder(std::size_t n, std::uint64_t seed) {
  ElementSet order(n);
  std::iota(order.begin(), order.end(), ElementId{0});
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

Stream GenWindowStream(std::span<const ElementId> order, std::size_t window) {
  if (window == 0) throw std::invalid_argument("window must be at least 1");
  Stream stream;
  stream.reserve(order.size() * 2);
  std::deque<ElementId> live;
  for (ElementId e : order) {
    if (live.size() == window) {
      stream.push_back(Del(live.front()));
      live.pop_front();
    }
    stream.push_back(Ins(e));
    live.push_back(e);
  }
  for (ElementId e : live) stream.push_back(Del(e));
  return stream;
}

ElementSet DegreeOrder(const Graph& graph) {
  ElementSet order(graph.node_count());
  std::iota(order.begin(), order.end(), ElementId{0});
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return graph.degree(a) > graph.degree(b);
  });
  return order;
}

Stream GenDegreeDeleteStream(const Graph& graph, std::span<const ElementId> insert_order) {
  Stream stream;
  stream.reserve(graph.node_count() * 2);
  for (ElementId e : insert_order) stream.push_back(Ins(e));
  for (ElementId e : DegreeOrder(graph)) stream.push_back(Del(e));
  return stream;
}

Stream GenDegreeDeleteStream(const Graph& graph, std::uint64_t seed) {
  const ElementSet order = ShuffledOrder(graph.node_count(), seed);
  return GenDegreeDeleteStream(graph, order);
}

SolutionDeletePicker::SolutionDeletePicker(const Graph& graph)
    : graph_(&graph), order_(DegreeOrder(graph)) {}

std::optional<ElementId> SolutionDeletePicker::Next(std::span<const ElementId> solution,
                                                    std::span<const std::uint8_t> live) {
  std::optional<ElementId> best;
  for (ElementId e : solution) {
    if (!live[e]) continue;
    if (!best || graph_->degree(e) > graph_->degree(*best) ||
        (graph_->degree(e) == graph_->degree(*best) && e < *best)) {
      best = e;
    }
  }
  if (best) return best;
  while (cursor_ < order_.size() && !live[order_[cursor_]]) ++cursor_;
  if (cursor_ == order_.size()) return std::nullopt;
  return order_[cursor_];
}

bool IsLegal(std::span<const StreamEvent> stream, std::size_t ground_size) {
  std::vector<std::uint8_t> live(ground_size, 0);
  for (const StreamEvent& event : stream) {
    if (event.element >= ground_size) return false;
    const bool want_live = event.kind == EventKind::kDelete;
    if (static_cast<bool>(live[event.element]) != want_live) return false;
    live[event.element] = want_live ? 0 : 1;
  }
  return true;
}

}  // namespace dynsub
