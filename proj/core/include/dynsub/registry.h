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

#ifndef DYNSUB_REGISTRY_H_
#define DYNSUB_REGISTRY_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>

#include "dynsub/types.h"

namespace dynsub {

// The live element set, kept in insertion order. Every insertion gets a
// fresh, strictly increasing sequence number, so "inserted after X" queries
// and deterministic replays are cheap.
class LiveRegistry {
 public:
  using Order = std::map<std::uint64_t, ElementId>;

  // Throws std::domain_error if `e` is already live.
  std::uint64_t Insert(ElementId e);
  // Throws std::domain_error if `e` is not live. Returns its sequence number.
  std::uint64_t Erase(ElementId e);

  bool Contains(ElementId e) const { return seq_of_.count(e) > 0; }
  std::optional<std::uint64_t> SeqOf(ElementId e) const;
  std::size_t size() const { return seq_of_.size(); }
  bool empty() const { return seq_of_.empty(); }
  // Sequence number the next insertion will receive.
  std::uint64_t next_seq() const { return next_seq_; }

  // Live elements in insertion order.
  ElementSet Elements() const;
  // Live elements inserted with sequence number > seq, in insertion order.
  ElementSet ElementsAfter(std::uint64_t seq) const;
  std::size_t CountAfter(std::uint64_t seq) const;

  const Order& order() const { return order_; }

 private:
  Order order_;
  std::unordered_map<ElementId, std::uint64_t> seq_of_;
  std::uint64_t next_seq_ = 1;
};

}  // namespace dynsub

#endif  // DYNSUB_REGISTRY_H_
