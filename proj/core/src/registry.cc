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

#include "dynsub/registry.h"

#include <iterator>
#include <stdexcept>
#include <string>

namespace dynsub {

std::uint64_t LiveRegistry::Insert(ElementId e) {
  auto [it, inserted] = seq_of_.emplace(e, next_seq_);
  if (!inserted) throw std::domain_error("element " + std::to_string(e) + " is already live");
  order_.emplace(next_seq_, e);
  return next_seq_++;
}

std::uint64_t LiveRegistry::Erase(ElementId e) {
  auto it = seq_of_.find(e);
  if (it == seq_of_.end()) throw std::domain_error("element " + std::to_string(e) + " is not live");
  const std::uint64_t seq = it->second;
  order_.erase(seq);
  seq_of_.erase(it);
  return seq;
}

std::optional<std::uint64_t> LiveRegistry::SeqOf(ElementId e) const {
  auto it = seq_of_.find(e);
  if (it == seq_of_.end()) return std::nullopt;
  return it->second;
}

ElementSet LiveRegistry::Elements() const { return ElementsAfter(0); }

ElementSet LiveRegistry::ElementsAfter(std::uint64_t seq) const {
  ElementSet out;
  for (auto it = order_.upper_bound(seq); it != order_.end(); ++it) out.push_back(it->second);
  return out;
}

std::size_t LiveRegistry::CountAfter(std::uint64_t seq) const {
  return static_cast<std::size_t>(std::distance(order_.upper_bound(seq), order_.end()));
}

}  // namespace dynsub
