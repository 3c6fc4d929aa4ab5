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

#include "dynsub/random_k.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dynsub {

void RandomK::IndexedSet::Add(ElementId e) {
  position.emplace(e, items.size());
  items.push_back(e);
}

void RandomK::IndexedSet::Remove(ElementId e) {
  auto it = position.find(e);
  const std::size_t at = it->second;
  position.erase(it);
  if (at + 1 != items.size()) {
    items[at] = items.back();
    position[items[at]] = at;
  }
  items.pop_back();
}

RandomK::RandomK(CountingOracle& oracle, std::size_t k, std::uint64_t seed)
    : oracle_(&oracle), k_(k), rng_(seed) {
  if (k_ == 0) throw std::invalid_argument("k must be at least 1");
}

void RandomK::Insert(ElementId e) {
  if (!oracle_->function().Contains(e)) {
    throw std::domain_error("element " + std::to_string(e) + " is not in the ground set");
  }
  if (live_.Contains(e)) {
    throw std::domain_error("element " + std::to_string(e) + " is already live");
  }
  live_.Add(e);
  if (members_.items.size() < k_) {
    members_.Add(e);
    stale_ = true;
    return;
  }
  std::uniform_int_distribution<std::size_t> draw(0, live_.items.size() - 1);
  if (draw(rng_) < k_) {
    std::uniform_int_distribution<std::size_t> victim(0, k_ - 1);
    members_.Remove(members_.items[victim(rng_)]);
    members_.Add(e);
    stale_ = true;
  }
}

void RandomK::Delete(ElementId e) {
  if (!live_.Contains(e)) {
    throw std::domain_error("element " + std::to_string(e) + " is not live");
  }
  live_.Remove(e);
  if (!members_.Contains(e)) return;
  members_.Remove(e);
  stale_ = true;
  if (live_.items.size() <= members_.items.size()) return;
  std::uniform_int_distribution<std::size_t> draw(0, live_.items.size() - 1);
  while (true) {
    const ElementId candidate = live_.items[draw(rng_)];
    if (!members_.Contains(candidate)) {
      members_.Add(candidate);
      return;
    }
  }
}

Solution RandomK::CurrentSolution() {
  if (stale_) {
    cached_value_ = members_.items.empty() ? 0.0 : oracle_->Evaluate(members_.items);
    stale_ = false;
  }
  return {members_.items, cached_value_};
}

bool RandomK::CheckInvariants() const {
  if (members_.items.size() != std::min(k_, live_.items.size())) return false;
  for (ElementId e : members_.items) {
    if (!live_.Contains(e)) return false;
  }
  return true;
}

}  // namespace dynsub
