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

#ifndef DYNSUB_RANDOM_K_H_
#define DYNSUB_RANDOM_K_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "dynsub/algorithm.h"
#include "dynsub/oracle.h"
#include "dynsub/types.h"

namespace dynsub {

// Keeps a uniformly random k-subset of the live elements (all of them when
// fewer than k are live). Spends oracle calls only to report the value.
class RandomK final : public DynamicAlgorithm {
 public:
  RandomK(CountingOracle& oracle, std::size_t k, std::uint64_t seed);

  void Insert(ElementId e) override;
  void Delete(ElementId e) override;
  // One call when the subset changed since the last report.
  Solution CurrentSolution() override;
  bool CheckInvariants() const override;
  std::string name() const override { return "random"; }

  const ElementSet& members() const { return members_.items; }

 private:
  // Vector plus position index: O(1) insert, erase and uniform draw.
  struct IndexedSet {
    ElementSet items;
    std::unordered_map<ElementId, std::size_t> position;

    bool Contains(ElementId e) const { return position.count(e) > 0; }
    void Add(ElementId e);
    void Remove(ElementId e);
  };

  CountingOracle* oracle_;
  std::size_t k_;
  Rng rng_;
  IndexedSet live_;
  IndexedSet members_;
  double cached_value_ = 0.0;
  bool stale_ = false;
};

}  // namespace dynsub

#endif  // DYNSUB_RANDOM_K_H_
