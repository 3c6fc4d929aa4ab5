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

// Exact and greedy yardsticks for small instances.

#ifndef DYNSUB_REFERENCE_H_
#define DYNSUB_REFERENCE_H_

#include <cstddef>
#include <span>
#include <string>

#include "dynsub/algorithm.h"
#include "dynsub/oracle.h"
#include "dynsub/registry.h"
#include "dynsub/types.h"

namespace dynsub {

struct ExactResult {
  double value = 0.0;
  ElementSet witness;
};

// Largest number of subsets BruteForceOpt will enumerate.
inline constexpr double kMaxBruteForceSubsets = 1e7;

// max f(S) over S subset of `live` with |S| = min(k, |live|), enumerated in
// lexicographic order of positions; the first maximizer wins.
// Throws std::length_error when C(|live|, k) exceeds kMaxBruteForceSubsets.
ExactResult BruteForceOpt(CountingOracle& oracle, std::span<const ElementId> live,
                          std::size_t k);

// k rounds of argmax marginal gain, ties to the smallest id. Stops early
// when no candidate has positive gain.
Solution Greedy(CountingOracle& oracle, std::span<const ElementId> live, std::size_t k);

// Reruns Greedy on the live set after every update.
class GreedyRecompute final : public DynamicAlgorithm {
 public:
  GreedyRecompute(CountingOracle& oracle, std::size_t k);

  void Insert(ElementId e) override;
  void Delete(ElementId e) override;
  Solution CurrentSolution() override { return solution_; }
  std::string name() const override { return "greedy"; }

 private:
  CountingOracle* oracle_;
  std::size_t k_;
  LiveRegistry registry_;
  Solution solution_;
};

}  // namespace dynsub

#endif  // DYNSUB_REFERENCE_H_
