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

#include "dynsub/reference.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynsub {

ExactResult BruteForceOpt(CountingOracle& oracle, std::span<const ElementId> live,
                          std::size_t k) {
  const std::size_t n = live.size();
  const std::size_t r = std::min(k, n);
  double subsets = 1.0;
  for (std::size_t i = 0; i < r; ++i) {
    subsets = subsets * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  if (subsets > kMaxBruteForceSubsets) {
    throw std::length_error("brute force would enumerate " + std::to_string(subsets) +
                            " subsets");
  }
  ExactResult best;
  if (r == 0) return best;

  std::vector<std::size_t> pos(r);
  for (std::size_t i = 0; i < r; ++i) pos[i] = i;
  ElementSet current(r);
  bool first = true;
  while (true) {
    for (std::size_t i = 0; i < r; ++i) current[i] = live[pos[i]];
    const double value = oracle.Evaluate(current);
    if (first || value > best.value) {
      best.value = value;
      best.witness = current;
      first = false;
    }
    std::size_t i = r;
    while (i > 0 && pos[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < r; ++j) pos[j] = pos[j - 1] + 1;
  }
  return best;
}

Solution Greedy(CountingOracle& oracle, std::span<const ElementId> live, std::size_t k) {
  ElementSet candidates(live.begin(), live.end());
  std::sort(candidates.begin(), candidates.end());
  Context ctx = oracle.NewContext();
  while (ctx.size() < k && !candidates.empty()) {
    double best_gain = 0.0;
    std::size_t best = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const double gain = ctx.Gain(candidates[i]);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == candidates.size()) break;
    ctx.Add(candidates[best]);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
  }
  auto members = ctx.members();
  return {ElementSet(members.begin(), members.end()), ctx.value()};
}

GreedyRecompute::GreedyRecompute(CountingOracle& oracle, std::size_t k)
    : oracle_(&oracle), k_(k) {
  if (k_ == 0) throw std::invalid_argument("k must be at least 1");
}

void GreedyRecompute::Insert(ElementId e) {
  if (!oracle_->function().Contains(e)) {
    throw std::domain_error("element " + std::to_string(e) + " is not in the ground set");
  }
  registry_.Insert(e);
  solution_ = Greedy(*oracle_, registry_.Elements(), k_);
}

void GreedyRecompute::Delete(ElementId e) {
  registry_.Erase(e);
  solution_ = Greedy(*oracle_, registry_.Elements(), k_);
}

}  // namespace dynsub
