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

// Sieve-Streaming over geometric guesses of the optimum, made fully dynamic
// by restarting every guess whose solution loses an element.

#ifndef DYNSUB_SIEVE_STREAMING_H_
#define DYNSUB_SIEVE_STREAMING_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynsub/algorithm.h"
#include "dynsub/oracle.h"
#include "dynsub/registry.h"
#include "dynsub/types.h"

namespace dynsub {

class SieveStreaming final : public DynamicAlgorithm {
 public:
  SieveStreaming(CountingOracle& oracle, std::size_t k, double eps = 0.1);

  void Insert(ElementId e) override;
  void Delete(ElementId e) override;
  Solution CurrentSolution() override;
  bool CheckInvariants() const override;
  std::string name() const override { return "sieve"; }

  double eps() const { return eps_; }
  // Guess exponents j with m <= (1 + eps)^j <= 2km, m the largest live
  // singleton value; nothing when m = 0.
  std::optional<std::pair<int, int>> Range() const;
  std::vector<int> exponents() const;
  // Members of guess j; empty when absent.
  ElementSet members(int j) const;
  std::uint64_t restarts() const { return restarts_; }

 private:
  struct Guess {
    double v;
    Context ctx;
  };

  double Power(int j) const;
  void Offer(Guess& guess, ElementId e);
  void Replay(Guess& guess);
  // Brings the instantiated guesses in line with Range(); new guesses are
  // replayed from the live set when `replay` is set.
  void SyncRange(bool replay);

  CountingOracle* oracle_;
  std::size_t k_;
  double eps_;
  LiveRegistry registry_;
  std::unordered_map<ElementId, double> value_;
  std::multiset<double> values_;
  std::map<int, Guess> guesses_;
  std::uint64_t restarts_ = 0;
};

}  // namespace dynsub

#endif  // DYNSUB_SIEVE_STREAMING_H_
