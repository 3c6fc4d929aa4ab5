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

// Removes the need to know the optimum and the stream length in advance:
// one structure per geometric guess (1 + eps_p)^j, created on demand, with
// every element routed to the guesses its singleton value can support. When
// the live count reaches the capacity, the capacity doubles and everything
// is rebuilt from the live set.

#ifndef DYNSUB_GUESS_ENSEMBLE_H_
#define DYNSUB_GUESS_ENSEMBLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynsub/algorithm.h"
#include "dynsub/dynamic_structure.h"
#include "dynsub/oracle.h"
#include "dynsub/registry.h"
#include "dynsub/simple_structure.h"
#include "dynsub/types.h"

namespace dynsub {

// Builds the structure for one guess.
using CopyFactory = std::function<std::unique_ptr<DynamicAlgorithm>(
    double gopt, std::size_t n_cap, std::uint64_t seed)>;

// Exponents j with v <= (1 + eps_p)^j <= (k / eps_p) v, or nothing for v <= 0.
std::optional<std::pair<int, int>> GuessWindow(double value, std::size_t k, double eps_p);

class GuessEnsemble final : public DynamicAlgorithm {
 public:
  GuessEnsemble(CountingOracle& oracle, std::size_t k, double eps_p, CopyFactory factory,
                std::uint64_t seed, std::string name = "ensemble",
                std::size_t initial_capacity = 2, bool singleton_floor = false);

  // Ensemble of DynamicStructure copies. gopt and n_cap in `params` are
  // ignored.
  static std::unique_ptr<GuessEnsemble> Full(CountingOracle& oracle, const CoreParams& params,
                                             std::uint64_t seed);
  // Ensemble of SimpleStructure copies, same conventions, with the
  // singleton floor on.
  static std::unique_ptr<GuessEnsemble> Simple(CountingOracle& oracle,
                                               const SimpleParams& params,
                                               std::uint64_t seed);

  void Insert(ElementId e) override;
  void Delete(ElementId e) override;
  // Best copy by value; ties go to the smaller exponent.
  Solution CurrentSolution() override;
  bool CheckInvariants() const override;
  std::string name() const override { return name_; }

  double Guess(int j) const;
  // With the singleton floor on, guesses below the largest live singleton
  // value get no copy: the optimum is at least that value. Copies that come
  // back into range after a deletion are rebuilt from the live set.
  bool singleton_floor() const { return singleton_floor_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t live_count() const { return registry_.size(); }
  std::vector<int> exponents() const;
  // Nullptr when copy j does not exist.
  DynamicAlgorithm* copy(int j) const;
  std::size_t copy_members(int j) const;
  std::uint64_t restarts() const { return restarts_; }

 private:
  struct Copy {
    std::unique_ptr<DynamicAlgorithm> algo;
    std::size_t members = 0;
  };

  bool AboveFloor(int j) const;
  double MaxValue() const;
  void Route(ElementId e, double value);
  void Restart();
  // Drops copies below the floor after it rose.
  void RetireBelowFloor();
  // Builds the copies between the floor and `old_max` after the floor fell.
  void RestoreDown(double old_max);

  CountingOracle* oracle_;
  std::size_t k_;
  double eps_p_;
  CopyFactory factory_;
  Rng rng_;
  std::string name_;
  std::size_t capacity_;
  LiveRegistry registry_;
  bool singleton_floor_;
  std::unordered_map<ElementId, double> value_;
  std::multiset<double> values_;
  std::map<int, Copy> copies_;
  std::uint64_t restarts_ = 0;
};

}  // namespace dynsub

#endif  // DYNSUB_GUESS_ENSEMBLE_H_
