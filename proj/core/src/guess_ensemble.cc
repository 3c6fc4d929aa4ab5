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

#include "dynsub/guess_ensemble.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dynsub {

std::optional<std::pair<int, int>> GuessWindow(double value, std::size_t k, double eps_p) {
  if (!(value > 0.0)) return std::nullopt;
  const double base = 1.0 + eps_p;
  const double top = static_cast<double>(k) / eps_p * value;
  auto power = [base](int j) { return std::pow(base, j); };
  int lo = static_cast<int>(std::ceil(std::log(value) / std::log(base)));
  while (power(lo - 1) >= value) --lo;
  while (power(lo) < value) ++lo;
  int hi = static_cast<int>(std::floor(std::log(top) / std::log(base)));
  while (power(hi + 1) <= top) ++hi;
  while (power(hi) > top) --hi;
  if (hi < lo) return std::nullopt;
  return std::make_pair(lo, hi);
}

GuessEnsemble::GuessEnsemble(CountingOracle& oracle, std::size_t k, double eps_p,
                             CopyFactory factory, std::uint64_t seed, std::string name,
                             std::size_t initial_capacity, bool singleton_floor)
    : oracle_(&oracle),
      k_(k),
      eps_p_(eps_p),
      factory_(std::move(factory)),
      rng_(seed),
      name_(std::move(name)),
      capacity_(initial_capacity),
      singleton_floor_(singleton_floor) {
  if (k_ == 0) throw std::invalid_argument("k must be at least 1");
  if (!(eps_p_ > 0.0 && eps_p_ < 1.0)) throw std::invalid_argument("eps_p must lie in (0, 1)");
  if (capacity_ < 2) throw std::invalid_argument("initial capacity must be at least 2");
}

std::unique_ptr<GuessEnsemble> GuessEnsemble::Full(CountingOracle& oracle,
                                                   const CoreParams& params,
                                                   std::uint64_t seed) {
  params.Validate();
  CountingOracle* shared = &oracle;
  CopyFactory factory = [shared, params](double gopt, std::size_t n_cap, std::uint64_t s) {
    CoreParams p = params;
    p.gopt = gopt;
    p.n_cap = n_cap;
    return std::unique_ptr<DynamicAlgorithm>(new DynamicStructure(*shared, p, s));
  };
  return std::make_unique<GuessEnsemble>(oracle, params.k, params.eps_p, std::move(factory),
                                         seed, "full");
}

std::unique_ptr<GuessEnsemble> GuessEnsemble::Simple(CountingOracle& oracle,
                                                     const SimpleParams& params,
                                                     std::uint64_t seed) {
  params.Validate();
  CountingOracle* shared = &oracle;
  CopyFactory factory = [shared, params](double gopt, std::size_t n_cap, std::uint64_t s) {
    SimpleParams p = params;
    p.gopt = gopt;
    p.n_cap = n_cap;
    return std::unique_ptr<DynamicAlgorithm>(new SimpleStructure(*shared, p, s));
  };
  return std::make_unique<GuessEnsemble>(oracle, params.k, params.eps_p, std::move(factory),
                                         seed, "simple", 2, true);
}

double GuessEnsemble::Guess(int j) const { return std::pow(1.0 + eps_p_, j); }

double GuessEnsemble::MaxValue() const { return values_.empty() ? 0.0 : *values_.rbegin(); }

bool GuessEnsemble::AboveFloor(int j) const {
  return !singleton_floor_ || Guess(j) >= MaxValue();
}

void GuessEnsemble::Insert(ElementId e) {
  if (registry_.Contains(e)) {
    throw std::domain_error("element " + std::to_string(e) + " is already live");
  }
  const ElementId single[] = {e};
  const double value = oracle_->Evaluate(single);
  const double old_max = MaxValue();
  registry_.Insert(e);
  value_[e] = value;
  values_.insert(value);
  if (registry_.size() >= capacity_) {
    while (registry_.size() >= capacity_) capacity_ *= 2;
    Restart();
    return;
  }
  if (singleton_floor_ && value > old_max) RetireBelowFloor();
  Route(e, value);
}

void GuessEnsemble::Route(ElementId e, double value) {
  const auto window = GuessWindow(value, k_, eps_p_);
  if (!window) return;
  for (int j = window->first; j <= window->second; ++j) {
    if (!AboveFloor(j)) continue;
    auto it = copies_.find(j);
    if (it == copies_.end()) {
      it = copies_.emplace(j, Copy{factory_(Guess(j), capacity_, rng_()), 0}).first;
    }
    it->second.algo->Insert(e);
    ++it->second.members;
  }
}

void GuessEnsemble::Restart() {
  ++restarts_;
  copies_.clear();
  for (const auto& [seq, e] : registry_.order()) Route(e, value_.at(e));
}

void GuessEnsemble::RetireBelowFloor() {
  for (auto it = copies_.begin(); it != copies_.end() && !AboveFloor(it->first);) {
    it = copies_.erase(it);
  }
}

void GuessEnsemble::RestoreDown(double old_max) {
  std::map<int, ElementSet> fresh;
  for (const auto& [seq, e] : registry_.order()) {
    const auto window = GuessWindow(value_.at(e), k_, eps_p_);
    if (!window) continue;
    for (int j = window->first; j <= window->second; ++j) {
      if (AboveFloor(j) && Guess(j) < old_max) fresh[j].push_back(e);
    }
  }
  for (auto& [j, members] : fresh) {
    Copy copy{factory_(Guess(j), capacity_, rng_()), members.size()};
    copy.algo->InsertBatch(members);
    copies_.emplace(j, std::move(copy));
  }
}

void GuessEnsemble::Delete(ElementId e) {
  registry_.Erase(e);
  const double old_max = MaxValue();
  auto node = value_.extract(e);
  values_.erase(values_.find(node.mapped()));
  if (const auto window = GuessWindow(node.mapped(), k_, eps_p_)) {
    for (int j = window->first; j <= window->second; ++j) {
      auto it = copies_.find(j);
      if (it == copies_.end()) continue;
      it->second.algo->Delete(e);
      if (--it->second.members == 0) copies_.erase(it);
    }
  }
  if (singleton_floor_ && MaxValue() < old_max) RestoreDown(old_max);
}

Solution GuessEnsemble::CurrentSolution() {
  Solution best;
  bool have = false;
  for (auto& [j, copy] : copies_) {
    Solution s = copy.algo->CurrentSolution();
    if (!have || s.value > best.value) {
      best = std::move(s);
      have = true;
    }
  }
  return best;
}

bool GuessEnsemble::CheckInvariants() const {
  if (registry_.size() >= capacity_) return false;
  std::map<int, std::size_t> expected;
  for (const auto& [e, value] : value_) {
    if (!registry_.Contains(e)) return false;
    if (auto window = GuessWindow(value, k_, eps_p_)) {
      for (int j = window->first; j <= window->second; ++j) {
        if (AboveFloor(j)) ++expected[j];
      }
    }
  }
  if (value_.size() != registry_.size() || expected.size() != copies_.size()) return false;
  for (const auto& [j, copy] : copies_) {
    auto it = expected.find(j);
    if (it == expected.end() || it->second != copy.members) return false;
    if (!copy.algo->CheckInvariants()) return false;
  }
  return true;
}

std::vector<int> GuessEnsemble::exponents() const {
  std::vector<int> out;
  for (const auto& [j, copy] : copies_) out.push_back(j);
  return out;
}

DynamicAlgorithm* GuessEnsemble::copy(int j) const {
  auto it = copies_.find(j);
  return it == copies_.end() ? nullptr : it->second.algo.get();
}

std::size_t GuessEnsemble::copy_members(int j) const {
  auto it = copies_.find(j);
  return it == copies_.end() ? 0 : it->second.members;
}

}  // namespace dynsub
