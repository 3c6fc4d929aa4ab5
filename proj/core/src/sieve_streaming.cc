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

#include "dynsub/sieve_streaming.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dynsub {

SieveStreaming::SieveStreaming(CountingOracle& oracle, std::size_t k, double eps)
    : oracle_(&oracle), k_(k), eps_(eps) {
  if (k_ == 0) throw std::invalid_argument("k must be at least 1");
  if (!(eps_ > 0.0)) throw std::invalid_argument("sieve eps must be positive");
}

double SieveStreaming::Power(int j) const { return std::pow(1.0 + eps_, j); }

std::optional<std::pair<int, int>> SieveStreaming::Range() const {
  if (values_.empty() || !(*values_.rbegin() > 0.0)) return std::nullopt;
  const double m = *values_.rbegin();
  const double top = 2.0 * static_cast<double>(k_) * m;
  const double base = std::log(1.0 + eps_);
  int lo = static_cast<int>(std::ceil(std::log(m) / base));
  while (Power(lo - 1) >= m) --lo;
  while (Power(lo) < m) ++lo;
  int hi = static_cast<int>(std::floor(std::log(top) / base));
  while (Power(hi + 1) <= top) ++hi;
  while (Power(hi) > top) --hi;
  return std::make_pair(lo, hi);
}

void SieveStreaming::Offer(Guess& guess, ElementId e) {
  const std::size_t size = guess.ctx.size();
  if (size >= k_) return;
  const double gain = guess.ctx.Gain(e);
  const double bar = (guess.v / 2.0 - guess.ctx.value()) / static_cast<double>(k_ - size);
  if (gain > 0.0 && gain >= bar) guess.ctx.Add(e);
}

void SieveStreaming::Replay(Guess& guess) {
  guess.ctx = oracle_->NewContext();
  for (const auto& [seq, e] : registry_.order()) {
    if (guess.ctx.size() >= k_) break;
    Offer(guess, e);
  }
}

void SieveStreaming::SyncRange(bool replay) {
  const auto range = Range();
  for (auto it = guesses_.begin(); it != guesses_.end();) {
    if (!range || it->first < range->first || it->first > range->second) {
      it = guesses_.erase(it);
    } else {
      ++it;
    }
  }
  if (!range) return;
  for (int j = range->first; j <= range->second; ++j) {
    if (guesses_.count(j)) continue;
    auto it = guesses_.emplace(j, Guess{Power(j), oracle_->NewContext()}).first;
    if (replay) {
      ++restarts_;
      Replay(it->second);
    }
  }
}

void SieveStreaming::Insert(ElementId e) {
  if (registry_.Contains(e)) {
    throw std::domain_error("element " + std::to_string(e) + " is already live");
  }
  const ElementId single[] = {e};
  const double value = oracle_->Evaluate(single);
  registry_.Insert(e);
  value_[e] = value;
  values_.insert(value);
  SyncRange(false);
  for (auto& [j, guess] : guesses_) Offer(guess, e);
}

void SieveStreaming::Delete(ElementId e) {
  registry_.Erase(e);
  auto node = value_.extract(e);
  values_.erase(values_.find(node.mapped()));
  SyncRange(true);
  for (auto& [j, guess] : guesses_) {
    auto members = guess.ctx.members();
    if (std::find(members.begin(), members.end(), e) != members.end()) {
      ++restarts_;
      Replay(guess);
    }
  }
}

Solution SieveStreaming::CurrentSolution() {
  Solution best;
  for (const auto& [j, guess] : guesses_) {
    if (guess.ctx.value() > best.value) {
      best.value = guess.ctx.value();
      auto members = guess.ctx.members();
      best.elements.assign(members.begin(), members.end());
    }
  }
  return best;
}

bool SieveStreaming::CheckInvariants() const {
  for (const auto& [j, guess] : guesses_) {
    if (guess.ctx.size() > k_) return false;
    for (ElementId e : guess.ctx.members()) {
      if (!registry_.Contains(e)) return false;
    }
  }
  return true;
}

std::vector<int> SieveStreaming::exponents() const {
  std::vector<int> out;
  for (const auto& [j, guess] : guesses_) out.push_back(j);
  return out;
}

ElementSet SieveStreaming::members(int j) const {
  auto it = guesses_.find(j);
  if (it == guesses_.end()) return {};
  auto members = it->second.ctx.members();
  return ElementSet(members.begin(), members.end());
}

}  // namespace dynsub
