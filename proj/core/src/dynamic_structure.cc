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

#include "dynsub/dynamic_structure.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dynsub {

void CoreParams::Validate() const {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (!(gopt > 0.0) || !std::isfinite(gopt)) throw std::invalid_argument("gopt must be positive");
  if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in [0, 1)");
  if (!(eps1 > 0.0)) throw std::invalid_argument("eps1 must be positive");
  if (!(eps_p > 0.0 && eps_p < 1.0)) throw std::invalid_argument("eps_p must lie in (0, 1)");
  if (n_cap == 0) throw std::invalid_argument("n_cap must be at least 1");
  if (n_cap > (std::size_t{1} << 40)) throw std::invalid_argument("n_cap is too large");
}

std::size_t LevelCount(std::size_t n_cap) {
  std::size_t t = 0;
  while ((std::size_t{1} << t) < n_cap) ++t;
  return t;
}

std::size_t ThresholdCount(std::size_t k, double eps1) {
  std::size_t r = 1;
  double power = 1.0 + eps1;
  while (power < 2.0 * static_cast<double>(k)) {
    power *= 1.0 + eps1;
    ++r;
  }
  return r;
}

DynamicStructure::DynamicStructure(CountingOracle& oracle, const CoreParams& params,
                                   std::uint64_t seed)
    : oracle_(&oracle), params_(params), rng_(seed) {
  params_.Validate();
  levels_ = LevelCount(params_.n_cap);
  thresholds_ = ThresholdCount(params_.k, params_.eps1);
  taus_.resize(thresholds_ + 1);
  for (std::size_t i = 0; i <= thresholds_; ++i) {
    taus_[i] = params_.gopt * std::pow(1.0 + params_.eps1, -static_cast<double>(i));
  }
  const std::size_t ground = oracle.function().ground_size();
  live_seq_.assign(ground, 0);
  stamp_.assign(ground, 0);
  buffer_reset_seq_.assign(levels_ + 1, 0);
  buffer_count_.assign(levels_ + 1, 0);
  buckets_.resize((levels_ + 1) * thresholds_);
  slots_.resize((levels_ + 1) * thresholds_);
  rebuilds_.assign(levels_ + 1, 0);
}

bool DynamicStructure::IsLive(const Entry& entry) const {
  return live_seq_[entry.id] == entry.seq;
}

ElementSet DynamicStructure::SUp(std::size_t i, std::size_t l) const {
  ElementSet out;
  for (std::size_t level = 0; level <= l; ++level) {
    const std::size_t last = level < l ? thresholds_ : i;
    for (std::size_t j = 1; j <= last; ++j) {
      const auto& members = Slot(j, level).members;
      out.insert(out.end(), members.begin(), members.end());
    }
  }
  return out;
}

ElementSet DynamicStructure::bucket(std::size_t i, std::size_t l) const {
  ElementSet out;
  for (const Entry& entry : Bucket(i, l)) {
    if (IsLive(entry)) out.push_back(entry.id);
  }
  return out;
}

void DynamicStructure::Insert(ElementId e) {
  if (!oracle_->function().Contains(e)) {
    throw std::domain_error("element " + std::to_string(e) + " is not in the ground set");
  }
  if (registry_.size() >= params_.n_cap && !registry_.Contains(e)) {
    throw std::length_error("structure is at capacity " + std::to_string(params_.n_cap));
  }
  const std::uint64_t seq = registry_.Insert(e);
  live_seq_[e] = seq;
  for (auto& count : buffer_count_) ++count;

  std::size_t start = levels_;
  for (std::size_t l = 0; l <= levels_; ++l) {
    if (buffer_count_[l] >= Cap(l)) {
      start = l;
      break;
    }
  }
  ClearSlotsFrom(start);
  for (std::size_t l = start; l <= levels_; ++l) ResetBuffer(l);
  LevelConstruct(start);
}

void DynamicStructure::Delete(ElementId e) {
  const std::uint64_t seq = registry_.Erase(e);
  live_seq_[e] = 0;
  for (std::size_t l = 0; l <= levels_; ++l) {
    if (seq > buffer_reset_seq_[l]) --buffer_count_[l];
  }
  auto it = slot_of_.find(e);
  if (it == slot_of_.end()) return;
  const auto [i, l] = it->second;
  slot_of_.erase(it);
  SolutionSlot& slot = Slot(i, l);
  slot.members.erase(std::find(slot.members.begin(), slot.members.end(), e));
  --solution_size_;
  ++slot.deletions;
  value_stale_ = true;
  if (static_cast<double>(slot.deletions) >
      params_.eps * static_cast<double>(slot.size_at_construction) + 1e-9) {
    ClearSlotsFrom(l);
    LevelConstruct(l);
  }
}

Solution DynamicStructure::CurrentSolution() {
  Solution out{SUp(thresholds_, levels_), cached_value_};
  if (value_stale_) {
    cached_value_ = out.elements.empty() ? 0.0 : oracle_->Evaluate(out.elements);
    value_stale_ = false;
    out.value = cached_value_;
  }
  return out;
}

void DynamicStructure::ClearSlotsFrom(std::size_t l) {
  for (std::size_t level = l; level <= levels_; ++level) {
    for (std::size_t i = 1; i <= thresholds_; ++i) {
      SolutionSlot& slot = Slot(i, level);
      for (ElementId e : slot.members) slot_of_.erase(e);
      solution_size_ -= slot.members.size();
      slot = SolutionSlot{};
    }
  }
}

void DynamicStructure::ResetBuffer(std::size_t l) {
  buffer_reset_seq_[l] = registry_.next_seq() - 1;
  buffer_count_[l] = 0;
}

std::vector<DynamicStructure::Entry> DynamicStructure::Seed(std::size_t l) {
  std::vector<Entry> seed;
  if (l == 0) {
    for (const auto& [seq, id] : registry_.order()) seed.push_back({id, seq});
    return seed;
  }
  ++epoch_;
  auto take = [&](const Entry& entry) {
    if (!IsLive(entry) || stamp_[entry.id] == epoch_) return;
    stamp_[entry.id] = epoch_;
    seed.push_back(entry);
  };
  const auto& order = registry_.order();
  for (auto it = order.upper_bound(buffer_reset_seq_[l - 1]); it != order.end(); ++it) {
    take({it->second, it->first});
  }
  for (std::size_t i = 1; i <= thresholds_; ++i) {
    for (const Entry& entry : Bucket(i, l - 1)) take(entry);
  }
  return seed;
}

void DynamicStructure::ClearBucketsFrom(std::size_t l) {
  for (std::size_t level = l; level <= levels_; ++level) {
    ResetBuffer(level);
    for (std::size_t i = 1; i <= thresholds_; ++i) Bucket(i, level).clear();
  }
}

void DynamicStructure::LevelConstruct(std::size_t l0) {
  ++rebuilds_[l0];
  if (solution_size_ >= params_.k) {
    ClearBucketsFrom(l0);
    return;
  }
  Context ctx = oracle_->NewContext(l0 == 0 ? ElementSet{} : SUp(thresholds_, l0 - 1));
  for (std::size_t l = l0; l <= levels_; ++l) {
    std::vector<Entry> seed = Seed(l);
    ResetBuffer(l);
    for (std::size_t i = 1; i <= thresholds_ && solution_size_ < params_.k; ++i) {
      Bucket(i, l) = seed;
      BucketConstruct(i, l, ctx);
    }
    if (solution_size_ >= params_.k) {
      ClearBucketsFrom(l);
      break;
    }
  }
  cached_value_ = ctx.value();
  value_stale_ = false;
}

void DynamicStructure::BucketConstruct(std::size_t i, std::size_t l, Context& ctx) {
  std::vector<Entry>& bucket = Bucket(i, l);
  SolutionSlot& slot = Slot(i, l);
  const double lo = taus_[i];
  const double hi = taus_[i - 1];
  ElementSet candidates;
  while (true) {
    std::erase_if(bucket, [&](const Entry& entry) {
      if (!IsLive(entry)) return true;
      const double gain = ctx.Gain(entry.id);
      return gain < lo || gain > hi;
    });
    if (bucket.size() < Cap(l) || solution_size_ >= params_.k) break;
    candidates.clear();
    for (const Entry& entry : bucket) candidates.push_back(entry.id);
    ElementSet batch = Peel(candidates, lo, params_.k - solution_size_, params_.eps_p, ctx,
                            rng_, params_.peeling);
    for (ElementId e : batch) {
      slot.members.push_back(e);
      slot_of_[e] = {i, l};
    }
    solution_size_ += batch.size();
    ctx.Extend(batch);
  }
  slot.size_at_construction = slot.members.size();
  slot.deletions = 0;
}

bool DynamicStructure::CheckInvariants() const {
  std::size_t total = 0;
  std::unordered_map<ElementId, std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t l = 0; l <= levels_; ++l) {
    const std::size_t cap = Cap(l);
    if (buffer_count_[l] != registry_.CountAfter(buffer_reset_seq_[l])) return false;
    if (buffer_count_[l] > cap) return false;
    std::size_t bucket_total = 0;
    for (std::size_t i = 1; i <= thresholds_; ++i) {
      for (const Entry& entry : Bucket(i, l)) bucket_total += IsLive(entry) ? 1 : 0;
      const SolutionSlot& slot = Slot(i, l);
      if (slot.members.size() > slot.size_at_construction) return false;
      for (ElementId e : slot.members) {
        if (!registry_.Contains(e)) return false;
        if (!seen.emplace(e, std::make_pair(i, l)).second) return false;
        auto it = slot_of_.find(e);
        if (it == slot_of_.end() || it->second != std::make_pair(i, l)) return false;
      }
      total += slot.members.size();
    }
    if (bucket_total > (thresholds_ + 1) * cap) return false;
  }
  return total == solution_size_ && slot_of_.size() == total && total <= params_.k;
}

}  // namespace dynsub
