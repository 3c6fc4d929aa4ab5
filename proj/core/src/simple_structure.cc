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

#include "dynsub/simple_structure.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dynsub/dynamic_structure.h"

namespace dynsub {

void SimpleParams::Validate() const {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (!(gopt > 0.0)) throw std::invalid_argument("gopt must be positive");
  if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in [0, 1)");
  if (!(eps_p > 0.0 && eps_p < 1.0)) throw std::invalid_argument("eps_p must lie in (0, 1)");
  if (n_cap == 0) throw std::invalid_argument("n_cap must be at least 1");
  if (n_cap > (std::size_t{1} << 40)) throw std::invalid_argument("n_cap is too large");
}

SimpleStructure::SimpleStructure(CountingOracle& oracle, const SimpleParams& params,
                                 std::uint64_t seed)
    : oracle_(&oracle), params_(params), rng_(seed) {
  params_.Validate();
  levels_ = LevelCount(params_.n_cap);
  threshold_ = params_.gopt / (2.0 * static_cast<double>(params_.k));
  const std::size_t ground = oracle.function().ground_size();
  buffer_reset_seq_.assign(levels_ + 1, 0);
  buffer_count_.assign(levels_ + 1, 0);
  levels_state_.resize(levels_ + 1);
  pool_mask_.assign(ground, 0);
  pool_count_.assign(levels_ + 1, 0);
  pick_level_.assign(ground, -1);
  stamp_.assign(ground, 0);
  rebuilds_.assign(levels_ + 1, 0);
}

ElementSet SimpleStructure::pool(std::size_t l) const {
  ElementSet out;
  for (ElementId e : levels_state_[l].pool) {
    if (InPool(e, l)) out.push_back(e);
  }
  return out;
}

ElementSet SimpleStructure::Picks() const {
  ElementSet out;
  for (const Level& level : levels_state_) {
    out.insert(out.end(), level.picked.begin(), level.picked.end());
  }
  return out;
}

void SimpleStructure::Register(ElementId e) {
  if (!oracle_->function().Contains(e)) {
    throw std::domain_error("element " + std::to_string(e) + " is not in the ground set");
  }
  if (registry_.size() >= params_.n_cap && !registry_.Contains(e)) {
    throw std::length_error("structure is at capacity " + std::to_string(params_.n_cap));
  }
  registry_.Insert(e);
  for (auto& count : buffer_count_) ++count;
}

void SimpleStructure::InsertBatch(std::span<const ElementId> batch) {
  if (batch.empty()) return;
  for (ElementId e : batch) Register(e);
  RebuildFrom(0);
}

void SimpleStructure::Insert(ElementId e) {
  Register(e);
  for (std::size_t l = 0; l <= levels_; ++l) {
    if (buffer_count_[l] >= pool_count_[l]) {
      RebuildFrom(l);
      return;
    }
  }
}

void SimpleStructure::Delete(ElementId e) {
  const std::uint64_t seq = registry_.Erase(e);
  for (std::size_t l = 0; l <= levels_; ++l) {
    if (seq > buffer_reset_seq_[l]) --buffer_count_[l];
    if (InPool(e, l)) --pool_count_[l];
  }
  pool_mask_[e] = 0;
  const int at = pick_level_[e];
  if (at < 0) return;
  pick_level_[e] = -1;
  Level& level = levels_state_[static_cast<std::size_t>(at)];
  level.picked.erase(std::find(level.picked.begin(), level.picked.end(), e));
  --solution_size_;
  ++level.deletions;
  value_stale_ = true;
  if (static_cast<double>(level.deletions) >
      params_.eps * static_cast<double>(level.size_at_construction) + 1e-9) {
    RebuildFrom(static_cast<std::size_t>(at));
  }
}

Solution SimpleStructure::CurrentSolution() {
  Solution out{Picks(), cached_value_};
  if (value_stale_) {
    cached_value_ = out.elements.empty() ? 0.0 : oracle_->Evaluate(out.elements);
    value_stale_ = false;
    out.value = cached_value_;
  }
  return out;
}

void SimpleStructure::ResetBuffer(std::size_t l) {
  buffer_reset_seq_[l] = registry_.next_seq() - 1;
  buffer_count_[l] = 0;
}

void SimpleStructure::ClearFrom(std::size_t l0) {
  const std::uint64_t keep = l0 == 0 ? 0 : (~std::uint64_t{0} >> (64 - l0));
  for (std::size_t l = l0; l <= levels_; ++l) {
    Level& level = levels_state_[l];
    for (ElementId e : level.picked) pick_level_[e] = -1;
    solution_size_ -= level.picked.size();
    for (ElementId e : level.pool) pool_mask_[e] &= keep;
    level = Level{};
    pool_count_[l] = 0;
    ResetBuffer(l);
  }
}

void SimpleStructure::RebuildFrom(std::size_t l0) {
  ++rebuilds_[l0];
  ElementSet seed;
  ++epoch_;
  auto take = [&](ElementId e) {
    if (stamp_[e] == epoch_) return;
    stamp_[e] = epoch_;
    seed.push_back(e);
  };
  for (ElementId e : levels_state_[l0].pool) {
    if (InPool(e, l0)) take(e);
  }
  const auto& order = registry_.order();
  for (auto it = order.upper_bound(buffer_reset_seq_[l0]); it != order.end(); ++it) {
    take(it->second);
  }
  ClearFrom(l0);
  if (solution_size_ >= params_.k) return;

  ElementSet prefix;
  for (std::size_t l = 0; l < l0; ++l) {
    const ElementSet& picked = levels_state_[l].picked;
    prefix.insert(prefix.end(), picked.begin(), picked.end());
  }
  Context ctx = oracle_->NewContext(prefix);
  auto filter = [&](ElementSet& set) {
    std::erase_if(set, [&](ElementId e) { return ctx.Gain(e) < threshold_; });
  };

  bool filtered = false;
  for (std::size_t l = l0; l <= levels_; ++l) {
    if (!filtered) filter(seed);
    filtered = true;
    Level& level = levels_state_[l];
    level.pool = seed;
    for (ElementId e : seed) pool_mask_[e] |= std::uint64_t{1} << l;
    pool_count_[l] = seed.size();

    while (seed.size() >= Cap(l) && solution_size_ < params_.k) {
      if (params_.selection == SimpleSelection::kSingle) {
        std::uniform_int_distribution<std::size_t> pick(0, seed.size() - 1);
        const ElementId e = seed[pick(rng_)];
        ctx.Add(e);
        level.picked.push_back(e);
        pick_level_[e] = static_cast<int>(l);
        ++solution_size_;
      } else {
        ElementSet batch = Peel(seed, threshold_, params_.k - solution_size_, params_.eps_p,
                                ctx, rng_, params_.peeling);
        ctx.Extend(batch);
        for (ElementId e : batch) {
          level.picked.push_back(e);
          pick_level_[e] = static_cast<int>(l);
        }
        solution_size_ += batch.size();
      }
      filter(seed);
    }
    level.size_at_construction = level.picked.size();
    level.remaining = seed.size();
    if (solution_size_ >= params_.k) {
      level.filled = true;
      break;
    }
  }
  cached_value_ = ctx.value();
  value_stale_ = false;
}

bool SimpleStructure::CheckInvariants() const {
  std::size_t total = 0;
  for (std::size_t l = 0; l <= levels_; ++l) {
    if (buffer_count_[l] != registry_.CountAfter(buffer_reset_seq_[l])) return false;
    const Level& level = levels_state_[l];
    std::size_t live = 0;
    for (ElementId e : level.pool) live += InPool(e, l) ? 1 : 0;
    if (live != pool_count_[l]) return false;
    if (level.remaining >= Cap(l) && !level.filled) return false;
    if (level.picked.size() > level.size_at_construction) return false;
    for (ElementId e : level.picked) {
      if (!registry_.Contains(e)) return false;
      if (pick_level_[e] != static_cast<int>(l) || !InPool(e, l)) return false;
    }
    total += level.picked.size();
  }
  return total == solution_size_ && total <= params_.k;
}

}  // namespace dynsub
