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

// Single-bucket variant: one candidate pool per level at the fixed threshold
// gopt / (2k), picks made by random rounds, insertions buffered per level
// and merged once a buffer is as large as its pool, deletions absorbed
// lazily until an eps-fraction of a level's picks is gone.

#ifndef DYNSUB_SIMPLE_STRUCTURE_H_
#define DYNSUB_SIMPLE_STRUCTURE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dynsub/algorithm.h"
#include "dynsub/oracle.h"
#include "dynsub/peeling.h"
#include "dynsub/registry.h"
#include "dynsub/types.h"

namespace dynsub {

enum class SimpleSelection {
  // One uniformly random candidate per round.
  kSingle,
  // A peeled batch per round.
  kPeel,
};

struct SimpleParams {
  std::size_t k = 1;
  double gopt = 1.0;
  double eps = 0.0;
  double eps_p = 0.1;
  std::size_t n_cap = 2;
  SimpleSelection selection = SimpleSelection::kSingle;
  PeelingOptions peeling = PeelingOptions::Exact();

  void Validate() const;
};

class SimpleStructure final : public DynamicAlgorithm {
 public:
  SimpleStructure(CountingOracle& oracle, const SimpleParams& params, std::uint64_t seed);

  void Insert(ElementId e) override;
  // Registers the whole batch, then builds every level once.
  void InsertBatch(std::span<const ElementId> batch) override;
  void Delete(ElementId e) override;
  Solution CurrentSolution() override;
  bool CheckInvariants() const override;
  std::string name() const override { return "simple-fixed"; }

  const SimpleParams& params() const { return params_; }
  std::size_t T() const { return levels_; }
  double threshold() const { return threshold_; }
  // Live candidates H_l, picked ones included.
  ElementSet pool(std::size_t l) const;
  std::size_t pool_size(std::size_t l) const { return pool_count_[l]; }
  const ElementSet& picked(std::size_t l) const { return levels_state_[l].picked; }
  // Picks of all levels in level order.
  ElementSet Picks() const;
  std::size_t buffer_size(std::size_t l) const { return buffer_count_[l]; }
  const std::vector<std::uint64_t>& rebuilds() const { return rebuilds_; }

 private:
  struct Level {
    ElementSet pool;
    ElementSet picked;
    std::size_t size_at_construction = 0;
    // Candidates left when the level finished picking.
    std::size_t remaining = 0;
    std::size_t deletions = 0;
    // Picking stopped because the solution was full.
    bool filled = false;
  };

  std::size_t Cap(std::size_t l) const { return std::size_t{1} << (levels_ - l); }
  bool InPool(ElementId e, std::size_t l) const { return (pool_mask_[e] >> l) & 1U; }
  void Register(ElementId e);
  void ResetBuffer(std::size_t l);
  void ClearFrom(std::size_t l);
  void RebuildFrom(std::size_t l0);

  CountingOracle* oracle_;
  SimpleParams params_;
  Rng rng_;
  std::size_t levels_;
  double threshold_;

  LiveRegistry registry_;
  std::vector<std::uint64_t> buffer_reset_seq_;
  std::vector<std::size_t> buffer_count_;
  std::vector<Level> levels_state_;
  // Bit l set iff the element is a live member of pool l.
  std::vector<std::uint64_t> pool_mask_;
  std::vector<std::size_t> pool_count_;
  // Level of the element's pick, or -1.
  std::vector<int> pick_level_;
  std::size_t solution_size_ = 0;
  double cached_value_ = 0.0;
  bool value_stale_ = false;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint64_t> rebuilds_;
};

}  // namespace dynsub

#endif  // DYNSUB_SIMPLE_STRUCTURE_H_
