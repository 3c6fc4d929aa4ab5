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

// Fully dynamic structure for a fixed guess of the optimum and a fixed
// capacity: a ladder of thresholds, a grid of candidate buckets and solution
// slots indexed by (threshold i, level l), and per-level insertion buffers.
// Level l has capacity 2^(T-l); rebuilding a level recomputes every deeper
// level as well.

#ifndef DYNSUB_DYNAMIC_STRUCTURE_H_
#define DYNSUB_DYNAMIC_STRUCTURE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynsub/algorithm.h"
#include "dynsub/oracle.h"
#include "dynsub/peeling.h"
#include "dynsub/registry.h"
#include "dynsub/types.h"

namespace dynsub {

struct CoreParams {
  std::size_t k = 1;
  // Guess of the optimum; the top threshold.
  double gopt = 1.0;
  // Fraction of a slot that may be deleted before it is rebuilt.
  double eps = 0.0;
  // Ratio between consecutive thresholds is 1 + eps1.
  double eps1 = 1.0;
  double eps_p = 0.1;
  // Largest number of simultaneously live elements.
  std::size_t n_cap = 2;
  PeelingOptions peeling = PeelingOptions::Exact();

  // Throws std::invalid_argument describing the first bad field.
  void Validate() const;
};

// ceil(log2 n); 0 for n <= 1.
std::size_t LevelCount(std::size_t n_cap);
// Smallest r >= 1 with (1 + eps1)^r >= 2k.
std::size_t ThresholdCount(std::size_t k, double eps1);

class DynamicStructure final : public DynamicAlgorithm {
 public:
  DynamicStructure(CountingOracle& oracle, const CoreParams& params, std::uint64_t seed);

  void Insert(ElementId e) override;
  void Delete(ElementId e) override;
  Solution CurrentSolution() override;
  bool CheckInvariants() const override;
  std::string name() const override { return "full-fixed"; }

  const CoreParams& params() const { return params_; }
  std::size_t T() const { return levels_; }
  std::size_t R() const { return thresholds_; }
  // tau_0 .. tau_R.
  const std::vector<double>& taus() const { return taus_; }

  // Union of all slots at levels < l and of slots (j, l) with j <= i, in
  // level-major order. i in 1..R, l in 0..T.
  ElementSet SUp(std::size_t i, std::size_t l) const;
  const ElementSet& slot(std::size_t i, std::size_t l) const { return Slot(i, l).members; }
  // Live members of bucket A_{i,l}.
  ElementSet bucket(std::size_t i, std::size_t l) const;
  std::size_t buffer_size(std::size_t l) const { return buffer_count_[l]; }
  std::size_t solution_size() const { return solution_size_; }
  const LiveRegistry& registry() const { return registry_; }
  // Number of rebuilds that started at each level.
  const std::vector<std::uint64_t>& rebuilds() const { return rebuilds_; }
  // True while deletions since the last rebuild have left the cached
  // solution value out of date.
  bool value_is_stale() const { return value_stale_; }

 private:
  friend class DynamicStructurePeer;

  struct Entry {
    ElementId id;
    std::uint64_t seq;
  };
  struct SolutionSlot {
    ElementSet members;
    std::size_t size_at_construction = 0;
    std::size_t deletions = 0;
  };

  std::size_t Cap(std::size_t l) const { return std::size_t{1} << (levels_ - l); }
  SolutionSlot& Slot(std::size_t i, std::size_t l) { return slots_[l * thresholds_ + i - 1]; }
  const SolutionSlot& Slot(std::size_t i, std::size_t l) const {
    return slots_[l * thresholds_ + i - 1];
  }
  std::vector<Entry>& Bucket(std::size_t i, std::size_t l) {
    return buckets_[l * thresholds_ + i - 1];
  }
  const std::vector<Entry>& Bucket(std::size_t i, std::size_t l) const {
    return buckets_[l * thresholds_ + i - 1];
  }
  bool IsLive(const Entry& entry) const;

  void ClearSlotsFrom(std::size_t l);
  void ResetBuffer(std::size_t l);
  void ClearBucketsFrom(std::size_t l);
  std::vector<Entry> Seed(std::size_t l);
  void LevelConstruct(std::size_t l0);
  void BucketConstruct(std::size_t i, std::size_t l, Context& ctx);

  CountingOracle* oracle_;
  CoreParams params_;
  Rng rng_;
  std::size_t levels_;
  std::size_t thresholds_;
  std::vector<double> taus_;

  LiveRegistry registry_;
  // Dense mirror of the registry: sequence number per element, 0 if absent.
  std::vector<std::uint64_t> live_seq_;
  // B_l holds the live elements inserted after buffer_reset_seq_[l].
  std::vector<std::uint64_t> buffer_reset_seq_;
  std::vector<std::size_t> buffer_count_;
  std::vector<std::vector<Entry>> buckets_;
  std::vector<SolutionSlot> slots_;
  // Element -> (i, l) of the slot holding it.
  std::unordered_map<ElementId, std::pair<std::size_t, std::size_t>> slot_of_;
  std::size_t solution_size_ = 0;
  double cached_value_ = 0.0;
  bool value_stale_ = false;

  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint64_t> rebuilds_;
};

}  // namespace dynsub

#endif  // DYNSUB_DYNAMIC_STRUCTURE_H_
