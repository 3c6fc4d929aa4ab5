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
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "dynsub/dynamic_structure.h"
#include "dynsub/graph_gen.h"
#include "dynsub/oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dynsub {
namespace {

using ::dynsub::testing::Iota;
using ::dynsub::testing::NaiveCoverage;
using ::dynsub::testing::RandomMixedStream;

SimpleParams Params(std::size_t k, double gopt, std::size_t n_cap, double eps = 0.0,
                    SimpleSelection selection = SimpleSelection::kSingle) {
  SimpleParams p;
  p.k = k;
  p.gopt = gopt;
  p.n_cap = n_cap;
  p.eps = eps;
  p.selection = selection;
  p.peeling = PeelingOptions::Practical();
  return p;
}

void Apply(DynamicAlgorithm& algo, const StreamEvent& ev) {
  if (ev.kind == EventKind::kInsert) {
    algo.Insert(ev.element);
  } else {
    algo.Delete(ev.element);
  }
}

std::uint64_t TotalRebuilds(const SimpleStructure& s) {
  return std::accumulate(s.rebuilds().begin(), s.rebuilds().end(), std::uint64_t{0});
}

TEST(SimpleStructureTest, ThresholdAndLevels) {
  ModularFunction f(std::vector<double>(4, 1.0));
  CountingOracle oracle(f);
  SimpleStructure s(oracle, Params(5, 30.0, 100), 1);
  EXPECT_DOUBLE_EQ(s.threshold(), 3.0);
  EXPECT_EQ(s.T(), LevelCount(100));
  EXPECT_EQ(s.name(), "simple-fixed");
}

TEST(SimpleStructureTest, ValidateRejectsBadFields) {
  EXPECT_THROW(Params(0, 1.0, 4).Validate(), std::invalid_argument);
  EXPECT_THROW(Params(1, 0.0, 4).Validate(), std::invalid_argument);
  EXPECT_THROW(Params(1, 1.0, 0).Validate(), std::invalid_argument);
  EXPECT_THROW(Params(1, 1.0, 4, 1.0).Validate(), std::invalid_argument);
}

TEST(SimpleStructureTest, AllBelowThresholdGivesEmptySolution) {
  ModularFunction f(std::vector<double>(10, 1.0));
  CountingOracle oracle(f);
  // threshold 20 / 4 = 5 > 1.
  SimpleStructure s(oracle, Params(2, 20.0, 16), 1);
  for (ElementId e = 0; e < 10; ++e) s.Insert(e);
  EXPECT_TRUE(s.CurrentSolution().elements.empty());
  EXPECT_EQ(s.CurrentSolution().value, 0.0);
}

TEST(SimpleStructureTest, ModularFillsToK) {
  for (auto selection : {SimpleSelection::kSingle, SimpleSelection::kPeel}) {
    ModularFunction f(std::vector<double>(40, 1.0));
    CountingOracle oracle(f);
    SimpleStructure s(oracle, Params(5, 5.0, 64, 0.0, selection), 2);
    for (ElementId e = 0; e < 40; ++e) s.Insert(e);
    const Solution sol = s.CurrentSolution();
    EXPECT_EQ(sol.elements.size(), 5u);
    EXPECT_EQ(std::set<ElementId>(sol.elements.begin(), sol.elements.end()).size(), 5u);
    EXPECT_EQ(sol.value, 5.0);
  }
}

TEST(SimpleStructureTest, DeletingUnpickedElementIsFree) {
  ModularFunction f(std::vector<double>(12, 1.0));
  CountingOracle oracle(f);
  SimpleStructure s(oracle, Params(2, 2.0, 16), 3);
  for (ElementId e = 0; e < 12; ++e) s.Insert(e);
  const ElementSet picks = s.Picks();
  ASSERT_EQ(picks.size(), 2u);
  ElementId victim = 0;
  while (std::count(picks.begin(), picks.end(), victim)) ++victim;
  (void)s.CurrentSolution();
  oracle.reset_count();
  s.Delete(victim);
  EXPECT_EQ(oracle.query_count(), 0u);
  EXPECT_EQ(s.Picks(), picks);
}

TEST(SimpleStructureTest, EpsZeroRebuildsOnPickDeletion) {
  ModularFunction f(std::vector<double>(12, 1.0));
  CountingOracle oracle(f);
  SimpleStructure s(oracle, Params(2, 2.0, 16), 3);
  for (ElementId e = 0; e < 12; ++e) s.Insert(e);
  const std::uint64_t before = TotalRebuilds(s);
  s.Delete(s.Picks().front());
  EXPECT_EQ(TotalRebuilds(s), before + 1);
  EXPECT_EQ(s.Picks().size(), 2u);
  EXPECT_TRUE(s.CheckInvariants());
}

TEST(SimpleStructureTest, LazyDeletionWithinEps) {
  ModularFunction f(std::vector<double>(64, 1.0));
  CountingOracle oracle(f);
  // One batch of inserts; picks sit at several levels.
  SimpleStructure s(oracle, Params(10, 10.0, 64, 0.5), 3);
  s.InsertBatch(Iota(60));
  ASSERT_EQ(s.Picks().size(), 10u);
  const std::uint64_t before = TotalRebuilds(s);
  std::size_t level = 0;
  while (s.picked(level).size() < 2) ++level;
  s.Delete(s.picked(level).front());
  EXPECT_EQ(TotalRebuilds(s), before);
  EXPECT_EQ(s.CurrentSolution().value, 9.0);
}

TEST(SimpleStructureTest, RejectsBadUpdates) {
  ModularFunction f(std::vector<double>(4, 1.0));
  CountingOracle oracle(f);
  SimpleStructure s(oracle, Params(1, 1.0, 2), 5);
  s.Insert(0);
  EXPECT_THROW(s.Insert(0), std::domain_error);
  EXPECT_THROW(s.Delete(1), std::domain_error);
  EXPECT_THROW(s.Insert(9), std::domain_error);
  s.Insert(1);
  EXPECT_THROW(s.Insert(2), std::length_error);
}

TEST(SimpleStructureTest, BatchInsertMatchesSequentialShape) {
  const Graph g = RandomGraph(60, 4.0, 4);
  CoverageFunction f(g);
  CountingOracle oracle(f);
  SimpleStructure batch(oracle, Params(4, 20.0, 64, 0.2), 4);
  SimpleStructure seq(oracle, Params(4, 20.0, 64, 0.2), 4);
  const ElementSet all = Iota(50);
  batch.InsertBatch(all);
  for (ElementId e : all) seq.Insert(e);
  EXPECT_TRUE(batch.CheckInvariants());
  for (std::size_t l = 0; l <= batch.T(); ++l) EXPECT_EQ(batch.buffer_size(l), 0u);
  EXPECT_EQ(batch.Picks().size(), seq.Picks().size());
  for (SimpleStructure* s : {&batch, &seq}) {
    const Solution sol = s->CurrentSolution();
    EXPECT_DOUBLE_EQ(sol.value, NaiveCoverage(g, sol.elements));
  }
  // The batch build leaves nothing buffered, so an unfilled solution has
  // no candidate left at or above the threshold.
  const Solution sol = batch.CurrentSolution();
  if (sol.elements.size() < 4) {
    for (ElementId e : all) {
      ElementSet with = sol.elements;
      with.push_back(e);
      EXPECT_LT(NaiveCoverage(g, with) - sol.value, batch.threshold());
    }
  }
  for (ElementId e = 50; e < 60; ++e) batch.Insert(e);
  EXPECT_TRUE(batch.CheckInvariants());
}

// Property: invariants and value consistency on random streams, both
// selection modes.
TEST(SimpleStructureTest, InvariantsHoldOnRandomStreams) {
  for (auto selection : {SimpleSelection::kSingle, SimpleSelection::kPeel}) {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const Graph g = RandomGraph(64, 5.0, seed);
      CoverageFunction f(g);
      CountingOracle oracle(f);
      const std::size_t k = 1 + seed % 5;
      SimpleStructure s(oracle, Params(k, 4.0 + 2.0 * seed, 64, 0.1 * (seed % 4), selection),
                        seed);
      for (const StreamEvent& ev : RandomMixedStream(64, 300, seed)) {
        Apply(s, ev);
        ASSERT_TRUE(s.CheckInvariants()) << "seed " << seed;
        const Solution sol = s.CurrentSolution();
        ASSERT_LE(sol.elements.size(), k);
        ASSERT_DOUBLE_EQ(sol.value, NaiveCoverage(g, sol.elements));
      }
    }
  }
}

// Property: with eps = 0 an unfilled solution leaves every live element
// below the threshold, except those still waiting in the deepest buffer.
TEST(SimpleStructureTest, UnfilledSolutionLeavesOnlySmallMarginals) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = RandomGraph(48, 3.0, seed);
    CoverageFunction f(g);
    CountingOracle oracle(f);
    SimpleStructure s(oracle, Params(6, 24.0, 64, 0.0), seed);
    std::set<ElementId> live;
    std::set<ElementId> pending;
    for (const StreamEvent& ev : RandomMixedStream(48, 300, seed + 50)) {
      const std::uint64_t before = TotalRebuilds(s);
      Apply(s, ev);
      if (ev.kind == EventKind::kInsert) {
        live.insert(ev.element);
        pending.insert(ev.element);
      } else {
        live.erase(ev.element);
        pending.erase(ev.element);
      }
      // Every rebuild empties the deepest buffer.
      if (TotalRebuilds(s) != before) pending.clear();
      ASSERT_EQ(pending.size(), s.buffer_size(s.T()));
      const Solution sol = s.CurrentSolution();
      if (sol.elements.size() >= 6) continue;
      for (ElementId e : live) {
        ElementSet with = sol.elements;
        with.push_back(e);
        if (NaiveCoverage(g, with) - sol.value >= s.threshold()) {
          ASSERT_TRUE(pending.count(e)) << "seed " << seed << " element " << e;
        }
      }
    }
  }
}

}  // namespace
}  // namespace dynsub
