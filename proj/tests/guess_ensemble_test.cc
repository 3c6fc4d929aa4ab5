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

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "dynsub/dynamic_structure.h"
#include "dynsub/graph_gen.h"
#include "dynsub/oracle.h"
#include "dynsub/reference.h"
#include "dynsub/simple_structure.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dynsub {
namespace {

using ::dynsub::testing::Iota;
using ::dynsub::testing::NaiveCoverage;
using ::dynsub::testing::RandomMixedStream;

CoreParams FullParams(std::size_t k, double eps = 0.2) {
  CoreParams p;
  p.k = k;
  p.eps = eps;
  p.peeling = PeelingOptions::Practical();
  return p;
}

SimpleParams SimpleDefaults(std::size_t k, double eps = 0.2) {
  SimpleParams p;
  p.k = k;
  p.eps = eps;
  return p;
}

void Apply(DynamicAlgorithm& algo, const StreamEvent& ev) {
  if (ev.kind == EventKind::kInsert) {
    algo.Insert(ev.element);
  } else {
    algo.Delete(ev.element);
  }
}

std::vector<int> WindowByScan(double v, std::size_t k, double eps_p) {
  std::vector<int> out;
  for (int j = -400; j <= 400; ++j) {
    const double g = std::pow(1.0 + eps_p, j);
    if (g >= v * (1 - 1e-12) && g <= static_cast<double>(k) / eps_p * v * (1 + 1e-12)) {
      out.push_back(j);
    }
  }
  return out;
}

TEST(GuessWindowTest, UnitValueExample) {
  const auto w = GuessWindow(1.0, 10, 0.1);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->first, 0);
  EXPECT_EQ(w->second, 48);
  EXPECT_LE(std::pow(1.1, 48), 100.0);
  EXPECT_GT(std::pow(1.1, 49), 100.0);
}

TEST(GuessWindowTest, MatchesScan) {
  for (double v : {0.37, 1.0, 2.0, 7.5, 13.0, 250.0}) {
    for (std::size_t k : {1u, 3u, 40u}) {
      for (double eps_p : {0.05, 0.1, 0.3}) {
        const auto w = GuessWindow(v, k, eps_p);
        const auto scan = WindowByScan(v, k, eps_p);
        ASSERT_TRUE(w.has_value());
        ASSERT_FALSE(scan.empty());
        EXPECT_EQ(w->first, scan.front()) << v << " " << k << " " << eps_p;
        EXPECT_EQ(w->second, scan.back()) << v << " " << k << " " << eps_p;
      }
    }
  }
}

TEST(GuessWindowTest, NonPositiveValueHasNoWindow) {
  EXPECT_FALSE(GuessWindow(0.0, 5, 0.1).has_value());
  EXPECT_FALSE(GuessWindow(-1.0, 5, 0.1).has_value());
}

TEST(GuessEnsembleTest, RejectsBadArguments) {
  ModularFunction f({1.0});
  CountingOracle oracle(f);
  auto factory = [](double, std::size_t, std::uint64_t) {
    return std::unique_ptr<DynamicAlgorithm>();
  };
  EXPECT_THROW(GuessEnsemble(oracle, 0, 0.1, factory, 1), std::invalid_argument);
  EXPECT_THROW(GuessEnsemble(oracle, 1, 0.0, factory, 1), std::invalid_argument);
  EXPECT_THROW(GuessEnsemble(oracle, 1, 0.1, factory, 1, "x", 1), std::invalid_argument);
}

TEST(GuessEnsembleTest, ZeroValueElementIsRoutedNowhere) {
  ModularFunction f({0.0, 1.0});
  CountingOracle oracle(f);
  auto ens = GuessEnsemble::Full(oracle, FullParams(2), 1);
  ens->Insert(0);
  EXPECT_EQ(oracle.query_count(), 1u);
  EXPECT_TRUE(ens->exponents().empty());
  EXPECT_TRUE(ens->CurrentSolution().elements.empty());
  oracle.reset_count();
  ens->Delete(0);
  EXPECT_EQ(oracle.query_count(), 0u);
  EXPECT_TRUE(ens->CheckInvariants());
}

TEST(GuessEnsembleTest, CapacityDoublesAndCopiesGrow) {
  ModularFunction f(std::vector<double>(20, 1.0));
  CountingOracle oracle(f);
  auto ens = GuessEnsemble::Full(oracle, FullParams(2), 1);
  EXPECT_EQ(ens->capacity(), 2u);
  ens->Insert(0);
  EXPECT_EQ(ens->capacity(), 2u);
  ens->Insert(1);
  EXPECT_EQ(ens->capacity(), 4u);
  for (ElementId e = 2; e < 8; ++e) ens->Insert(e);
  EXPECT_EQ(ens->capacity(), 16u);
  EXPECT_EQ(ens->restarts(), 3u);
  ASSERT_FALSE(ens->exponents().empty());
  for (int j : ens->exponents()) {
    auto* ds = dynamic_cast<DynamicStructure*>(ens->copy(j));
    ASSERT_NE(ds, nullptr);
    EXPECT_EQ(ds->T(), LevelCount(16));
    EXPECT_EQ(ens->copy_members(j), 8u);
  }
  EXPECT_TRUE(ens->CheckInvariants());
}

TEST(GuessEnsembleTest, RejectsBadUpdates) {
  ModularFunction f(std::vector<double>(4, 1.0));
  CountingOracle oracle(f);
  auto ens = GuessEnsemble::Full(oracle, FullParams(2), 1);
  ens->Insert(0);
  EXPECT_THROW(ens->Insert(0), std::domain_error);
  EXPECT_THROW(ens->Delete(3), std::domain_error);
}

// Some copy's guess lies in [OPT, (1 + eps_p) OPT).
TEST(GuessEnsembleTest, SomeCopyBracketsOptimum) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = RandomGraph(14, 3.0, seed);
    CoverageFunction f(g);
    CountingOracle oracle(f);
    const std::size_t k = 3;
    const double opt = BruteForceOpt(oracle, Iota(14), k).value;
    auto full = GuessEnsemble::Full(oracle, FullParams(k), seed);
    auto simple = GuessEnsemble::Simple(oracle, SimpleDefaults(k), seed);
    for (ElementId e = 0; e < 14; ++e) {
      full->Insert(e);
      simple->Insert(e);
    }
    for (const GuessEnsemble* ens : {full.get(), simple.get()}) {
      bool found = false;
      for (int j : ens->exponents()) {
        const double guess = ens->Guess(j);
        found = found || (guess >= opt * (1 - 1e-12) && guess < 1.1 * opt);
      }
      EXPECT_TRUE(found) << ens->name() << " seed " << seed;
    }
  }
}

TEST(GuessEnsembleTest, ReportsBestCopyWithSmallestExponentOnTies) {
  const Graph g = RandomGraph(40, 4.0, 3);
  CoverageFunction f(g);
  CountingOracle oracle(f);
  auto ens = GuessEnsemble::Full(oracle, FullParams(4), 9);
  for (ElementId e = 0; e < 40; ++e) ens->Insert(e);
  double best = -1.0;
  ElementSet best_elements;
  for (int j : ens->exponents()) {
    const Solution s = ens->copy(j)->CurrentSolution();
    if (s.value > best) {
      best = s.value;
      best_elements = s.elements;
    }
  }
  const Solution s = ens->CurrentSolution();
  EXPECT_EQ(s.value, best);
  EXPECT_EQ(s.elements, best_elements);
}

TEST(GuessEnsembleTest, SingletonFloorOnlyForSimple) {
  ModularFunction f({1.0, 8.0, 2.0});
  CountingOracle oracle(f);
  EXPECT_FALSE(GuessEnsemble::Full(oracle, FullParams(2), 1)->singleton_floor());
  auto ens = GuessEnsemble::Simple(oracle, SimpleDefaults(2), 1);
  EXPECT_TRUE(ens->singleton_floor());
  ens->Insert(0);
  for (int j : ens->exponents()) EXPECT_GE(ens->Guess(j), 1.0);
  ens->Insert(1);
  ASSERT_FALSE(ens->exponents().empty());
  for (int j : ens->exponents()) EXPECT_GE(ens->Guess(j), 8.0 * (1 - 1e-12));
  EXPECT_TRUE(ens->CheckInvariants());
  ens->Insert(2);
  ens->Delete(1);
  // Copies between 2 and 8 are back and hold the live elements they admit.
  const auto w = GuessWindow(2.0, 2, 0.1);
  ASSERT_TRUE(w.has_value());
  for (int j = w->first; j <= w->second; ++j) {
    ASSERT_NE(ens->copy(j), nullptr) << j;
  }
  EXPECT_TRUE(ens->CheckInvariants());
  EXPECT_EQ(ens->CurrentSolution().value, 3.0);
}

// Property: invariants, size bound, liveness and value consistency on
// random mixed streams, for both ensembles.
TEST(GuessEnsembleTest, InvariantsHoldOnRandomStreams) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = RandomGraph(48, 4.0, seed);
    CoverageFunction f(g);
    CountingOracle oracle(f);
    const std::size_t k = 1 + seed % 4;
    auto full = GuessEnsemble::Full(oracle, FullParams(k, 0.1 * (seed % 3)), seed);
    auto simple = GuessEnsemble::Simple(oracle, SimpleDefaults(k, 0.1 * (seed % 3)), seed);
    std::set<ElementId> live;
    for (const StreamEvent& ev : RandomMixedStream(48, 250, seed)) {
      if (ev.kind == EventKind::kInsert) {
        live.insert(ev.element);
      } else {
        live.erase(ev.element);
      }
      for (GuessEnsemble* ens : {full.get(), simple.get()}) {
        Apply(*ens, ev);
        ASSERT_TRUE(ens->CheckInvariants()) << ens->name() << " seed " << seed;
        ASSERT_EQ(ens->live_count(), live.size());
        const Solution s = ens->CurrentSolution();
        ASSERT_LE(s.elements.size(), k);
        for (ElementId e : s.elements) ASSERT_TRUE(live.count(e));
        ASSERT_DOUBLE_EQ(s.value, NaiveCoverage(g, s.elements));
      }
    }
  }
}

}  // namespace
}  // namespace dynsub
