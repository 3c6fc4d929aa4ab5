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

// Value-oracle abstraction and oracle-call accounting.
//
// Accounting convention, applied identically to every algorithm in this
// project: one oracle call is one evaluation of f on one set. A marginal
// gain f(S + e) - f(S) therefore costs one call when f(S) is already known
// and two calls otherwise. f(empty) = 0 is known for free (normalization).
//
// Functions may keep an incremental representation of a growing set
// (EvalState) so that evaluating f(S + e) costs O(deg e) wall-clock instead
// of O(|S| deg); that only changes speed, never the counter.

#ifndef DYNSUB_ORACLE_H_
#define DYNSUB_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dynsub/graph.h"
#include "dynsub/types.h"

namespace dynsub {

// Incremental evaluation state for one set S. Supports stack-like undo.
class EvalState {
 public:
  virtual ~EvalState() = default;

  virtual double Value() const = 0;
  // f(S + e) - f(S); zero when e is already in S.
  virtual double Gain(ElementId e) const = 0;
  virtual void Add(ElementId e) = 0;
  virtual std::size_t Checkpoint() const = 0;
  virtual void Rollback(std::size_t checkpoint) = 0;
  void Reset() { Rollback(0); }
};

// A normalized monotone submodular set function over elements
// 0 .. ground_size() - 1. Implementations must be safe to call concurrently
// through the const interface.
class SubmodularFunction {
 public:
  virtual ~SubmodularFunction() = default;

  virtual std::size_t ground_size() const = 0;
  // Duplicates in `set` are ignored. Throws std::domain_error on an element
  // outside the ground set.
  virtual double Value(std::span<const ElementId> set) const = 0;
  virtual std::unique_ptr<EvalState> NewState() const = 0;

  bool Contains(ElementId e) const { return e < ground_size(); }
};

// Dominating-set objective f(Z) = |N(Z) u Z| on an undirected graph.
class CoverageFunction final : public SubmodularFunction {
 public:
  // The graph must outlive the function.
  explicit CoverageFunction(const Graph& graph) : graph_(&graph) {}

  std::size_t ground_size() const override { return graph_->node_count(); }
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<EvalState> NewState() const override;

  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_;
};

// Synthetic modular objective f(S) = sum of weights, used by tests.
class ModularFunction final : public SubmodularFunction {
 public:
  explicit ModularFunction(std::vector<double> weights);

  std::size_t ground_size() const override { return weights_.size(); }
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<EvalState> NewState() const override;

  double weight(ElementId e) const { return weights_[e]; }

 private:
  std::vector<double> weights_;
};

class Context;

// Wraps a function with a call counter. Single owner; not thread-safe.
// Contexts created from an oracle borrow it and must not outlive it.
class CountingOracle {
 public:
  explicit CountingOracle(const SubmodularFunction& f) : f_(&f) {}
  CountingOracle(const CountingOracle&) = delete;
  CountingOracle& operator=(const CountingOracle&) = delete;

  // f(S). One call.
  double Evaluate(std::span<const ElementId> set);

  // f(S + e) - f(S). One call when `cached_value` holds f(S), two otherwise.
  double MarginalGain(ElementId e, std::span<const ElementId> set,
                      std::optional<double> cached_value = std::nullopt);

  // A context positioned at `base`; costs one call unless `base` is empty.
  Context NewContext(std::span<const ElementId> base = {});

  std::uint64_t query_count() const { return calls_; }
  void reset_count() { calls_ = 0; }

  const SubmodularFunction& function() const { return *f_; }

 private:
  friend class Context;

  void Charge(std::uint64_t calls = 1) { calls_ += calls; }
  void CheckElement(ElementId e) const;
  std::unique_ptr<EvalState> AcquireState();
  void ReleaseState(std::unique_ptr<EvalState> state);

  const SubmodularFunction* f_;
  std::uint64_t calls_ = 0;
  std::vector<std::unique_ptr<EvalState>> spare_states_;
};

// A set S with f(S) cached, driven through a CountingOracle.
//
//   Gain(e)       one call, f(S + e) with f(S) known.
//   Add(e)        free right after Gain(e) on the same set, else one call.
//   Extend(batch) one call for f(S u batch) when the batch is nonempty.
//   Rollback      free; the restored value was already known.
class Context {
 public:
  struct Mark {
    std::size_t state = 0;
    std::size_t members = 0;
  };

  Context(Context&& other) noexcept;
  Context& operator=(Context&& other) noexcept;
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  ~Context();

  double value() const { return state_->Value(); }
  std::size_t size() const { return members_.size(); }
  std::span<const ElementId> members() const { return members_; }

  double Gain(ElementId e);
  void Add(ElementId e);
  void Extend(std::span<const ElementId> batch);

  Mark checkpoint() const { return {state_->Checkpoint(), members_.size()}; }
  void Rollback(Mark mark);

 private:
  friend class CountingOracle;
  Context(CountingOracle* oracle, std::unique_ptr<EvalState> state)
      : oracle_(oracle), state_(std::move(state)) {}
  void Release();

  CountingOracle* oracle_ = nullptr;
  std::unique_ptr<EvalState> state_;
  ElementSet members_;
  std::uint64_t version_ = 0;
  std::uint64_t gain_version_ = ~std::uint64_t{0};
  ElementId gain_element_ = 0;
};

}  // namespace dynsub

#endif  // DYNSUB_ORACLE_H_
