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

#include "dynsub/oracle.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace dynsub {
namespace {

[[noreturn]] void ThrowUnknown(ElementId e, std::size_t ground_size) {
  throw std::domain_error("element " + std::to_string(e) +
                          " is not in the ground set of size " +
                          std::to_string(ground_size));
}

// Dense covered-node flags plus an undo log of newly covered nodes; the
// value is the log length.
class CoverageState final : public EvalState {
 public:
  explicit CoverageState(const Graph& g) : graph_(g), covered_(g.node_count(), 0) {}

  double Value() const override { return static_cast<double>(log_.size()); }

  double Gain(ElementId e) const override {
    std::size_t gain = covered_[e] ? 0 : 1;
    for (ElementId u : graph_.neighbors(e)) gain += covered_[u] ? 0 : 1;
    return static_cast<double>(gain);
  }

  void Add(ElementId e) override {
    Cover(e);
    for (ElementId u : graph_.neighbors(e)) Cover(u);
  }

  std::size_t Checkpoint() const override { return log_.size(); }

  void Rollback(std::size_t checkpoint) override {
    while (log_.size() > checkpoint) {
      covered_[log_.back()] = 0;
      log_.pop_back();
    }
  }

 private:
  void Cover(ElementId u) {
    if (!covered_[u]) {
      covered_[u] = 1;
      log_.push_back(u);
    }
  }

  const Graph& graph_;
  std::vector<std::uint8_t> covered_;
  std::vector<ElementId> log_;
};

class ModularState final : public EvalState {
 public:
  explicit ModularState(const std::vector<double>& w)
      : weights_(w), member_(w.size(), 0), sums_{0.0} {}

  double Value() const override { return sums_.back(); }
  double Gain(ElementId e) const override { return member_[e] ? 0.0 : weights_[e]; }

  void Add(ElementId e) override {
    if (member_[e]) return;
    member_[e] = 1;
    log_.push_back(e);
    sums_.push_back(sums_.back() + weights_[e]);
  }

  std::size_t Checkpoint() const override { return log_.size(); }

  void Rollback(std::size_t checkpoint) override {
    while (log_.size() > checkpoint) {
      member_[log_.back()] = 0;
      log_.pop_back();
      sums_.pop_back();
    }
  }

 private:
  const std::vector<double>& weights_;
  std::vector<std::uint8_t> member_;
  std::vector<ElementId> log_;
  std::vector<double> sums_;
};

}  // namespace

double CoverageFunction::Value(std::span<const ElementId> set) const {
  const std::size_t n = graph_->node_count();
  std::vector<ElementId> covered;
  for (ElementId e : set) {
    if (e >= n) ThrowUnknown(e, n);
    covered.push_back(e);
    auto nb = graph_->neighbors(e);
    covered.insert(covered.end(), nb.begin(), nb.end());
  }
  std::sort(covered.begin(), covered.end());
  return static_cast<double>(std::unique(covered.begin(), covered.end()) - covered.begin());
}

std::unique_ptr<EvalState> CoverageFunction::NewState() const {
  return std::make_unique<CoverageState>(*graph_);
}

ModularFunction::ModularFunction(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!(w >= 0.0)) throw std::invalid_argument("modular weights must be non-negative");
  }
}

double ModularFunction::Value(std::span<const ElementId> set) const {
  ElementSet sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  double total = 0.0;
  for (ElementId e : sorted) {
    if (e >= weights_.size()) ThrowUnknown(e, weights_.size());
    total += weights_[e];
  }
  return total;
}

std::unique_ptr<EvalState> ModularFunction::NewState() const {
  return std::make_unique<ModularState>(weights_);
}

void CountingOracle::CheckElement(ElementId e) const {
  if (!f_->Contains(e)) ThrowUnknown(e, f_->ground_size());
}

double CountingOracle::Evaluate(std::span<const ElementId> set) {
  double v = f_->Value(set);
  Charge();
  return v;
}

double CountingOracle::MarginalGain(ElementId e, std::span<const ElementId> set,
                                    std::optional<double> cached_value) {
  CheckElement(e);
  const double base = cached_value ? *cached_value : Evaluate(set);
  ElementSet with(set.begin(), set.end());
  with.push_back(e);
  return std::max(0.0, Evaluate(with) - base);
}

Context CountingOracle::NewContext(std::span<const ElementId> base) {
  Context ctx(this, AcquireState());
  if (!base.empty()) ctx.Extend(base);
  return ctx;
}

std::unique_ptr<EvalState> CountingOracle::AcquireState() {
  if (spare_states_.empty()) return f_->NewState();
  auto state = std::move(spare_states_.back());
  spare_states_.pop_back();
  return state;
}

void CountingOracle::ReleaseState(std::unique_ptr<EvalState> state) {
  state->Reset();
  spare_states_.push_back(std::move(state));
}

Context::Context(Context&& other) noexcept
    : oracle_(std::exchange(other.oracle_, nullptr)),
      state_(std::move(other.state_)),
      members_(std::move(other.members_)),
      version_(other.version_),
      gain_version_(other.gain_version_),
      gain_element_(other.gain_element_) {}

Context& Context::operator=(Context&& other) noexcept {
  if (this != &other) {
    Release();
    oracle_ = std::exchange(other.oracle_, nullptr);
    state_ = std::move(other.state_);
    members_ = std::move(other.members_);
    version_ = other.version_;
    gain_version_ = other.gain_version_;
    gain_element_ = other.gain_element_;
  }
  return *this;
}

Context::~Context() { Release(); }

void Context::Release() {
  if (oracle_ != nullptr && state_ != nullptr) oracle_->ReleaseState(std::move(state_));
  oracle_ = nullptr;
}

double Context::Gain(ElementId e) {
  oracle_->CheckElement(e);
  oracle_->Charge();
  gain_element_ = e;
  gain_version_ = version_;
  return state_->Gain(e);
}

void Context::Add(ElementId e) {
  oracle_->CheckElement(e);
  assert(std::find(members_.begin(), members_.end(), e) == members_.end());
  if (gain_version_ != version_ || gain_element_ != e) oracle_->Charge();
  state_->Add(e);
  members_.push_back(e);
  ++version_;
}

void Context::Extend(std::span<const ElementId> batch) {
  if (batch.empty()) return;
  for (ElementId e : batch) {
    oracle_->CheckElement(e);
    state_->Add(e);
    members_.push_back(e);
  }
  oracle_->Charge();
  ++version_;
}

void Context::Rollback(Mark mark) {
  state_->Rollback(mark.state);
  members_.resize(mark.members);
  ++version_;
}

}  // namespace dynsub
