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

// Batch random selection at a threshold: the indicator distribution D_s, a
// Bernoulli mean estimator, and the peeling loop built from them.

#ifndef DYNSUB_PEELING_H_
#define DYNSUB_PEELING_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "dynsub/oracle.h"
#include "dynsub/types.h"

namespace dynsub {

// Knobs that trade the full sample budget for speed.
//
// Exact() uses the full budget: 16 * ceil(ln(2/delta)/eps^2)
// samples per estimate, one estimate per step.
//
// Practical() stops an estimate as soon as its outcome is decided, caps the
// sample count, and does not re-estimate a step size that repeats (small i,
// where floor((1+eps)^i) stalls).
struct PeelingOptions {
  double sample_constant = 16.0;
  // 0 means no cap.
  std::uint64_t max_samples = 0;
  // Stop drawing once the remaining samples cannot change the decision.
  // The returned decision is identical to the full run.
  bool early_stop = false;
  bool skip_repeated_sizes = false;

  static PeelingOptions Exact() { return {}; }
  static PeelingOptions Practical() { return {16.0, 64, true, true}; }
};

struct MeanEstimatorConfig {
  double eps_hat = 0.0;
  double delta = 0.0;
  std::uint64_t samples = 0;
  // Largest number of ones for which the empirical mean is still
  // <= 1 - 1.5 eps_hat; -1 when even zero ones fails (never in range).
  std::int64_t max_ones = 0;

  // Throws std::invalid_argument unless 0 < eps_hat < 1/2 and k >= 1.
  static MeanEstimatorConfig For(double eps_hat, std::size_t k,
                                 const PeelingOptions& options = {});
};

struct PeelingConfig {
  double tau = 0.0;
  std::size_t k = 0;
  double eps_p = 0.0;
  double eps_hat = 0.0;
  // Smallest m with (1 + eps_hat)^m >= k; 0 when k <= 1.
  std::size_t m_steps = 0;

  static PeelingConfig For(double tau, std::size_t k, double eps_p);
  // floor((1 + eps_hat)^i), computed so that exact powers are not lost to
  // rounding.
  std::size_t StepSize(std::size_t i) const;
};

struct PeelStats {
  std::size_t estimates = 0;
  std::uint64_t samples = 0;
  // Step size the loop stopped at, before the cap by k.
  std::size_t s_final = 0;
  bool estimate_fired = false;
};

// Draws S ~ U(N, s), x ~ U(N \ S) and reports whether f(x | base + S) >= tau.
// `base` is restored before returning. Costs two calls.
// Throws std::invalid_argument unless 1 <= s <= |N| - 1.
bool SampleIndicator(std::span<const ElementId> candidates, std::size_t s, double tau,
                     Context& base, Rng& rng);

// Returns true iff the empirical mean of `config.samples` draws is at most
// 1 - 1.5 eps_hat. `drawn`, when given, receives the number of draws made.
bool EstimateMean(const std::function<bool()>& sample, const MeanEstimatorConfig& config,
                  const PeelingOptions& options = {}, std::uint64_t* drawn = nullptr);

// Selects a uniformly random subset of `candidates` whose size is chosen by
// the estimator loop, capped at k. Marginals are taken with respect to the
// set held by `base`, which is left unchanged.
// Throws std::invalid_argument on empty candidates, k == 0 or eps_p outside
// (0, 1).
ElementSet Peel(std::span<const ElementId> candidates, double tau, std::size_t k,
                double eps_p, Context& base, Rng& rng,
                const PeelingOptions& options = {}, PeelStats* stats = nullptr);

}  // namespace dynsub

#endif  // DYNSUB_PEELING_H_
