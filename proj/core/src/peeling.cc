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

#include "dynsub/peeling.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace dynsub {
namespace {

// Moves a uniform `count`-subset of `pool` into its first `count` slots.
// Any starting arrangement gives a uniform result.
void PartialShuffle(ElementSet& pool, std::size_t count, Rng& rng) {
  for (std::size_t j = 0; j < count; ++j) {
    std::uniform_int_distribution<std::size_t> pick(j, pool.size() - 1);
    std::swap(pool[j], pool[pick(rng)]);
  }
}

bool DrawIndicator(ElementSet& pool, std::size_t s, double tau, Context& base, Rng& rng) {
  PartialShuffle(pool, s + 1, rng);
  const Context::Mark mark = base.checkpoint();
  base.Extend(std::span<const ElementId>(pool.data(), s));
  const bool hit = base.Gain(pool[s]) >= tau;
  base.Rollback(mark);
  return hit;
}

}  // namespace

MeanEstimatorConfig MeanEstimatorConfig::For(double eps_hat, std::size_t k,
                                             const PeelingOptions& options) {
  if (!(eps_hat > 0.0 && eps_hat < 0.5)) {
    throw std::invalid_argument("eps_hat must lie in (0, 1/2)");
  }
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  MeanEstimatorConfig c;
  c.eps_hat = eps_hat;
  const double log_term = std::max(1.0, std::log(static_cast<double>(k)));
  c.delta = 2.0 * eps_hat * eps_hat / (static_cast<double>(k) * log_term);
  const double per = std::ceil(std::log(2.0 / c.delta) / (eps_hat * eps_hat));
  c.samples = static_cast<std::uint64_t>(options.sample_constant * per);
  if (options.max_samples > 0) c.samples = std::min(c.samples, options.max_samples);
  c.samples = std::max<std::uint64_t>(c.samples, 1);

  const double limit = 1.0 - 1.5 * eps_hat;
  const double m = static_cast<double>(c.samples);
  auto ok = [&](std::int64_t ones) { return static_cast<double>(ones) / m <= limit; };
  std::int64_t ones = static_cast<std::int64_t>(std::floor(m * limit));
  while (ones + 1 <= static_cast<std::int64_t>(c.samples) && ok(ones + 1)) ++ones;
  while (ones >= 0 && !ok(ones)) --ones;
  c.max_ones = ones;
  return c;
}

PeelingConfig PeelingConfig::For(double tau, std::size_t k, double eps_p) {
  if (!(eps_p > 0.0 && eps_p < 1.0)) throw std::invalid_argument("eps_p must lie in (0, 1)");
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  PeelingConfig c;
  c.tau = tau;
  c.k = k;
  c.eps_p = eps_p;
  c.eps_hat = eps_p / 4.0;
  while (std::pow(1.0 + c.eps_hat, static_cast<double>(c.m_steps)) <
         static_cast<double>(k) - 1e-9) {
    ++c.m_steps;
  }
  return c;
}

std::size_t PeelingConfig::StepSize(std::size_t i) const {
  return static_cast<std::size_t>(
      std::floor(std::pow(1.0 + eps_hat, static_cast<double>(i)) + 1e-9));
}

bool SampleIndicator(std::span<const ElementId> candidates, std::size_t s, double tau,
                     Context& base, Rng& rng) {
  if (s < 1 || s + 1 > candidates.size()) {
    throw std::invalid_argument("sample size must satisfy 1 <= s <= |N| - 1");
  }
  ElementSet pool(candidates.begin(), candidates.end());
  return DrawIndicator(pool, s, tau, base, rng);
}

bool EstimateMean(const std::function<bool()>& sample, const MeanEstimatorConfig& config,
                  const PeelingOptions& options, std::uint64_t* drawn) {
  const std::int64_t total = static_cast<std::int64_t>(config.samples);
  std::int64_t ones = 0;
  std::int64_t taken = 0;
  while (taken < total) {
    ones += sample() ? 1 : 0;
    ++taken;
    if (options.early_stop &&
        (ones > config.max_ones || ones + (total - taken) <= config.max_ones)) {
      break;
    }
  }
  if (drawn != nullptr) *drawn = static_cast<std::uint64_t>(taken);
  return ones <= config.max_ones;
}

ElementSet Peel(std::span<const ElementId> candidates, double tau, std::size_t k,
                double eps_p, Context& base, Rng& rng, const PeelingOptions& options,
                PeelStats* stats) {
  if (candidates.empty()) throw std::invalid_argument("peel needs a nonempty candidate set");
  const PeelingConfig config = PeelingConfig::For(tau, k, eps_p);
  const MeanEstimatorConfig estimator = MeanEstimatorConfig::For(config.eps_hat, k, options);
  const std::size_t n = candidates.size();

  ElementSet pool(candidates.begin(), candidates.end());
  PeelStats local;
  std::size_t s = 0;
  std::size_t previous = 0;
  for (std::size_t i = 0; i <= config.m_steps; ++i) {
    s = std::min(config.StepSize(i), n);
    if (s >= n) break;
    if (options.skip_repeated_sizes && s == previous) continue;
    previous = s;
    std::uint64_t drawn = 0;
    ++local.estimates;
    const bool fired = EstimateMean([&] { return DrawIndicator(pool, s, tau, base, rng); },
                                    estimator, options, &drawn);
    local.samples += drawn;
    if (fired) {
      local.estimate_fired = true;
      break;
    }
  }
  local.s_final = s;
  if (stats != nullptr) *stats = local;

  const std::size_t take = std::min(s, k);
  PartialShuffle(pool, take, rng);
  pool.resize(take);
  return pool;
}

}  // namespace dynsub
