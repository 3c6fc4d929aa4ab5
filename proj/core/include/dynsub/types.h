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

#ifndef DYNSUB_TYPES_H_
#define DYNSUB_TYPES_H_

#include <cstdint>
#include <random>
#include <vector>

namespace dynsub {

// Opaque token naming a ground-set element. For graph objectives it is the
// dense node index.
using ElementId = std::uint32_t;
using ElementSet = std::vector<ElementId>;

// Every randomized component owns one of these; they are never shared.
using Rng = std::mt19937_64;

// A reported solution together with its objective value.
struct Solution {
  ElementSet elements;
  double value = 0.0;
};

// SplitMix64 step, used to derive independent child seeds.
inline std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace dynsub

#endif  // DYNSUB_TYPES_H_
