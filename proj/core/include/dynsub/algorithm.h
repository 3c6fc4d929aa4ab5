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

#ifndef DYNSUB_ALGORITHM_H_
#define DYNSUB_ALGORITHM_H_

#include <span>
#include <string>

#include "dynsub/types.h"

namespace dynsub {

// Common surface of every fully dynamic maintainer. Implementations charge
// their oracle work to the CountingOracle they were built with.
class DynamicAlgorithm {
 public:
  virtual ~DynamicAlgorithm() = default;

  // Throws std::domain_error when `e` is already live.
  virtual void Insert(ElementId e) = 0;
  // Same end state as inserting one by one; may build it more cheaply.
  virtual void InsertBatch(std::span<const ElementId> batch) {
    for (ElementId e : batch) Insert(e);
  }
  // Throws std::domain_error when `e` is not live.
  virtual void Delete(ElementId e) = 0;
  // The maintained solution and its value. May spend oracle calls when the
  // cached value is stale.
  virtual Solution CurrentSolution() = 0;
  // Structural self-check, meant to be called between operations.
  virtual bool CheckInvariants() const { return true; }
  virtual std::string name() const = 0;
};

}  // namespace dynsub

#endif  // DYNSUB_ALGORITHM_H_
