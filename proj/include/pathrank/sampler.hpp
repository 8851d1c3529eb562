// Copyright 2026 The Pathrank Authors.
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

#ifndef PATHRANK_SAMPLER_HPP_
#define PATHRANK_SAMPLER_HPP_

#include <cstdint>
#include <vector>

#include "pathrank/rng.hpp"
#include "pathrank/searchspace.hpp"

namespace pathrank {

// Per-layer uniform sampling without replacement: each layer draws from a
// shuffled deck of its choices and refills the deck with a fresh permutation
// once empty, so between refills every choice of a layer is emitted exactly
// once. Single writer; the referenced space must outlive the scheduler.
class PermutationScheduler {
 public:
  PermutationScheduler(const SearchSpace& space, uint64_t seed);

  Architecture next();

  // Emission counts per (layer, choice). Within a layer the spread between
  // max and min count never exceeds 1 and is 0 whenever draw_count is a
  // multiple of that layer's choice count.
  const std::vector<std::vector<int64_t>>& fairness_report() const { return counts_; }

  uint64_t draw_count() const { return draws_; }
  const SearchSpace& space() const { return *space_; }

 private:
  const SearchSpace* space_;
  CounterRng rng_;
  std::vector<std::vector<int>> decks_;  // consumed from the back
  std::vector<std::vector<int64_t>> counts_;
  uint64_t draws_ = 0;
};

}  // namespace pathrank

#endif  // PATHRANK_SAMPLER_HPP_
