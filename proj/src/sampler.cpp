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

#include "pathrank/sampler.hpp"

#include <numeric>

namespace pathrank {

PermutationScheduler::PermutationScheduler(const SearchSpace& space, uint64_t seed)
    : space_(&space), rng_(seed, "permute") {
  decks_.resize(space.total_layers());
  counts_.resize(space.total_layers());
  for (int l = 0; l < space.total_layers(); ++l) {
    counts_[l].assign(space.num_choices(l), 0);
  }
}

Architecture PermutationScheduler::next() {
  Architecture arch;
  arch.choices.resize(space_->total_layers());
  for (int l = 0; l < space_->total_layers(); ++l) {
    std::vector<int>& deck = decks_[l];
    if (deck.empty()) {
      deck.resize(space_->num_choices(l));
      std::iota(deck.begin(), deck.end(), 0);
      rng_.shuffle(deck);
    }
    int c = deck.back();
    deck.pop_back();
    arch.choices[l] = c;
    ++counts_[l][c];
  }
  ++draws_;
  return arch;
}

}  // namespace pathrank
