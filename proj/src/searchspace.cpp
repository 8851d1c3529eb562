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

#include "pathrank/searchspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pathrank {

std::string Architecture::to_string() const {
  std::string out;
  for (size_t i = 0; i < choices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(choices[i]);
  }
  return out;
}

Architecture Architecture::from_string(const std::string& text) {
  Architecture arch;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad architecture string: " + text);
    arch.choices.push_back(v);
  }
  if (arch.choices.empty()) throw std::invalid_argument("empty architecture string");
  return arch;
}

SearchSpace::SearchSpace(std::vector<LayerGroup> groups) : groups_(std::move(groups)) {
  if (groups_.empty()) throw std::invalid_argument("search space needs at least one group");
  for (size_t g = 0; g < groups_.size(); ++g) {
    const LayerGroup& grp = groups_[g];
    if (grp.num_layers < 1) throw std::invalid_argument("group " + grp.name + ": num_layers must be >= 1");
    if (grp.num_choices() < 1) throw std::invalid_argument("group " + grp.name + ": needs at least one choice");
    std::set<std::string> labels(grp.choice_labels.begin(), grp.choice_labels.end());
    if (labels.size() != grp.choice_labels.size()) {
      throw std::invalid_argument("group " + grp.name + ": duplicate choice labels");
    }
    for (int l = 0; l < grp.num_layers; ++l) layer_to_group_.push_back(static_cast<int>(g));
  }
  total_layers_ = static_cast<int>(layer_to_group_.size());
}

int SearchSpace::group_index(int layer) const {
  if (layer < 0 || layer >= total_layers_) throw std::out_of_range("layer index out of bounds");
  return layer_to_group_[layer];
}

std::pair<std::string, int> SearchSpace::layer_info(int layer) const {
  const LayerGroup& g = groups_[group_index(layer)];
  return {g.name, g.num_choices()};
}

int SearchSpace::num_choices(int layer) const {
  return groups_[group_index(layer)].num_choices();
}

int64_t SearchSpace::lcm_choices() const {
  int64_t l = 1;
  for (const LayerGroup& g : groups_) l = std::lcm(l, static_cast<int64_t>(g.num_choices()));
  return l;
}

BigInt SearchSpace::size() const {
  BigInt n = 1;
  for (const LayerGroup& g : groups_) {
    for (int l = 0; l < g.num_layers; ++l) n *= g.num_choices();
  }
  return n;
}

bool SearchSpace::validate(const Architecture& arch) const {
  if (static_cast<int>(arch.choices.size()) != total_layers_) return false;
  for (int l = 0; l < total_layers_; ++l) {
    int c = arch.choices[l];
    if (c < 0 || c >= num_choices(l)) return false;
  }
  return true;
}

Architecture SearchSpace::architecture_at(uint64_t index) const {
  Architecture arch;
  arch.choices.assign(total_layers_, 0);
  for (int l = total_layers_ - 1; l >= 0; --l) {
    uint64_t p = static_cast<uint64_t>(num_choices(l));
    arch.choices[l] = static_cast<int>(index % p);
    index /= p;
  }
  return arch;
}

BigInt space_size(const SearchSpace& space) { return space.size(); }

ArchitectureEnumerator::ArchitectureEnumerator(const SearchSpace& space, uint64_t cap)
    : space_(&space), current_(space.total_layers(), 0) {
  if (space.size() > BigInt(cap)) throw std::runtime_error("space too large to enumerate");
}

bool ArchitectureEnumerator::next(Architecture& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    int l = space_->total_layers() - 1;
    while (l >= 0) {
      if (++current_[l] < space_->num_choices(l)) break;
      current_[l] = 0;
      --l;
    }
    if (l < 0) {
      done_ = true;
      return false;
    }
  }
  out.choices = current_;
  ++count_;
  return true;
}

std::vector<Architecture> enumerate_all(const SearchSpace& space, uint64_t cap) {
  ArchitectureEnumerator en(space, cap);
  std::vector<Architecture> all;
  Architecture a;
  while (en.next(a)) all.push_back(a);
  return all;
}

}  // namespace pathrank
