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

#ifndef PATHRANK_SEARCHSPACE_HPP_
#define PATHRANK_SEARCHSPACE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pathrank {

using BigInt = boost::multiprecision::cpp_int;

// Default ceiling for exhaustive enumeration; overridable through the
// run.enumeration_cap config key.
inline constexpr uint64_t kDefaultEnumerationCap = 1'000'000;

// One contiguous run of search layers that share a choice set, e.g. the
// backbone layers or the cross-branch attention layers.
struct LayerGroup {
  std::string name;
  int num_layers = 0;
  std::vector<std::string> choice_labels;

  int num_choices() const { return static_cast<int>(choice_labels.size()); }
};

// One choice index per search layer; the unit that gets sampled, trained,
// evaluated and scored.
struct Architecture {
  std::vector<int> choices;

  bool operator==(const Architecture&) const = default;

  std::string to_string() const;  // "0,2,1"
  static Architecture from_string(const std::string& text);
};

class SearchSpace {
 public:
  // Validates the group invariants (positive counts, distinct labels);
  // throws std::invalid_argument on violation.
  explicit SearchSpace(std::vector<LayerGroup> groups);

  int total_layers() const { return total_layers_; }
  const std::vector<LayerGroup>& groups() const { return groups_; }

  // Owning group and choice count of a global layer index.
  // Throws std::out_of_range("layer index out of bounds") when invalid.
  std::pair<std::string, int> layer_info(int layer) const;
  int num_choices(int layer) const;
  int group_index(int layer) const;

  // Least common multiple of all per-layer choice counts; the natural
  // gradient-accumulation window and per-cycle evaluation granularity.
  int64_t lcm_choices() const;

  // Exact |space| = product of per-layer choice counts.
  BigInt size() const;

  bool validate(const Architecture& arch) const;

  // Mixed-radix decode with layer 0 as the most significant digit, so index
  // order equals lexicographic order of choice vectors.
  Architecture architecture_at(uint64_t index) const;

  bool operator==(const SearchSpace&) const = default;

 private:
  std::vector<LayerGroup> groups_;
  std::vector<int> layer_to_group_;
  int total_layers_ = 0;
};

BigInt space_size(const SearchSpace& space);

// Lexicographic odometer over all architectures of a small space.
// Construction throws std::runtime_error("space too large to enumerate")
// when size exceeds the cap.
class ArchitectureEnumerator {
 public:
  explicit ArchitectureEnumerator(const SearchSpace& space,
                                  uint64_t cap = kDefaultEnumerationCap);

  // Writes the next architecture into `out`; returns false when exhausted.
  bool next(Architecture& out);

  uint64_t count() const { return count_; }

 private:
  const SearchSpace* space_;
  std::vector<int> current_;
  bool done_ = false;
  bool started_ = false;
  uint64_t count_ = 0;
};

std::vector<Architecture> enumerate_all(const SearchSpace& space,
                                        uint64_t cap = kDefaultEnumerationCap);

}  // namespace pathrank

#endif  // PATHRANK_SEARCHSPACE_HPP_
