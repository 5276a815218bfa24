// Copyright 2026 The bipan Authors
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

#ifndef BIPAN_MATCHING_HPP_
#define BIPAN_MATCHING_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bipan/graph.hpp"

namespace bipan {

/// Perfect matching from Y to X: for every i, the arc y_{pair_of[i]} -> x_i.
struct PerfectMatching {
  std::vector<int> pair_of;

  int size() const { return static_cast<int>(pair_of.size()); }
  bool operator==(const PerfectMatching&) const = default;
};

class InvalidMatching : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// True iff `m` is a bijection over [0, a) whose arcs all exist in g.
bool is_perfect_matching(const BipartiteDigraph& g, const PerfectMatching& m);

/// Augmenting-path (Kuhn) matching over the Y -> X arcs. With a seed, the
/// X and Y scan orders are shuffled, which yields a different matching on
/// graphs with several.
std::optional<PerfectMatching> find_perfect_matching_yx(
    const BipartiteDigraph& g, std::optional<std::uint64_t> shuffle_seed = {});

/// Number of matched pairs i with x_i -> y_{pair_of[i]} absent. Throws
/// InvalidMatching if m is not a perfect matching of g.
int matching_size(const BipartiteDigraph& g, const PerfectMatching& m);

struct MaxSizeMatching {
  PerfectMatching matching;
  int size = 0;
};

/// Perfect matching maximizing matching_size, or nullopt if g has no
/// perfect matching from Y to X.
///
/// Solved as a min-cost assignment where cell (i, j) is admissible iff
/// y_j -> x_i and costs 1 when x_i -> y_j is also present, 0 otherwise.
/// Among optimal matchings the lexicographically smallest pair_of wins.
std::optional<MaxSizeMatching> max_size_perfect_matching(const BipartiteDigraph& g);

}  // namespace bipan

#endif  // BIPAN_MATCHING_HPP_
