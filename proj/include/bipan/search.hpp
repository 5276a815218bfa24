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

#ifndef BIPAN_SEARCH_HPP_
#define BIPAN_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "bipan/graph.hpp"

namespace bipan {

/// Node-expansion cap shared by the exact searches.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// An exact search ran out of node expansions before reaching a verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget, const std::string& what = "search")
      : std::runtime_error(what + ": node budget of " + std::to_string(budget) +
                           " expansions exhausted"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

/// Some cycle with exactly k vertices, or nullopt if g has none.
///
/// Depth-bounded DFS rooted at the cycle's minimum vertex (only larger
/// vertices are entered), with a memo of failed (vertex, visited-set)
/// states. Requires 2 <= k <= n (std::invalid_argument otherwise); throws
/// BudgetExceeded after `budget` expansions.
std::optional<Cycle> find_cycle_of_length(const Digraph& g, int k,
                                          std::uint64_t budget = kDefaultBudget);

inline std::optional<Cycle> find_cycle_of_length(const BipartiteDigraph& g, int k,
                                                 std::uint64_t budget = kDefaultBudget) {
  return find_cycle_of_length(g.as_digraph(), k, budget);
}

}  // namespace bipan

#endif  // BIPAN_SEARCH_HPP_
