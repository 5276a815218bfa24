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

#include "bipan/search.hpp"

#include <unordered_set>
#include <vector>

namespace bipan {
namespace {

struct StateKey {
  std::uint64_t visited;
  int vertex;

  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& key) const {
    std::uint64_t h = key.visited * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(key.vertex) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

class LengthSearch {
 public:
  LengthSearch(const Digraph& g, int k, std::uint64_t budget)
      : g_(g), k_(k), budget_(budget), use_memo_(g.order() <= 64),
        on_path_(g.order(), false) {}

  std::optional<Cycle> run() {
    const int n = g_.order();
    for (int root = 0; root + k_ <= n; ++root) {
      root_ = root;
      path_.assign(1, root);
      on_path_[root] = true;
      visited_mask_ = bit(root);
      const bool found = extend(root);
      on_path_[root] = false;
      if (found) return Cycle{path_};
    }
    return std::nullopt;
  }

 private:
  static std::uint64_t bit(int v) { return v < 64 ? (std::uint64_t{1} << v) : 0; }

  bool extend(int v) {
    if (++expansions_ > budget_) throw BudgetExceeded(budget_, "cycle search");
    const int depth = static_cast<int>(path_.size());
    if (depth == k_) return g_.has_arc(v, root_);
    for (int w : g_.out_neighbors(v)) {
      if (w <= root_ || on_path_[w]) continue;
      const StateKey key{visited_mask_ | bit(w), w};
      if (use_memo_ && failed_.contains(key)) continue;
      path_.push_back(w);
      on_path_[w] = true;
      visited_mask_ |= bit(w);
      if (extend(w)) return true;
      visited_mask_ &= ~bit(w);
      on_path_[w] = false;
      path_.pop_back();
      if (use_memo_ && failed_.size() < kMemoCap) failed_.insert(key);
    }
    return false;
  }

  static constexpr std::size_t kMemoCap = std::size_t{1} << 22;

  const Digraph& g_;
  int k_;
  std::uint64_t budget_;
  bool use_memo_;
  std::uint64_t expansions_ = 0;
  int root_ = 0;
  std::vector<int> path_;
  std::vector<bool> on_path_;
  std::uint64_t visited_mask_ = 0;
  std::unordered_set<StateKey, StateKeyHash> failed_;
};

}  // namespace

std::optional<Cycle> find_cycle_of_length(const Digraph& g, int k, std::uint64_t budget) {
  if (k < 2 || k > g.order()) {
    throw std::invalid_argument("find_cycle_of_length: k outside [2, n]");
  }
  return LengthSearch(g, k, budget).run();
}

}  // namespace bipan
