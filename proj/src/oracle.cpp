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

#include "bipan/oracle.hpp"

#include <bit>
#include <vector>

namespace bipan {
namespace {

// Memo tables are dense over subsets of the vertices above the root.
constexpr int kMaxMemoBits = 24;

class SpectrumSearch {
 public:
  SpectrumSearch(const Digraph& g, int max_len, std::uint64_t budget)
      : g_(g), n_(g.order()), max_len_(max_len), budget_(budget) {
    out_mask_.assign(n_, 0);
    for (int u = 0; u < n_; ++u) {
      for (int v : g.out_neighbors(u)) out_mask_[u] |= std::uint64_t{1} << v;
    }
    spectrum_.max_len_searched = max_len;
  }

  Spectrum run() {
    for (root_ = 0; root_ < n_ && !complete(); ++root_) {
      const int upper = n_ - 1 - root_;
      explored_.clear();
      if (upper <= kMaxMemoBits) explored_.assign(std::size_t{1} << upper, 0);
      path_.assign(1, root_);
      walk(root_, 0);
    }
    return std::move(spectrum_);
  }

 private:
  bool complete() const {
    return static_cast<int>(spectrum_.lengths.size()) == std::max(0, max_len_ - 1);
  }

  // `visited` holds the path's vertices above the root, bit i = root + 1 + i.
  void walk(int v, std::uint64_t visited) {
    if (++expansions_ > budget_) throw OracleBudgetExceeded(budget_, spectrum_);
    const int length = static_cast<int>(path_.size());
    if (length >= 2 && ((out_mask_[v] >> root_) & 1) != 0 &&
        spectrum_.lengths.insert(length).second) {
      spectrum_.witnesses.emplace(length, Cycle{path_});
    }
    if (length >= max_len_ || complete()) return;

    std::uint64_t next = root_ + 1 < 64 ? out_mask_[v] >> (root_ + 1) : 0;
    next &= ~visited;
    while (next != 0) {
      const int i = std::countr_zero(next);
      next &= next - 1;
      const std::uint64_t state = visited | (std::uint64_t{1} << i);
      if (!explored_.empty()) {
        std::uint32_t& seen = explored_[state];
        if (seen & (std::uint32_t{1} << i)) continue;
        seen |= std::uint32_t{1} << i;
      }
      path_.push_back(root_ + 1 + i);
      walk(root_ + 1 + i, state);
      path_.pop_back();
    }
  }

  const Digraph& g_;
  int n_;
  int max_len_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  int root_ = 0;
  std::vector<std::uint64_t> out_mask_;
  std::vector<std::uint32_t> explored_;
  std::vector<int> path_;
  Spectrum spectrum_;
};

bool hamiltonian_by_subsets(const Digraph& g) {
  // reach[S] = endpoints v such that some path from vertex 0 covers exactly
  // {0} + S and ends at v (bit i of S and of reach stands for vertex i + 1).
  const int n = g.order();
  const int m = n - 1;
  std::vector<std::uint32_t> reach(std::size_t{1} << m, 0);
  for (int v : g.out_neighbors(0)) reach[std::size_t{1} << (v - 1)] |= 1u << (v - 1);
  const std::size_t full = (std::size_t{1} << m) - 1;
  for (std::size_t set = 1; set <= full; ++set) {
    std::uint32_t ends = reach[set];
    while (ends != 0) {
      const int i = std::countr_zero(ends);
      ends &= ends - 1;
      for (int w : g.out_neighbors(i + 1)) {
        if (w == 0 || (set >> (w - 1)) & 1) continue;
        reach[set | (std::size_t{1} << (w - 1))] |= 1u << (w - 1);
      }
    }
  }
  std::uint32_t ends = reach[full];
  while (ends != 0) {
    const int i = std::countr_zero(ends);
    ends &= ends - 1;
    if (g.has_arc(i + 1, 0)) return true;
  }
  return false;
}

bool hamiltonian_by_dfs(const Digraph& g, int v, std::vector<bool>& on_path, int depth,
                        std::uint64_t& expansions, std::uint64_t budget) {
  if (++expansions > budget) throw BudgetExceeded(budget, "is_hamiltonian");
  if (depth == g.order()) return g.has_arc(v, 0);
  for (int w : g.out_neighbors(v)) {
    if (on_path[w]) continue;
    on_path[w] = true;
    if (hamiltonian_by_dfs(g, w, on_path, depth + 1, expansions, budget)) return true;
    on_path[w] = false;
  }
  return false;
}

}  // namespace

Spectrum cycle_length_spectrum(const Digraph& g, int max_len, std::uint64_t budget) {
  if (g.order() > 64) throw std::invalid_argument("oracle supports n <= 64");
  if (max_len > g.order()) throw std::invalid_argument("max_len exceeds order");
  return SpectrumSearch(g, max_len, budget).run();
}

bool is_hamiltonian(const Digraph& g, std::uint64_t budget) {
  const int n = g.order();
  if (n < 2) return false;
  if (n <= kMaxMemoBits + 1) return hamiltonian_by_subsets(g);
  std::vector<bool> on_path(n, false);
  on_path[0] = true;
  std::uint64_t expansions = 0;
  return hamiltonian_by_dfs(g, 0, on_path, 1, expansions, budget);
}

bool validate_certificate(const BipartiteDigraph& g, const PancyclicityReport& report) {
  const Digraph& d = g.as_digraph();
  const int n = d.order();
  for (const auto& [length, entry] : report.certificate) {
    const auto& vs = entry.cycle.vertices;
    if (length < 2 || length > n || length % 2 != 0) return false;
    if (static_cast<int>(vs.size()) != length) return false;
    std::vector<bool> seen(n, false);
    for (int v : vs) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = true;
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (arc_indicator(d, vs[i], vs[(i + 1) % vs.size()]) != 1) return false;
    }
  }
  if (report.status == Status::kCertified) {
    for (int length = 2; length <= n; length += 2) {
      if (!report.certificate.contains(length)) return false;
    }
  }
  return true;
}

}  // namespace bipan
