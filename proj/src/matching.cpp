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

#include "bipan/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "bipan/random.hpp"

namespace bipan {

bool is_perfect_matching(const BipartiteDigraph& g, const PerfectMatching& m) {
  const int a = g.half_order();
  if (m.size() != a) return false;
  std::vector<bool> used(a, false);
  for (int i = 0; i < a; ++i) {
    const int j = m.pair_of[i];
    if (j < 0 || j >= a || used[j] || !g.yx(j, i)) return false;
    used[j] = true;
  }
  return true;
}

namespace {

bool augment(const BipartiteDigraph& g, int x, const std::vector<int>& y_order,
             std::vector<int>& x_of_y, std::vector<bool>& visited) {
  for (int y : y_order) {
    if (!g.yx(y, x) || visited[y]) continue;
    visited[y] = true;
    if (x_of_y[y] == -1 || augment(g, x_of_y[y], y_order, x_of_y, visited)) {
      x_of_y[y] = x;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<PerfectMatching> find_perfect_matching_yx(
    const BipartiteDigraph& g, std::optional<std::uint64_t> shuffle_seed) {
  const int a = g.half_order();
  std::vector<int> x_order(a);
  std::vector<int> y_order(a);
  std::iota(x_order.begin(), x_order.end(), 0);
  std::iota(y_order.begin(), y_order.end(), 0);
  if (shuffle_seed) {
    Rng rng(*shuffle_seed);
    shuffle(x_order, rng);
    shuffle(y_order, rng);
  }

  std::vector<int> x_of_y(a, -1);
  for (int x : x_order) {
    std::vector<bool> visited(a, false);
    if (!augment(g, x, y_order, x_of_y, visited)) return std::nullopt;
  }
  PerfectMatching m{std::vector<int>(a, -1)};
  for (int y = 0; y < a; ++y) m.pair_of[x_of_y[y]] = y;
  return m;
}

int matching_size(const BipartiteDigraph& g, const PerfectMatching& m) {
  if (!is_perfect_matching(g, m)) {
    throw InvalidMatching("not a perfect matching from Y to X");
  }
  int size = 0;
  for (int i = 0; i < m.size(); ++i) {
    if (!g.xy(i, m.pair_of[i])) ++size;
  }
  return size;
}

namespace {

using CostMatrix = std::vector<std::vector<int>>;

struct Assignment {
  long long cost = 0;
  std::vector<int> col_of_row;
};

// Square min-cost assignment by successive shortest augmenting paths with
// vertex potentials (Hungarian method, O(n^3)).
Assignment min_cost_assignment(const CostMatrix& cost) {
  const int n = static_cast<int>(cost.size());
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(n + 1, 0);
  std::vector<long long> v(n + 1, 0);
  std::vector<int> row_of_col(n + 1, 0);
  std::vector<int> way(n + 1, 0);
  for (int row = 1; row <= n; ++row) {
    row_of_col[0] = row;
    int col0 = 0;
    std::vector<long long> min_v(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const int row0 = row_of_col[col0];
      long long delta = kInf;
      int col1 = 0;
      for (int col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const long long reduced = cost[row0 - 1][col - 1] - u[row0] - v[col];
        if (reduced < min_v[col]) {
          min_v[col] = reduced;
          way[col] = col0;
        }
        if (min_v[col] < delta) {
          delta = min_v[col];
          col1 = col;
        }
      }
      for (int col = 0; col <= n; ++col) {
        if (used[col]) {
          u[row_of_col[col]] += delta;
          v[col] -= delta;
        } else {
          min_v[col] -= delta;
        }
      }
      col0 = col1;
    } while (row_of_col[col0] != 0);
    do {
      const int col1 = way[col0];
      row_of_col[col0] = row_of_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  Assignment result;
  result.col_of_row.assign(n, -1);
  for (int col = 1; col <= n; ++col) {
    result.col_of_row[row_of_col[col] - 1] = col - 1;
  }
  for (int row = 0; row < n; ++row) {
    result.cost += cost[row][result.col_of_row[row]];
  }
  return result;
}

CostMatrix submatrix(const CostMatrix& cost, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  CostMatrix sub(rows.size(), std::vector<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      sub[r][c] = cost[rows[r]][cols[c]];
    }
  }
  return sub;
}

}  // namespace

std::optional<MaxSizeMatching> max_size_perfect_matching(const BipartiteDigraph& g) {
  const int a = g.half_order();
  // Any assignment through a forbidden cell costs more than every feasible one.
  const int forbidden = a + 1;
  CostMatrix cost(a, std::vector<int>(a, forbidden));
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      if (g.yx(j, i)) cost[i][j] = g.xy(i, j) ? 1 : 0;
    }
  }

  const long long optimum = min_cost_assignment(cost).cost;
  if (optimum >= forbidden) return std::nullopt;

  // Fix rows in order, each to the smallest column that keeps the optimum.
  PerfectMatching m{std::vector<int>(a, -1)};
  std::vector<bool> col_used(a, false);
  long long fixed_cost = 0;
  for (int i = 0; i < a; ++i) {
    std::vector<int> rows;
    for (int r = i + 1; r < a; ++r) rows.push_back(r);
    for (int j = 0; j < a; ++j) {
      if (col_used[j] || cost[i][j] >= forbidden) continue;
      std::vector<int> cols;
      for (int c = 0; c < a; ++c) {
        if (!col_used[c] && c != j) cols.push_back(c);
      }
      const long long rest =
          rows.empty() ? 0 : min_cost_assignment(submatrix(cost, rows, cols)).cost;
      if (fixed_cost + cost[i][j] + rest == optimum) {
        m.pair_of[i] = j;
        col_used[j] = true;
        fixed_cost += cost[i][j];
        break;
      }
    }
  }
  return MaxSizeMatching{std::move(m), a - static_cast<int>(optimum)};
}

}  // namespace bipan
