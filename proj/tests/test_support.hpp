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

// Independent reference implementations and random instance builders used
// by the unit and acceptance suites. Nothing here calls library search,
// matching or lifting code.

#ifndef BIPAN_TESTS_TEST_SUPPORT_HPP_
#define BIPAN_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "bipan/graph.hpp"
#include "bipan/matching.hpp"
#include "bipan/random.hpp"

namespace bipan::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(BIPAN_FIXTURE_DIR) + "/" + name;
}

inline BipartiteDigraph random_bipartite(int a, double density, Rng& rng) {
  std::vector<Arc> arcs;
  for (int u = 0; u < 2 * a; ++u) {
    for (int v = 0; v < 2 * a; ++v) {
      if ((u < a) != (v < a) && rng.bernoulli(density)) arcs.push_back({u, v});
    }
  }
  return BipartiteDigraph(a, Digraph(2 * a, arcs));
}

inline Digraph random_digraph(int n, double density, Rng& rng) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && rng.bernoulli(density)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, arcs);
}

/// Random bipartite digraph containing the Y -> X matching `planted`.
inline BipartiteDigraph random_with_matching(int a, double density, Rng& rng,
                                             PerfectMatching& planted) {
  planted.pair_of.resize(a);
  std::iota(planted.pair_of.begin(), planted.pair_of.end(), 0);
  shuffle(planted.pair_of, rng);
  std::vector<Arc> arcs;
  for (int u = 0; u < 2 * a; ++u) {
    for (int v = 0; v < 2 * a; ++v) {
      if ((u < a) == (v < a)) continue;
      const bool matched = u >= a && planted.pair_of[v] == u - a;
      if (matched || rng.bernoulli(density)) arcs.push_back({u, v});
    }
  }
  return BipartiteDigraph(a, Digraph(2 * a, arcs));
}

/// Every perfect Y -> X matching by backtracking; returns the best size.
inline std::optional<int> brute_force_max_matching_size(const BipartiteDigraph& g) {
  const int a = g.half_order();
  std::vector<int> perm(a);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<int> best;
  do {
    bool ok = true;
    int size = 0;
    for (int i = 0; i < a && ok; ++i) {
      ok = g.yx(perm[i], i);
      if (ok && !g.xy(i, perm[i])) ++size;
    }
    if (ok && (!best || size > *best)) best = size;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Naive permutation walk: every vertex subset of size L whose minimum is
/// the start, every ordering of the rest, checked arc by arc.
inline bool naive_has_cycle(const Digraph& g, int length) {
  const int n = g.order();
  if (length < 2 || length > n) return false;
  std::vector<int> chosen;
  bool found = false;
  auto walk_orderings = [&](std::vector<int> rest, int start) {
    std::sort(rest.begin(), rest.end());
    do {
      int prev = start;
      bool ok = true;
      for (int v : rest) {
        if (!g.has_arc(prev, v)) {
          ok = false;
          break;
        }
        prev = v;
      }
      if (ok && g.has_arc(prev, start)) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
  };
  for (int start = 0; start < n && !found; ++start) {
    // Choose length - 1 vertices from (start, n).
    std::vector<bool> mask(n - start - 1, false);
    if (static_cast<int>(mask.size()) < length - 1) break;
    std::fill(mask.begin(), mask.begin() + (length - 1), true);
    do {
      std::vector<int> rest;
      for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) rest.push_back(start + 1 + static_cast<int>(i));
      }
      if (walk_orderings(rest, start)) {
        found = true;
        break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return found;
}

/// Strong connectivity by a BFS from every vertex.
inline bool reachability_strong(const Digraph& g) {
  const int n = g.order();
  if (n == 0) return false;
  for (int s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::queue<int> queue;
    queue.push(s);
    seen[s] = true;
    int count = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v = 0; v < n; ++v) {
        if (!seen[v] && g.has_arc(u, v)) {
          seen[v] = true;
          ++count;
          queue.push(v);
        }
      }
    }
    if (count != n) return false;
  }
  return true;
}

}  // namespace bipan::testing

#endif  // BIPAN_TESTS_TEST_SUPPORT_HPP_
