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

#include "bipan/contraction.hpp"

#include <algorithm>

namespace bipan {

ContractedDigraph contract(const BipartiteDigraph& g, const PerfectMatching& m) {
  if (!is_perfect_matching(g, m)) {
    throw InvalidMatching("contract: not a perfect matching from Y to X");
  }
  const int a = g.half_order();
  std::vector<Arc> arcs;
  for (int l = 0; l < a; ++l) {
    for (int j = 0; j < a; ++j) {
      if (l != j && g.xy(l, m.pair_of[j])) arcs.push_back({l, j});
    }
  }
  ContractedDigraph ds{Digraph(a, arcs), {}, g, m};
  ds.back_map.reserve(a);
  for (int i = 0; i < a; ++i) ds.back_map.emplace_back(i, m.pair_of[i]);
  return ds;
}

bool verify_degree_identity(const ContractedDigraph& ds) {
  const BipartiteDigraph& g = ds.host;
  if (ds.order() != g.half_order()) return false;
  for (int i = 0; i < ds.order(); ++i) {
    const Vertex x = xv(ds.x_of(i));
    const Vertex y = yv(ds.y_of(i));
    const int reverse = arc_indicator(g, x, y);
    if (out_degree(ds.base, i) != out_degree(g, x) - reverse) return false;
    if (in_degree(ds.base, i) != in_degree(g, y) - reverse) return false;
  }
  return true;
}

Cycle lift_cycle(const ContractedDigraph& ds, const Cycle& c) {
  if (!is_valid_cycle(ds.base, c)) {
    throw std::invalid_argument("lift_cycle: not a cycle of D*");
  }
  const BipartiteDigraph& g = ds.host;
  Cycle lifted;
  lifted.vertices.reserve(2 * c.length());
  for (int v : c.vertices) {
    lifted.vertices.push_back(g.flat(yv(ds.y_of(v))));
    lifted.vertices.push_back(g.flat(xv(ds.x_of(v))));
  }
  if (!is_valid_cycle(g, lifted)) {
    throw LiftError("lift_cycle: lifted arc missing from host");
  }
  return lifted;
}

namespace {

int index_of_x(const ContractedDigraph& ds, int x) {
  for (int v = 0; v < ds.order(); ++v) {
    if (ds.x_of(v) == x) return v;
  }
  return -1;
}

int index_of_y(const ContractedDigraph& ds, int y) {
  for (int v = 0; v < ds.order(); ++v) {
    if (ds.y_of(v) == y) return v;
  }
  return -1;
}

void require_complete_bipartite(const Digraph& d, const Bipartition& parts) {
  auto inside = [&](const std::vector<int>& side) {
    for (int u : side) {
      for (int v : side) {
        if (u != v && d.has_arc(u, v)) return true;
      }
    }
    return false;
  };
  if (inside(parts.left) || inside(parts.right)) {
    throw LiftError("lift_complete_bipartite: arc inside a half");
  }
  int missing = 0;
  for (int l : parts.left) {
    for (int r : parts.right) {
      missing += d.has_arc(l, r) ? 0 : 1;
      missing += d.has_arc(r, l) ? 0 : 1;
    }
  }
  if (missing > 1) {
    throw LiftError("lift_complete_bipartite: D* is not complete bipartite");
  }
}

}  // namespace

Cycle lift_complete_bipartite(const ContractedDigraph& ds, const Bipartition& parts,
                              std::pair<Vertex, Vertex> bridge, int k) {
  const int a = ds.order();
  const int half = a / 2;
  if (a % 2 != 0 || a < 4) {
    throw LiftError("lift_complete_bipartite: order must be even and >= 4");
  }
  if (static_cast<int>(parts.left.size()) != half ||
      static_cast<int>(parts.right.size()) != half) {
    throw LiftError("lift_complete_bipartite: halves must have size a/2");
  }
  if (k < 1 || k > half - 1) {
    throw LiftError("lift_complete_bipartite: k outside [1, a/2 - 1]");
  }
  const BipartiteDigraph& g = ds.host;
  const auto [bridge_tail, bridge_head] = bridge;
  if (bridge_tail.side != Side::Y || bridge_head.side != Side::X ||
      !g.has_arc(bridge_tail, bridge_head)) {
    throw LiftError("lift_complete_bipartite: bridge arc absent");
  }
  const int p = index_of_y(ds, bridge_tail.index);
  const int q = index_of_x(ds, bridge_head.index);
  auto contains = [](const std::vector<int>& side, int v) {
    return std::find(side.begin(), side.end(), v) != side.end();
  };
  if (!contains(parts.left, p) || !contains(parts.right, q)) {
    throw LiftError("lift_complete_bipartite: bridge must run from left to right");
  }
  require_complete_bipartite(ds.base, parts);

  std::vector<int> lefts;
  std::vector<int> rights;
  for (int v : parts.left) {
    if (v != p) lefts.push_back(v);
  }
  for (int v : parts.right) {
    if (v != q) rights.push_back(v);
  }
  std::sort(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());

  const Digraph& d = ds.base;
  auto usable = [&] {
    for (int i = 0; i < k; ++i) {
      if (!d.has_arc(lefts[i], rights[i])) return false;
      const int next_left = i + 1 < k ? lefts[i + 1] : p;
      if (!d.has_arc(rights[i], next_left)) return false;
    }
    return d.has_arc(q, lefts[0]);
  };

  // With at most one missing arc some ordering works unless a is tiny.
  bool found = false;
  do {
    do {
      if (usable()) {
        found = true;
        break;
      }
    } while (std::next_permutation(rights.begin(), rights.end()));
  } while (!found && std::next_permutation(lefts.begin(), lefts.end()));
  if (!found) {
    throw LiftError("lift_complete_bipartite: missing arc blocks every ordering");
  }

  Cycle cycle;
  auto push_pair = [&](int v) {
    cycle.vertices.push_back(g.flat(yv(ds.y_of(v))));
    cycle.vertices.push_back(g.flat(xv(ds.x_of(v))));
  };
  for (int i = 0; i < k; ++i) {
    push_pair(lefts[i]);
    push_pair(rights[i]);
  }
  cycle.vertices.push_back(g.flat(bridge_tail));
  cycle.vertices.push_back(g.flat(bridge_head));
  if (!is_valid_cycle(g, cycle)) {
    throw LiftError("lift_complete_bipartite: lifted arc missing from host");
  }
  return cycle;
}

}  // namespace bipan
