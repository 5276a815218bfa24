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

#include "bipan/conditions.hpp"

#include <algorithm>

namespace bipan {

ConditionReport check_condition_A(const BipartiteDigraph& g, int k) {
  const int a = g.half_order();
  const Digraph& d = g.as_digraph();
  ConditionReport report{.holds = true, .threshold = 3 * a + k, .witness = {}};
  // Flat ids order X pairs before Y pairs, each lexicographically.
  for (int side = 0; side < 2; ++side) {
    const int base = side * a;
    for (int i = 0; i < a; ++i) {
      for (int j = i + 1; j < a; ++j) {
        const int sum = degree(d, base + i) + degree(d, base + j);
        if (sum >= report.threshold) continue;
        if (!report.witness || sum < report.witness->sum) {
          report.witness = Witness{base + i, base + j, sum};
        }
      }
    }
  }
  report.holds = !report.witness.has_value();
  return report;
}

ConditionReport check_meyniel_nonadjacent(const Digraph& g) {
  const int n = g.order();
  ConditionReport report{.holds = true, .threshold = 2 * n - 1, .witness = {}};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      const int sum = degree(g, u) + degree(g, v);
      if (sum >= report.threshold) continue;
      if (!report.witness || sum < report.witness->sum) {
        report.witness = Witness{u, v, sum};
      }
    }
  }
  report.holds = !report.witness.has_value();
  return report;
}

ConditionReport check_contracted_meyniel(const ContractedDigraph& ds) {
  return check_meyniel_nonadjacent(ds.base);
}

ConditionReport check_dominating_pair_max_degree(const BipartiteDigraph& g) {
  const Digraph& d = g.as_digraph();
  const int n = d.order();
  ConditionReport report{
      .holds = true, .threshold = 2 * g.half_order() - 1, .witness = {}};
  int best_max = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int du = degree(d, u);
      const int dv = degree(d, v);
      const int larger = std::max(du, dv);
      if (larger >= report.threshold) continue;
      if (report.witness && larger >= best_max) continue;
      auto out_u = d.out_neighbors(u);
      const bool common = std::any_of(out_u.begin(), out_u.end(),
                                      [&](int w) { return d.has_arc(v, w); });
      if (!common) continue;
      report.witness = Witness{u, v, du + dv};
      best_max = larger;
    }
  }
  report.holds = !report.witness.has_value();
  return report;
}

}  // namespace bipan
