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

#ifndef BIPAN_CONDITIONS_HPP_
#define BIPAN_CONDITIONS_HPP_

#include <optional>

#include "bipan/contraction.hpp"
#include "bipan/graph.hpp"

namespace bipan {

/// Vertex pair that violates a degree condition. Vertices are flat ids of
/// the checked graph; `sum` is always d(u) + d(v).
struct Witness {
  int u = 0;
  int v = 0;
  int sum = 0;

  bool operator==(const Witness&) const = default;
};

/// Outcome of a degree-condition check. A witness is present iff the
/// condition fails; it is the minimizing pair, ties broken by vertex order.
struct ConditionReport {
  bool holds = true;
  int threshold = 0;
  std::optional<Witness> witness;
};

/// Condition A_k: d(x) + d(y) >= 3a + k for every pair of distinct vertices
/// on the same side.
ConditionReport check_condition_A(const BipartiteDigraph& g, int k);

/// d(x) + d(y) >= 2n - 1 for every pair of distinct non-adjacent vertices.
ConditionReport check_meyniel_nonadjacent(const Digraph& g);

/// The same Meyniel-type bound (2a - 1) evaluated on D*[M].
ConditionReport check_contracted_meyniel(const ContractedDigraph& ds);

/// max{d(x), d(y)} >= 2a - 1 for every pair of distinct vertices with a
/// common out-neighbor. The witness minimizes the larger degree.
ConditionReport check_dominating_pair_max_degree(const BipartiteDigraph& g);

}  // namespace bipan

#endif  // BIPAN_CONDITIONS_HPP_
