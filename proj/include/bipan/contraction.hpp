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

#ifndef BIPAN_CONTRACTION_HPP_
#define BIPAN_CONTRACTION_HPP_

#include <stdexcept>
#include <utility>
#include <vector>

#include "bipan/graph.hpp"
#include "bipan/matching.hpp"

namespace bipan {

/// D*[M]: vertex v_i stands for the matched pair (x_i, y_{pair_of[i]}), and
/// v_l -> v_j (l != j) iff x_l -> y_{pair_of[j]} in the host.
///
/// Indexing contracted vertices by their X endpoint plays the role of the
/// usual relabeling y_i x_i of matched pairs; back_map keeps the original
/// labels so lifted cycles need no translation.
struct ContractedDigraph {
  Digraph base;
  /// back_map[i] = {x index, y index} of the pair behind v_i.
  std::vector<std::pair<int, int>> back_map;
  BipartiteDigraph host;
  PerfectMatching matching;

  int order() const { return base.order(); }
  int x_of(int v) const { return back_map[v].first; }
  int y_of(int v) const { return back_map[v].second; }
};

/// Raised when a lift emits an arc missing from the host, or when its
/// structural preconditions do not hold.
class LiftError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws InvalidMatching if m is not a perfect matching of g.
ContractedDigraph contract(const BipartiteDigraph& g, const PerfectMatching& m);

/// d+(v_i) = d+(x_i) - a[x_i, y_i] and d-(v_i) = d-(y_i) - a[x_i, y_i] for
/// every i, with y_i the matched partner of x_i.
bool verify_degree_identity(const ContractedDigraph& ds);

/// Lifts v_{i1} ... v_{ik} to y_{i1} x_{i1} y_{i2} x_{i2} ... y_{ik} x_{ik},
/// a host cycle of length 2k. Throws std::invalid_argument if c is not a
/// cycle of ds.base and LiftError if a lifted arc is missing.
Cycle lift_cycle(const ContractedDigraph& ds, const Cycle& c);

/// Two halves of the contracted vertex set.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

/// Host cycle of length 4k + 2 for D* complete bipartite over `parts`
/// (at most one arc missing), given a host arc bridge = (y_p, x_q) with
/// v_p on the left and v_q on the right, and 1 <= k <= a/2 - 1.
///
/// The cycle threads k left and k right pairs alternately, then closes
/// through y_p -> x_q:
///   y(l1) x(l1) y(r1) x(r1) ... y(lk) x(lk) y(rk) x(rk) y(p) x(q).
/// Throws LiftError if a precondition fails or no ordering of the halves
/// avoids the missing arc.
Cycle lift_complete_bipartite(const ContractedDigraph& ds, const Bipartition& parts,
                              std::pair<Vertex, Vertex> bridge, int k);

}  // namespace bipan

#endif  // BIPAN_CONTRACTION_HPP_
