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

#ifndef BIPAN_FAMILIES_HPP_
#define BIPAN_FAMILIES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bipan/graph.hpp"

namespace bipan {

/// K*_{a,a}: every cross arc in both directions.
BipartiteDigraph complete_bipartite(int a);

/// K*_{a,b} as a general digraph; vertices 0..a-1 form one side.
Digraph complete_bipartite_digraph(int a, int b);

Digraph complete_digraph(int n);

/// 0 -> 1 -> ... -> n-1 -> 0.
Digraph directed_cycle(int n);

/// The directed 2a-cycle x0 y0 x1 y1 ... x(a-1) y(a-1) x0.
BipartiteDigraph bipartite_cycle(int a);

/// The order-8 digraph D(8): strong, not Hamiltonian, and every pair with
/// a common out-neighbor has a member of degree >= 2a - 1.
BipartiteDigraph d8();

struct PhiInstance {
  Digraph graph;
  /// Every non-adjacent pair has degree sum >= 2n - 1.
  bool satisfies_v = false;
};

/// (n + 1)/2 < m <= n - 1.
bool phi_parameters_valid(int n, int m);

/// Arc-maximal digraph on x_1..x_n (vertex i - 1 is x_i) with the
/// Hamiltonian cycle x_n x_(n-1) ... x_1 x_n, no arcs between x_k and
/// x_(k+m-1), and no backward arcs x_j -> x_i other than j = i + 1.
/// Throws std::invalid_argument when phi_parameters_valid(n, m) is false.
PhiInstance phi_maximal(int n, int m);

/// Two copies of K*_{a/2,a/2} on (U, V) and (Z, W) plus all arcs Z -> V and
/// W -> U, with X = U + Z and Y = V + W (U and V take the low indices).
/// Same-side degree sums are exactly 3a, and the result is not strong.
/// Throws std::invalid_argument for odd or non-positive a.
BipartiteDigraph remark_family(int a);

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seeded random strong digraph satisfying condition A_k.
///
/// Each attempt samples every cross arc with a random density, then while
/// some same-side pair is below 3a + k adds 2-cycles at the two
/// lowest-degree vertices of that side; attempts that are not strong are
/// rejected. Deterministic in (a, k, seed). Throws GenerationError after
/// the retry limit, or std::invalid_argument for a < 1 or k outside [0, a].
BipartiteDigraph random_condition_A(int a, int k, std::uint64_t seed);

enum class GeneratorKind { kComplete, kD8, kPhi, kRemark, kRandom, kCycle };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kComplete;
  std::vector<int> parameters;
  std::uint64_t seed = 0;
};

/// Parses a kind name: complete, d8, phi, remark, random, cycle.
GeneratorKind parse_generator_kind(const std::string& name);

/// Dispatches on spec.kind; phi yields a Digraph, the rest bipartite
/// graphs. Throws std::invalid_argument on bad parameters.
AnyGraph generate(const GeneratorSpec& spec);

}  // namespace bipan

#endif  // BIPAN_FAMILIES_HPP_
