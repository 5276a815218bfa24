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

#ifndef BIPAN_ORACLE_HPP_
#define BIPAN_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <set>

#include "bipan/certifier.hpp"
#include "bipan/graph.hpp"
#include "bipan/search.hpp"

// Brute-force ground truth. Nothing here calls into the certifier's
// search, matching or lifting code.

namespace bipan {

/// Cycle lengths present in a graph, each with one witness.
struct Spectrum {
  std::set<int> lengths;
  int max_len_searched = 0;
  std::map<int, Cycle> witnesses;
};

/// Budget exhaustion with whatever was established before it.
class OracleBudgetExceeded : public BudgetExceeded {
 public:
  OracleBudgetExceeded(std::uint64_t budget, Spectrum partial)
      : BudgetExceeded(budget, "oracle"), partial_(std::move(partial)) {}
  const Spectrum& partial() const { return partial_; }

 private:
  Spectrum partial_;
};

/// Exact set of L in [2, max_len] such that g has a cycle of length L.
///
/// Exhaustive DFS from each root r over vertices > r. A per-root memo of
/// explored (vertex, visited-set) states skips revisits, which is exact
/// because the lengths closable from a state depend only on that state.
/// Requires n <= 64 and max_len <= n (std::invalid_argument otherwise).
Spectrum cycle_length_spectrum(const Digraph& g, int max_len,
                               std::uint64_t budget = kDefaultBudget);
inline Spectrum cycle_length_spectrum(const BipartiteDigraph& g, int max_len,
                                      std::uint64_t budget = kDefaultBudget) {
  return cycle_length_spectrum(g.as_digraph(), max_len, budget);
}

/// Exact Hamiltonicity: subset dynamic programming for n <= 25, plain DFS
/// under the budget beyond that.
bool is_hamiltonian(const Digraph& g, std::uint64_t budget = kDefaultBudget);
inline bool is_hamiltonian(const BipartiteDigraph& g,
                           std::uint64_t budget = kDefaultBudget) {
  return is_hamiltonian(g.as_digraph(), budget);
}

/// Re-checks every certificate cycle with arc_indicator alone: claimed
/// length, distinct in-range vertices, every arc present. A report marked
/// certified must also cover every even length 2..2a.
bool validate_certificate(const BipartiteDigraph& g, const PancyclicityReport& report);

}  // namespace bipan

#endif  // BIPAN_ORACLE_HPP_
