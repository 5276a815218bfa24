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

#include "bipan/certifier.hpp"

#include <algorithm>

#include "bipan/conditions.hpp"

namespace bipan {

std::optional<Cycle> find_two_cycle(const BipartiteDigraph& g) {
  const int a = g.half_order();
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      if (g.xy(i, j) && g.yx(j, i)) return Cycle{{g.flat(xv(i)), g.flat(yv(j))}};
    }
  }
  return std::nullopt;
}

std::optional<Cycle> find_four_cycle(const BipartiteDigraph& g) {
  const int a = g.half_order();
  for (int i = 0; i < a; ++i) {
    for (int i2 = 0; i2 < a; ++i2) {
      if (i == i2) continue;
      // x_i -> y_j -> x_i2 and x_i2 -> y_j2 -> x_i with j != j2.
      for (int j = 0; j < a; ++j) {
        if (!g.xy(i, j) || !g.yx(j, i2)) continue;
        for (int j2 = 0; j2 < a; ++j2) {
          if (j2 != j && g.xy(i2, j2) && g.yx(j2, i)) {
            return Cycle{{g.flat(xv(i)), g.flat(yv(j)), g.flat(xv(i2)), g.flat(yv(j2))}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<CompleteBipartiteShape> detect_complete_bipartite_contraction(
    const ContractedDigraph& ds) {
  const Digraph& d = ds.base;
  const int n = d.order();
  if (n < 2 || n % 2 != 0) return std::nullopt;

  // Components of the non-adjacency relation.
  std::vector<int> component(n, -1);
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (component[start] != -1) continue;
    std::vector<int> stack{start};
    component[start] = count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (v != u && component[v] == -1 && !d.adjacent(u, v)) {
          component[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  if (count != 2) return std::nullopt;

  CompleteBipartiteShape shape;
  for (int v = 0; v < n; ++v) {
    (component[v] == 0 ? shape.parts.left : shape.parts.right).push_back(v);
  }
  const std::size_t half = static_cast<std::size_t>(n / 2);
  if (shape.parts.left.size() != half || shape.parts.right.size() != half) {
    return std::nullopt;
  }
  for (const Arc& arc : d.arcs()) {
    if (component[arc.tail] == component[arc.head]) return std::nullopt;
  }
  for (int l : shape.parts.left) {
    for (int r : shape.parts.right) {
      for (const Arc arc : {Arc{l, r}, Arc{r, l}}) {
        if (d.has_arc(arc.tail, arc.head)) continue;
        if (shape.missing_arc) return std::nullopt;
        shape.missing_arc = arc;
      }
    }
  }
  return shape;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kCertified:
      return "certified";
    case Status::kHypothesesNotMet:
      return "hypotheses-not-met";
    case Status::kGuaranteeViolated:
      return "guarantee-violated";
    case Status::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kDirectSearch:
      return "direct-search";
    case Provenance::kLiftedFromDstar:
      return "lifted-from-Dstar";
    case Provenance::kCompleteBipartiteLift:
      return "complete-bipartite-lift";
  }
  return "unknown";
}

std::vector<int> PancyclicityReport::missing_lengths() const {
  std::vector<int> missing;
  for (int length = 2; length <= 2 * half_order; length += 2) {
    if (!certificate.contains(length)) missing.push_back(length);
  }
  return missing;
}

namespace {

class Certifier {
 public:
  Certifier(const BipartiteDigraph& g, const CertifyOptions& options)
      : g_(g), options_(options) {
    report_.half_order = g.half_order();
  }

  PancyclicityReport run() {
    const int a = g_.half_order();
    report_.hypotheses = {.condition_A0 = check_condition_A(g_, 0).holds,
                          .strong = strongly_connected(g_),
                          .order_ok = a >= 3};
    if (!report_.hypotheses.all()) {
      fill_by_direct_search();
      report_.status = Status::kHypothesesNotMet;
      return std::move(report_);
    }

    if (auto c = find_two_cycle(g_)) emit(2, *c, Provenance::kDirectSearch);
    if (auto c = find_four_cycle(g_)) emit(4, *c, Provenance::kDirectSearch);

    // A perfect matching from Y to X always exists under the hypotheses;
    // without one everything falls through to direct search.
    if (auto best = max_size_perfect_matching(g_)) {
      const ContractedDigraph ds = contract(g_, best->matching);
      ContractionSummary summary{.matching = best->matching,
                                 .matching_size = best->size,
                                 .dstar_strong = strongly_connected(ds.base),
                                 .contracted_meyniel = check_contracted_meyniel(ds).holds,
                                 .complete_bipartite = false};
      if (summary.dstar_strong) {
        if (auto shape = detect_complete_bipartite_contraction(ds)) {
          summary.complete_bipartite = true;
          lift_through_bridges(ds, shape->parts);
        }
        lift_from_contraction(ds);
      }
      report_.contraction = std::move(summary);
    }

    fill_by_direct_search();
    if (report_.missing_lengths().empty()) {
      report_.status = Status::kCertified;
    } else {
      report_.status = budget_hit_ ? Status::kBudgetExhausted : Status::kGuaranteeViolated;
    }
    return std::move(report_);
  }

 private:
  bool has(int length) const { return report_.certificate.contains(length); }

  void emit(int length, Cycle cycle, Provenance provenance) {
    if (static_cast<int>(cycle.length()) != length || !is_valid_cycle(g_, cycle)) {
      throw std::logic_error("certifier produced an invalid cycle of length " +
                             std::to_string(length));
    }
    report_.certificate.emplace(length, CertifiedCycle{std::move(cycle), provenance});
  }

  // Lengths 4k + 2 when D* is complete bipartite (possibly minus one arc).
  void lift_through_bridges(const ContractedDigraph& ds, const Bipartition& parts) {
    const int half = ds.order() / 2;
    const Bipartition flipped{parts.right, parts.left};
    for (int k = 1; k <= half - 1; ++k) {
      const int length = 4 * k + 2;
      if (has(length)) continue;
      for (const Bipartition* side : {&parts, &flipped}) {
        if (has(length)) break;
        for (int p : side->left) {
          if (has(length)) break;
          for (int q : side->right) {
            if (!g_.yx(ds.y_of(p), ds.x_of(q))) continue;
            try {
              emit(length,
                   lift_complete_bipartite(ds, *side, {yv(ds.y_of(p)), xv(ds.x_of(q))}, k),
                   Provenance::kCompleteBipartiteLift);
              break;
            } catch (const LiftError&) {
              // Missing arc sits on this bridge's route; try the next bridge.
            }
          }
        }
      }
    }
  }

  void lift_from_contraction(const ContractedDigraph& ds) {
    for (int k = 2; k <= ds.order(); ++k) {
      if (has(2 * k)) continue;
      try {
        if (auto c = find_cycle_of_length(ds.base, k, options_.budget)) {
          emit(2 * k, lift_cycle(ds, *c), Provenance::kLiftedFromDstar);
        }
      } catch (const BudgetExceeded&) {
        // Left to the direct search on the host.
      }
    }
  }

  void fill_by_direct_search() {
    for (int length = 2; length <= g_.order(); length += 2) {
      if (has(length)) continue;
      try {
        if (auto c = find_cycle_of_length(g_, length, options_.budget)) {
          emit(length, std::move(*c), Provenance::kDirectSearch);
        }
      } catch (const BudgetExceeded&) {
        budget_hit_ = true;
      }
    }
  }

  const BipartiteDigraph& g_;
  const CertifyOptions& options_;
  PancyclicityReport report_;
  bool budget_hit_ = false;
};

}  // namespace

PancyclicityReport certify_even_pancyclic(const BipartiteDigraph& g,
                                          const CertifyOptions& options) {
  return Certifier(g, options).run();
}

}  // namespace bipan
