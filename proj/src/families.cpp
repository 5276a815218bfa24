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

#include "bipan/families.hpp"

#include <algorithm>
#include <numeric>

#include "bipan/conditions.hpp"
#include "bipan/random.hpp"

namespace bipan {

BipartiteDigraph complete_bipartite(int a) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      arcs.emplace_back(xv(i), yv(j));
      arcs.emplace_back(yv(j), xv(i));
    }
  }
  return BipartiteDigraph(a, arcs);
}

Digraph complete_bipartite_digraph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
  std::vector<Arc> arcs;
  for (int i = 0; i < a; ++i) {
    for (int j = a; j < a + b; ++j) {
      arcs.push_back({i, j});
      arcs.push_back({j, i});
    }
  }
  return Digraph(a + b, arcs);
}

Digraph complete_digraph(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph(n, arcs);
}

Digraph directed_cycle(int n) {
  if (n < 2) throw std::invalid_argument("directed_cycle: n must be >= 2");
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return Digraph(n, arcs);
}

BipartiteDigraph bipartite_cycle(int a) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (int i = 0; i < a; ++i) {
    arcs.emplace_back(xv(i), yv(i));
    arcs.emplace_back(yv(i), xv((i + 1) % a));
  }
  return BipartiteDigraph(a, arcs);
}

BipartiteDigraph d8() {
  std::vector<std::pair<Vertex, Vertex>> arcs = {
      {yv(0), xv(1)}, {yv(1), xv(0)}, {xv(2), yv(3)}, {xv(3), yv(2)}};
  auto two_cycle = [&](Vertex u, Vertex v) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  };
  for (int i = 0; i < 4; ++i) two_cycle(xv(i), yv(i));
  two_cycle(yv(0), xv(2));
  two_cycle(yv(0), xv(3));
  two_cycle(yv(1), xv(2));
  two_cycle(yv(1), xv(3));
  return BipartiteDigraph(4, arcs);
}

bool phi_parameters_valid(int n, int m) { return 2 * m > n + 1 && m <= n - 1; }

PhiInstance phi_maximal(int n, int m) {
  if (!phi_parameters_valid(n, m)) {
    throw std::invalid_argument("phi_maximal: need (n+1)/2 < m <= n-1");
  }
  // 0-based: vertex i is x_(i+1); forbidden pairs are (k, k + m - 1).
  auto forbidden = [&](int i, int j) {
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    return hi - lo == m - 1 && lo <= n - m;
  };
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || forbidden(i, j)) continue;
      if (i < j || i == j + 1) arcs.push_back({i, j});
    }
  }
  PhiInstance result{Digraph(n, arcs), false};
  result.satisfies_v = check_meyniel_nonadjacent(result.graph).holds;
  return result;
}

BipartiteDigraph remark_family(int a) {
  if (a < 2 || a % 2 != 0) throw std::invalid_argument("remark_family: a must be even and >= 2");
  const int half = a / 2;
  std::vector<std::pair<Vertex, Vertex>> arcs;
  // U = x[0, half), Z = x[half, a), V = y[0, half), W = y[half, a).
  for (int i = 0; i < half; ++i) {
    for (int j = 0; j < half; ++j) {
      arcs.emplace_back(xv(i), yv(j));
      arcs.emplace_back(yv(j), xv(i));
      arcs.emplace_back(xv(half + i), yv(half + j));
      arcs.emplace_back(yv(half + j), xv(half + i));
      arcs.emplace_back(xv(half + i), yv(j));  // Z -> V
      arcs.emplace_back(yv(half + j), xv(i));  // W -> U
    }
  }
  return BipartiteDigraph(a, arcs);
}

namespace {

constexpr int kMaxAttempts = 1000;

// Adds a 2-cycle between flat vertex u and a random opposite vertex it is
// not yet 2-cycled with. Returns false if u is already saturated.
bool add_two_cycle(std::vector<std::vector<bool>>& adj, int a, int u, Rng& rng) {
  const int base = u < a ? a : 0;
  std::vector<int> options;
  for (int w = base; w < base + a; ++w) {
    if (!adj[u][w] || !adj[w][u]) options.push_back(w);
  }
  if (options.empty()) return false;
  const int w = options[rng.below(options.size())];
  adj[u][w] = true;
  adj[w][u] = true;
  return true;
}

int local_degree(const std::vector<std::vector<bool>>& adj, int v) {
  int d = 0;
  for (std::size_t w = 0; w < adj.size(); ++w) d += adj[v][w] + adj[w][v];
  return d;
}

}  // namespace

BipartiteDigraph random_condition_A(int a, int k, std::uint64_t seed) {
  if (a < 1) throw std::invalid_argument("random_condition_A: a must be >= 1");
  if (k < 0 || k > a) throw std::invalid_argument("random_condition_A: k outside [0, a]");
  Rng rng(seed);
  const int n = 2 * a;
  const int threshold = 3 * a + k;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double density = 0.3 + 0.6 * rng.unit();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if ((u < a) != (v < a)) adj[u][v] = rng.bernoulli(density);
      }
    }

    for (bool repaired = true; repaired;) {
      repaired = false;
      for (int side = 0; side < 2 && a >= 2; ++side) {
        std::vector<int> order(a);
        std::iota(order.begin(), order.end(), side * a);
        std::vector<int> deg(n);
        for (int v : order) deg[v] = local_degree(adj, v);
        std::stable_sort(order.begin(), order.end(),
                         [&](int u, int v) { return deg[u] < deg[v]; });
        if (deg[order[0]] + deg[order[1]] >= threshold) continue;
        const bool first = add_two_cycle(adj, a, order[0], rng);
        const bool second = add_two_cycle(adj, a, order[1], rng);
        if (!first && !second) throw GenerationError("random_condition_A: cannot repair");
        repaired = true;
      }
    }

    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (adj[u][v]) arcs.push_back({u, v});
      }
    }
    BipartiteDigraph g(a, Digraph(n, arcs));
    if (strongly_connected(g) && check_condition_A(g, k).holds) return g;
  }
  throw GenerationError("random_condition_A: no strong instance after retries");
}

GeneratorKind parse_generator_kind(const std::string& name) {
  if (name == "complete") return GeneratorKind::kComplete;
  if (name == "d8") return GeneratorKind::kD8;
  if (name == "phi") return GeneratorKind::kPhi;
  if (name == "remark") return GeneratorKind::kRemark;
  if (name == "random") return GeneratorKind::kRandom;
  if (name == "cycle") return GeneratorKind::kCycle;
  throw std::invalid_argument("unknown generator kind '" + name + "'");
}

AnyGraph generate(const GeneratorSpec& spec) {
  const auto& p = spec.parameters;
  auto need = [&](std::size_t count, const char* usage) {
    if (p.size() != count) throw std::invalid_argument(std::string("expected ") + usage);
  };
  switch (spec.kind) {
    case GeneratorKind::kComplete:
      need(1, "complete <a>");
      if (p[0] < 1) throw std::invalid_argument("complete: a must be >= 1");
      return complete_bipartite(p[0]);
    case GeneratorKind::kD8:
      need(0, "d8 (no parameters)");
      return d8();
    case GeneratorKind::kPhi:
      need(2, "phi <n> <m>");
      return phi_maximal(p[0], p[1]).graph;
    case GeneratorKind::kRemark:
      need(1, "remark <a>");
      return remark_family(p[0]);
    case GeneratorKind::kRandom:
      need(2, "random <a> <k>");
      return random_condition_A(p[0], p[1], spec.seed);
    case GeneratorKind::kCycle:
      need(1, "cycle <a>");
      if (p[0] < 1) throw std::invalid_argument("cycle: a must be >= 1");
      return bipartite_cycle(p[0]);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace bipan
