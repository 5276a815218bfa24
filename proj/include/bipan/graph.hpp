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

#ifndef BIPAN_GRAPH_HPP_
#define BIPAN_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bipan {

/// Directed arc tail -> head between integer-addressed vertices.
struct Arc {
  int tail = 0;
  int head = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Simple digraph on vertices 0..n-1: no loops, no parallel arcs.
///
/// Adjacency is kept both as a dense n*n indicator (constant-time arc
/// queries) and as sorted out-/in-neighbor lists. Immutable after
/// construction.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  /// Throws std::invalid_argument on a loop, a duplicate arc, or an
  /// endpoint outside [0, n).
  Digraph(int n, std::span<const Arc> arcs);

  int order() const { return n_; }
  std::size_t arc_count() const { return arc_count_; }

  bool has_arc(int tail, int head) const {
    return adjacency_[static_cast<std::size_t>(tail) * n_ + head] != 0;
  }
  bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

  std::span<const int> out_neighbors(int v) const { return out_[v]; }
  std::span<const int> in_neighbors(int v) const { return in_[v]; }

  /// All arcs in (tail, head) lexicographic order.
  std::vector<Arc> arcs() const;

  /// Copies with one arc added or removed; used by generators and mutation tests.
  Digraph with_arc(int tail, int head) const;
  Digraph without_arc(int tail, int head) const;

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && adjacency_ == other.adjacency_;
  }

 private:
  int n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

enum class Side : std::uint8_t { X, Y };

/// Vertex of a balanced bipartite digraph, addressed as x<i> or y<i>.
struct Vertex {
  Side side = Side::X;
  int index = 0;

  auto operator<=>(const Vertex&) const = default;
};

inline Vertex xv(int i) { return {Side::X, i}; }
inline Vertex yv(int i) { return {Side::Y, i}; }

std::string to_token(Vertex v);

/// Balanced bipartite digraph with partite sets X = {x0..x(a-1)} and
/// Y = {y0..y(a-1)}.
///
/// Internally a Digraph of order 2a where x_i is vertex i and y_j is vertex
/// a + j ("flat" numbering). Cycles over a bipartite host use flat ids.
class BipartiteDigraph {
 public:
  BipartiteDigraph() = default;

  /// Throws std::invalid_argument on a same-side arc, a loop, a duplicate,
  /// or an index outside [0, a).
  BipartiteDigraph(int a, std::span<const std::pair<Vertex, Vertex>> arcs);

  /// Wraps a flat digraph of order 2a; rejects same-side arcs.
  BipartiteDigraph(int a, Digraph flat);

  int half_order() const { return a_; }
  int order() const { return 2 * a_; }
  std::size_t arc_count() const { return flat_.arc_count(); }

  const Digraph& as_digraph() const { return flat_; }

  int flat(Vertex v) const;
  Vertex vertex(int flat_id) const;

  bool has_arc(Vertex tail, Vertex head) const {
    return flat_.has_arc(flat(tail), flat(head));
  }
  /// Shorthands for the two cross directions.
  bool xy(int i, int j) const { return flat_.has_arc(i, a_ + j); }
  bool yx(int j, int i) const { return flat_.has_arc(a_ + j, i); }

  bool operator==(const BipartiteDigraph& other) const = default;

 private:
  int a_ = 0;
  Digraph flat_;
};

/// Cycle given as a vertex sequence v0 v1 ... v(m-1); the closing arc
/// v(m-1) -> v0 is implicit. Length equals the number of vertices.
struct Cycle {
  std::vector<int> vertices;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const Cycle&) const = default;
};

/// True iff c has at least two distinct vertices of g and every
/// consecutive arc (including the closing one) exists.
bool is_valid_cycle(const Digraph& g, const Cycle& c);
inline bool is_valid_cycle(const BipartiteDigraph& g, const Cycle& c) {
  return is_valid_cycle(g.as_digraph(), c);
}

// Degree queries. Out-of-range vertices throw std::out_of_range.
int out_degree(const Digraph& g, int v);
int in_degree(const Digraph& g, int v);
int degree(const Digraph& g, int v);
int out_degree(const BipartiteDigraph& g, Vertex v);
int in_degree(const BipartiteDigraph& g, Vertex v);
int degree(const BipartiteDigraph& g, Vertex v);

/// 1 if u -> v is an arc, else 0. u == v violates the no-loop precondition
/// and throws std::invalid_argument.
int arc_indicator(const Digraph& g, int u, int v);
int arc_indicator(const BipartiteDigraph& g, Vertex u, Vertex v);

/// Strongly connected components (Tarjan), in reverse topological order.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& g);

bool strongly_connected(const Digraph& g);
inline bool strongly_connected(const BipartiteDigraph& g) {
  return strongly_connected(g.as_digraph());
}

/// Subdigraph induced by `vertices`; vertex i of the result is vertices[i].
Digraph induced_subdigraph(const Digraph& g, std::span<const int> vertices);

// Text format -----------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

using AnyGraph = std::variant<BipartiteDigraph, Digraph>;

/// Parses the `bdg <a>` / `dg <n>` text format. Throws ParseError.
AnyGraph parse_graph(std::string_view text);
BipartiteDigraph parse_bipartite(std::string_view text);
Digraph parse_digraph(std::string_view text);

/// Canonical form: header line, then one arc per line in sorted order.
std::string serialize(const BipartiteDigraph& g);
std::string serialize(const Digraph& g);

/// Reads and parses a file; throws ParseError (line 0) if unreadable.
AnyGraph load_graph(const std::string& path);

std::string cycle_to_string(const BipartiteDigraph& g, const Cycle& c);

}  // namespace bipan

#endif  // BIPAN_GRAPH_HPP_
