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

#include "bipan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace bipan {

Digraph::Digraph(int n) : Digraph(n, std::span<const Arc>{}) {}

Digraph::Digraph(int n, std::span<const Arc> arcs) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative order");
  adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  out_.resize(n);
  in_.resize(n);
  for (const Arc& arc : arcs) {
    if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (arc.tail == arc.head) throw std::invalid_argument("loop");
    auto& cell = adjacency_[static_cast<std::size_t>(arc.tail) * n + arc.head];
    if (cell) throw std::invalid_argument("duplicate arc");
    cell = 1;
    out_[arc.tail].push_back(arc.head);
    in_[arc.head].push_back(arc.tail);
  }
  arc_count_ = arcs.size();
  for (auto& list : out_) std::sort(list.begin(), list.end());
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : out_[u]) result.push_back({u, v});
  }
  return result;
}

Digraph Digraph::with_arc(int tail, int head) const {
  auto list = arcs();
  list.push_back({tail, head});
  return Digraph(n_, list);
}

Digraph Digraph::without_arc(int tail, int head) const {
  auto list = arcs();
  std::erase(list, Arc{tail, head});
  return Digraph(n_, list);
}

std::string to_token(Vertex v) {
  return (v.side == Side::X ? "x" : "y") + std::to_string(v.index);
}

BipartiteDigraph::BipartiteDigraph(
    int a, std::span<const std::pair<Vertex, Vertex>> arcs)
    : a_(a) {
  if (a < 1) throw std::invalid_argument("half order must be positive");
  std::vector<Arc> flat_arcs;
  flat_arcs.reserve(arcs.size());
  for (const auto& [tail, head] : arcs) {
    if (tail.side == head.side) throw std::invalid_argument("same-side arc");
    flat_arcs.push_back({flat(tail), flat(head)});
  }
  flat_ = Digraph(2 * a, flat_arcs);
}

BipartiteDigraph::BipartiteDigraph(int a, Digraph flat_graph)
    : a_(a), flat_(std::move(flat_graph)) {
  if (a < 1) throw std::invalid_argument("half order must be positive");
  if (flat_.order() != 2 * a) throw std::invalid_argument("order is not 2a");
  for (const Arc& arc : flat_.arcs()) {
    if ((arc.tail < a) == (arc.head < a)) {
      throw std::invalid_argument("same-side arc");
    }
  }
}

int BipartiteDigraph::flat(Vertex v) const {
  if (v.index < 0 || v.index >= a_) {
    throw std::out_of_range("vertex index out of range: " + to_token(v));
  }
  return v.side == Side::X ? v.index : a_ + v.index;
}

Vertex BipartiteDigraph::vertex(int flat_id) const {
  if (flat_id < 0 || flat_id >= 2 * a_) {
    throw std::out_of_range("flat vertex out of range");
  }
  return flat_id < a_ ? xv(flat_id) : yv(flat_id - a_);
}

bool is_valid_cycle(const Digraph& g, const Cycle& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 2) return false;
  std::vector<bool> seen(g.order(), false);
  for (int v : vs) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.has_arc(vs[i], vs[(i + 1) % vs.size()])) return false;
  }
  return true;
}

namespace {

void require_vertex(const Digraph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
}

}  // namespace

int out_degree(const Digraph& g, int v) {
  require_vertex(g, v);
  return static_cast<int>(g.out_neighbors(v).size());
}

int in_degree(const Digraph& g, int v) {
  require_vertex(g, v);
  return static_cast<int>(g.in_neighbors(v).size());
}

int degree(const Digraph& g, int v) { return out_degree(g, v) + in_degree(g, v); }

int out_degree(const BipartiteDigraph& g, Vertex v) {
  return out_degree(g.as_digraph(), g.flat(v));
}
int in_degree(const BipartiteDigraph& g, Vertex v) {
  return in_degree(g.as_digraph(), g.flat(v));
}
int degree(const BipartiteDigraph& g, Vertex v) {
  return degree(g.as_digraph(), g.flat(v));
}

int arc_indicator(const Digraph& g, int u, int v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) throw std::invalid_argument("arc_indicator on a single vertex");
  return g.has_arc(u, v) ? 1 : 0;
}

int arc_indicator(const BipartiteDigraph& g, Vertex u, Vertex v) {
  return arc_indicator(g.as_digraph(), g.flat(u), g.flat(v));
}

std::vector<std::vector<int>> strongly_connected_components(const Digraph& g) {
  // Iterative Tarjan.
  const int n = g.order();
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  struct Frame {
    int vertex;
    std::size_t next;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& frame = call.back();
      const int v = frame.vertex;
      auto succ = g.out_neighbors(v);
      if (frame.next < succ.size()) {
        const int w = succ[frame.next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<int> component;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().vertex;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return components;
}

bool strongly_connected(const Digraph& g) {
  if (g.order() == 0) return false;
  return strongly_connected_components(g).size() == 1;
}

Digraph induced_subdigraph(const Digraph& g, std::span<const int> vertices) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require_vertex(g, vertices[i]);
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i != j && g.has_arc(vertices[i], vertices[j])) {
        arcs.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  return Digraph(static_cast<int>(vertices.size()), arcs);
}

// Text format -----------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r') {
      ++end;
    }
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

bool parse_uint(std::string_view s, int& out) {
  if (s.empty() || s.size() > 9) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
  enum class Kind { None, Bipartite, General } kind = Kind::None;
  int size = 0;
  int line_no = 0;
  std::vector<Arc> arcs;
  std::vector<std::uint8_t> seen;

  auto parse_endpoint = [&](std::string_view token) -> int {
    int value = 0;
    if (kind == Kind::General) {
      if (!parse_uint(token, value)) {
        throw ParseError(line_no, "malformed vertex token '" + std::string(token) + "'");
      }
      if (value >= size) {
        throw ParseError(line_no, "vertex index out of range: " + std::string(token));
      }
      return value;
    }
    if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y') ||
        !parse_uint(token.substr(1), value)) {
      throw ParseError(line_no, "malformed vertex token '" + std::string(token) + "'");
    }
    if (value >= size) {
      throw ParseError(line_no, "vertex index out of range: " + std::string(token));
    }
    return token[0] == 'x' ? value : size + value;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (kind == Kind::None) {
      if (tokens.size() != 2 || (tokens[0] != "bdg" && tokens[0] != "dg")) {
        throw ParseError(line_no, "expected header 'bdg <a>' or 'dg <n>'");
      }
      if (!parse_uint(tokens[1], size) || size < 1) {
        throw ParseError(line_no, "order must be a positive integer");
      }
      kind = tokens[0] == "bdg" ? Kind::Bipartite : Kind::General;
      const std::size_t n = kind == Kind::Bipartite ? 2 * size : size;
      seen.assign(n * n, 0);
      continue;
    }

    if (tokens.size() != 2) throw ParseError(line_no, "expected '<tail> <head>'");
    const int tail = parse_endpoint(tokens[0]);
    const int head = parse_endpoint(tokens[1]);
    if (tail == head) throw ParseError(line_no, "loop");
    if (kind == Kind::Bipartite && (tail < size) == (head < size)) {
      throw ParseError(line_no, "same-side arc");
    }
    const std::size_t n = kind == Kind::Bipartite ? 2 * size : size;
    auto& cell = seen[static_cast<std::size_t>(tail) * n + head];
    if (cell) throw ParseError(line_no, "duplicate arc");
    cell = 1;
    arcs.push_back({tail, head});
  }

  if (kind == Kind::None) throw ParseError(line_no, "missing header");
  if (kind == Kind::General) return Digraph(size, arcs);
  return BipartiteDigraph(size, Digraph(2 * size, arcs));
}

BipartiteDigraph parse_bipartite(std::string_view text) {
  auto g = parse_graph(text);
  if (auto* b = std::get_if<BipartiteDigraph>(&g)) return std::move(*b);
  throw ParseError(0, "expected a bipartite 'bdg' graph");
}

Digraph parse_digraph(std::string_view text) {
  auto g = parse_graph(text);
  if (auto* d = std::get_if<Digraph>(&g)) return std::move(*d);
  return std::get<BipartiteDigraph>(g).as_digraph();
}

std::string serialize(const BipartiteDigraph& g) {
  // Flat numbering already orders x before y, then by index.
  std::string out = "bdg " + std::to_string(g.half_order()) + "\n";
  for (const Arc& arc : g.as_digraph().arcs()) {
    out += to_token(g.vertex(arc.tail));
    out += ' ';
    out += to_token(g.vertex(arc.head));
    out += '\n';
  }
  return out;
}

std::string serialize(const Digraph& g) {
  std::string out = "dg " + std::to_string(g.order()) + "\n";
  for (const Arc& arc : g.arcs()) {
    out += std::to_string(arc.tail) + ' ' + std::to_string(arc.head) + '\n';
  }
  return out;
}

AnyGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string cycle_to_string(const BipartiteDigraph& g, const Cycle& c) {
  std::string out;
  for (int v : c.vertices) {
    if (!out.empty()) out += ' ';
    out += to_token(g.vertex(v));
  }
  return out;
}

}  // namespace bipan
