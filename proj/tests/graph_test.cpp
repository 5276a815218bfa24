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

#include <fstream>
#include <sstream>

#include "bipan/families.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace bipan {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(ParseTest, SmallestTwoCycle) {
  const auto g = parse_bipartite("bdg 1\nx0 y0\ny0 x0\n");
  EXPECT_EQ(g.half_order(), 1);
  EXPECT_EQ(g.arc_count(), 2u);
  EXPECT_TRUE(g.has_arc(xv(0), yv(0)));
  EXPECT_TRUE(g.has_arc(yv(0), xv(0)));
}

TEST(ParseTest, D8FixtureHasTwentyArcs) {
  const auto g = std::get<BipartiteDigraph>(load_graph(testing::fixture_path("d8.bdg")));
  EXPECT_EQ(g.half_order(), 4);
  EXPECT_EQ(g.arc_count(), 20u);
}

TEST(ParseTest, CommentsAndBlankLinesIgnored) {
  const auto g = parse_graph("# header comment\n\ndg 3\n  # inner\n0 1\n\n1 2\n");
  const auto& d = std::get<Digraph>(g);
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d.arc_count(), 2u);
}

TEST(ParseTest, Rejections) {
  EXPECT_THROW(parse_graph("bdg 2\nx0 x1\n"), ParseError);     // same side
  EXPECT_THROW(parse_graph("bdg 2\nx0 y2\n"), ParseError);     // out of range
  EXPECT_THROW(parse_graph("bdg 2\nx0 y1\nx0 y1\n"), ParseError);  // duplicate
  EXPECT_THROW(parse_graph("dg 2\n1 1\n"), ParseError);        // loop
  EXPECT_THROW(parse_graph("dg 2\n0 z\n"), ParseError);        // malformed
  EXPECT_THROW(parse_graph("dg 2\n0 1 1\n"), ParseError);      // extra token
  EXPECT_THROW(parse_graph("x0 y0\n"), ParseError);            // no header
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("bdg 0\n"), ParseError);
  EXPECT_THROW(parse_graph("bdg 2\nx+1 y0\n"), ParseError);
}

TEST(ParseTest, ErrorCarriesLineNumber) {
  try {
    parse_graph("bdg 2\n# c\nx0 y0\nx0 x1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(SerializeTest, EmptyGraphIsHeaderOnly) {
  EXPECT_EQ(serialize(BipartiteDigraph(2, Digraph(4))), "bdg 2\n");
  EXPECT_EQ(serialize(Digraph(3)), "dg 3\n");
}

TEST(SerializeTest, SortedFixtureIsCanonical) {
  const std::string text = read_file(testing::fixture_path("d8.bdg"));
  EXPECT_EQ(serialize(parse_bipartite(text)), text);
}

TEST(SerializeTest, RoundTripsRandomGraphs) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_bipartite(1 + trial % 7, rng.unit(), rng);
    EXPECT_EQ(parse_bipartite(serialize(g)), g);
    const auto d = testing::random_digraph(1 + trial % 9, rng.unit(), rng);
    EXPECT_EQ(parse_digraph(serialize(d)), d);
  }
}

TEST(DegreeTest, CompleteBipartite) {
  const auto g = complete_bipartite(3);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(degree(g, xv(i)), 6);
    EXPECT_EQ(degree(g, yv(i)), 6);
  }
}

TEST(DegreeTest, D8) {
  const auto g = d8();
  // x2: x2<->y2, x2->y3, y0<->x2, y1<->x2.
  EXPECT_EQ(degree(g, xv(2)), 7);
  // x0: x0<->y0, y1->x0.
  EXPECT_EQ(degree(g, xv(0)), 3);
  EXPECT_EQ(out_degree(g, xv(0)), 1);
  EXPECT_EQ(in_degree(g, xv(0)), 2);
  EXPECT_THROW(degree(g, xv(4)), std::out_of_range);
  EXPECT_THROW(degree(g.as_digraph(), -1), std::out_of_range);
}

TEST(DegreeTest, SumsMatchArcCount) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = testing::random_digraph(2 + trial % 10, rng.unit(), rng);
    std::size_t out_sum = 0;
    std::size_t in_sum = 0;
    for (int v = 0; v < d.order(); ++v) {
      out_sum += out_degree(d, v);
      in_sum += in_degree(d, v);
      EXPECT_EQ(degree(d, v), out_degree(d, v) + in_degree(d, v));
    }
    EXPECT_EQ(out_sum, d.arc_count());
    EXPECT_EQ(in_sum, d.arc_count());
  }
}

TEST(ArcIndicatorTest, D8) {
  const auto g = d8();
  EXPECT_EQ(arc_indicator(g, yv(0), xv(1)), 1);
  EXPECT_EQ(arc_indicator(g, xv(1), yv(0)), 0);
  EXPECT_THROW(arc_indicator(g, xv(1), xv(1)), std::invalid_argument);
}

TEST(StrongTest, Examples) {
  EXPECT_TRUE(strongly_connected(bipartite_cycle(4)));
  EXPECT_TRUE(strongly_connected(d8()));
  EXPECT_FALSE(strongly_connected(remark_family(4)));
  EXPECT_TRUE(strongly_connected(Digraph(1)));
  EXPECT_FALSE(strongly_connected(Digraph(2)));
}

TEST(StrongTest, AgreesWithReachability) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const auto d = testing::random_digraph(n, 0.05 + 0.4 * rng.unit(), rng);
    EXPECT_EQ(strongly_connected(d), testing::reachability_strong(d)) << serialize(d);
  }
}

TEST(InducedTest, Identity) {
  const auto g = d8();
  std::vector<int> all(8);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(induced_subdigraph(g.as_digraph(), all), g.as_digraph());
}

TEST(InducedTest, SingleVertexIsArcless) {
  const std::vector<int> one{3};
  const auto sub = induced_subdigraph(complete_bipartite(3).as_digraph(), one);
  EXPECT_EQ(sub.order(), 1);
  EXPECT_EQ(sub.arc_count(), 0u);
}

TEST(InducedTest, D8CoreIsCompleteBipartite) {
  const auto g = d8();
  const std::vector<int> s{g.flat(xv(2)), g.flat(xv(3)), g.flat(yv(0)), g.flat(yv(1))};
  EXPECT_EQ(induced_subdigraph(g.as_digraph(), s), complete_bipartite_digraph(2, 2));
}

TEST(CycleTest, Validation) {
  const auto g = d8();
  EXPECT_TRUE(is_valid_cycle(g, Cycle{{g.flat(xv(0)), g.flat(yv(0))}}));
  EXPECT_FALSE(is_valid_cycle(g, Cycle{{g.flat(xv(0))}}));
  EXPECT_FALSE(is_valid_cycle(g, Cycle{{g.flat(xv(1)), g.flat(yv(0))}}));
  EXPECT_FALSE(is_valid_cycle(g, Cycle{{0, 4, 0, 4}}));
}

}  // namespace
}  // namespace bipan
