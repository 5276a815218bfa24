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

#include <fstream>
#include <sstream>

#include "bipan/conditions.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace bipan {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

TEST(SimpleFamiliesTest, Shapes) {
  EXPECT_EQ(complete_bipartite(4).arc_count(), 32u);
  EXPECT_EQ(complete_digraph(5).arc_count(), 20u);
  EXPECT_EQ(complete_bipartite_digraph(2, 3).arc_count(), 12u);
  EXPECT_EQ(directed_cycle(6).arc_count(), 6u);
  const auto cyc = bipartite_cycle(3);
  EXPECT_EQ(cyc.arc_count(), 6u);
  EXPECT_TRUE(is_valid_cycle(cyc, Cycle{{0, 3, 1, 4, 2, 5}}));
}

TEST(D8Test, MatchesFixture) {
  EXPECT_EQ(serialize(d8()), read_file(testing::fixture_path("d8.bdg")));
}

TEST(D8Test, DegreesAndStrongness) {
  const auto g = d8();
  const std::vector<int> expected_x{3, 3, 7, 7};
  const std::vector<int> expected_y{7, 7, 3, 3};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(degree(g, xv(i)), expected_x[i]);
    EXPECT_EQ(degree(g, yv(i)), expected_y[i]);
  }
  EXPECT_TRUE(testing::reachability_strong(g.as_digraph()));
  EXPECT_FALSE(testing::naive_has_cycle(g.as_digraph(), 8));
}

TEST(PhiTest, ParameterRange) {
  EXPECT_TRUE(phi_parameters_valid(5, 4));
  EXPECT_FALSE(phi_parameters_valid(5, 3));
  EXPECT_FALSE(phi_parameters_valid(5, 5));
  EXPECT_TRUE(phi_parameters_valid(10, 6));
  EXPECT_FALSE(phi_parameters_valid(10, 5));
  EXPECT_THROW(phi_maximal(6, 3), std::invalid_argument);
}

TEST(PhiTest, Structure) {
  for (int n = 4; n <= 12; ++n) {
    for (int m = 2; m < n; ++m) {
      if (!phi_parameters_valid(n, m)) continue;
      const auto phi = phi_maximal(n, m);
      const Digraph& d = phi.graph;
      ASSERT_EQ(d.order(), n);
      // Hamiltonian cycle x_n x_(n-1) ... x_1 x_n.
      for (int i = 1; i < n; ++i) EXPECT_TRUE(d.has_arc(i, i - 1));
      EXPECT_TRUE(d.has_arc(0, n - 1));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const int lo = std::min(i, j);
          const int hi = std::max(i, j);
          const bool forbidden = hi - lo == m - 1;
          if (forbidden) {
            EXPECT_FALSE(d.has_arc(i, j)) << n << ' ' << m << ' ' << i << ' ' << j;
          } else if (j < i) {
            EXPECT_EQ(d.has_arc(i, j), j == i - 1);
          } else {
            EXPECT_TRUE(d.has_arc(i, j)) << "forward arcs are all present";
          }
        }
      }
      EXPECT_EQ(phi.satisfies_v, check_meyniel_nonadjacent(d).holds);
    }
  }
}

TEST(PhiTest, NoCycleOfLengthM) {
  for (int n = 5; n <= 9; ++n) {
    for (int m = 2; m < n; ++m) {
      if (!phi_parameters_valid(n, m)) continue;
      const auto& d = phi_maximal(n, m).graph;
      EXPECT_FALSE(testing::naive_has_cycle(d, m)) << n << ' ' << m;
      EXPECT_TRUE(testing::naive_has_cycle(d, n));
    }
  }
}

TEST(RemarkFamilyTest, Properties) {
  for (int a : {2, 4, 6, 8}) {
    const auto g = remark_family(a);
    EXPECT_EQ(g.arc_count(), static_cast<std::size_t>(6 * (a / 2) * (a / 2)));
    for (int i = 0; i < a; ++i) {
      EXPECT_EQ(degree(g, xv(i)), 3 * a / 2);
      EXPECT_EQ(degree(g, yv(i)), 3 * a / 2);
    }
    EXPECT_FALSE(testing::reachability_strong(g.as_digraph()));
    EXPECT_TRUE(check_condition_A(g, 0).holds);
  }
  EXPECT_EQ(serialize(remark_family(4)), read_file(testing::fixture_path("remark4.bdg")));
  EXPECT_THROW(remark_family(3), std::invalid_argument);
  EXPECT_THROW(remark_family(0), std::invalid_argument);
}

TEST(RandomConditionATest, SatisfiesConditionAndIsStrong) {
  for (int a = 1; a <= 8; ++a) {
    for (int k : {0, 1, a}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto g = random_condition_A(a, k, seed);
        ASSERT_EQ(g.half_order(), a);
        EXPECT_TRUE(check_condition_A(g, k).holds);
        EXPECT_TRUE(testing::reachability_strong(g.as_digraph()));
      }
    }
  }
}

TEST(RandomConditionATest, DeterministicInSeed) {
  EXPECT_EQ(random_condition_A(6, 0, 42), random_condition_A(6, 0, 42));
  int distinct = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    distinct += random_condition_A(6, 0, seed) != random_condition_A(6, 0, seed + 100);
  }
  EXPECT_GT(distinct, 5);
  EXPECT_THROW(random_condition_A(0, 0, 1), std::invalid_argument);
  EXPECT_THROW(random_condition_A(3, 4, 1), std::invalid_argument);
}

TEST(GenerateTest, Dispatch) {
  EXPECT_EQ(parse_generator_kind("phi"), GeneratorKind::kPhi);
  EXPECT_THROW(parse_generator_kind("nope"), std::invalid_argument);
  const auto phi = generate({.kind = GeneratorKind::kPhi, .parameters = {7, 5}});
  ASSERT_TRUE(std::holds_alternative<Digraph>(phi));
  const auto k = generate({.kind = GeneratorKind::kComplete, .parameters = {3}});
  EXPECT_EQ(std::get<BipartiteDigraph>(k), complete_bipartite(3));
  EXPECT_THROW(generate({.kind = GeneratorKind::kComplete, .parameters = {}}),
               std::invalid_argument);
  EXPECT_THROW(generate({.kind = GeneratorKind::kD8, .parameters = {1}}), std::invalid_argument);
}

}  // namespace
}  // namespace bipan
