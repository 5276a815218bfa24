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

#include "bipan/oracle.hpp"

#include "bipan/families.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace bipan {
namespace {

TEST(SpectrumTest, Examples) {
  EXPECT_EQ(cycle_length_spectrum(d8(), 8).lengths, (std::set<int>{2, 4, 6}));
  EXPECT_EQ(cycle_length_spectrum(directed_cycle(5), 5).lengths, (std::set<int>{5}));
  EXPECT_EQ(cycle_length_spectrum(complete_digraph(5), 5).lengths,
            (std::set<int>{2, 3, 4, 5}));
  EXPECT_EQ(cycle_length_spectrum(complete_bipartite(3), 4).lengths, (std::set<int>{2, 4}));
  EXPECT_TRUE(cycle_length_spectrum(Digraph(4), 4).lengths.empty());
}

TEST(SpectrumTest, WitnessesAreValid) {
  const auto spectrum = cycle_length_spectrum(complete_digraph(6), 6);
  ASSERT_EQ(spectrum.witnesses.size(), 5u);
  for (const auto& [length, cycle] : spectrum.witnesses) {
    EXPECT_EQ(cycle.length(), static_cast<std::size_t>(length));
    EXPECT_TRUE(is_valid_cycle(complete_digraph(6), cycle));
  }
}

TEST(SpectrumTest, RejectsBadArguments) {
  EXPECT_THROW(cycle_length_spectrum(directed_cycle(4), 5), std::invalid_argument);
  EXPECT_THROW(cycle_length_spectrum(Digraph(65), 3), std::invalid_argument);
}

TEST(SpectrumTest, BudgetCarriesPartialResult) {
  try {
    cycle_length_spectrum(complete_bipartite_digraph(8, 9), 17, 20);
    FAIL() << "expected budget exhaustion";
  } catch (const OracleBudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 20u);
    for (const auto& [length, cycle] : e.partial().witnesses) {
      EXPECT_TRUE(e.partial().lengths.contains(length));
      EXPECT_EQ(cycle.length(), static_cast<std::size_t>(length));
    }
  }
}

TEST(SpectrumTest, AgreesWithNaiveSearch) {
  Rng rng(89);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 9;
    const auto g = testing::random_digraph(n, 0.1 + 0.5 * rng.unit(), rng);
    const auto spectrum = cycle_length_spectrum(g, n);
    for (int k = 2; k <= n; ++k) {
      EXPECT_EQ(spectrum.lengths.contains(k), testing::naive_has_cycle(g, k)) << serialize(g);
    }
  }
}

TEST(SpectrumTest, MonotoneUnderArcAddition) {
  Rng rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 8;
    const auto g = testing::random_digraph(n, 0.25, rng);
    const int u = static_cast<int>(rng.below(n));
    const int v = (u + 1 + static_cast<int>(rng.below(n - 1))) % n;
    if (g.has_arc(u, v)) continue;
    const auto before = cycle_length_spectrum(g, n).lengths;
    const auto after = cycle_length_spectrum(g.with_arc(u, v), n).lengths;
    EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  }
}

TEST(HamiltonianTest, Examples) {
  EXPECT_FALSE(is_hamiltonian(d8()));
  EXPECT_TRUE(is_hamiltonian(complete_bipartite(4)));
  EXPECT_TRUE(is_hamiltonian(bipartite_cycle(5)));
  EXPECT_FALSE(is_hamiltonian(remark_family(4)));
  EXPECT_TRUE(is_hamiltonian(directed_cycle(30)));
  EXPECT_FALSE(is_hamiltonian(directed_cycle(30).without_arc(29, 0)));
}

TEST(HamiltonianTest, MatchesSpectrum) {
  Rng rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 10;
    const auto g = testing::random_digraph(n, 0.15 + 0.4 * rng.unit(), rng);
    EXPECT_EQ(is_hamiltonian(g), cycle_length_spectrum(g, n).lengths.contains(n));
  }
}

TEST(ValidateCertificateTest, AcceptsAndRejects) {
  const auto g = complete_bipartite(3);
  PancyclicityReport report;
  report.status = Status::kCertified;
  report.half_order = 3;
  report.certificate[2] = {Cycle{{0, 3}}, Provenance::kDirectSearch};
  report.certificate[4] = {Cycle{{0, 3, 1, 4}}, Provenance::kDirectSearch};
  report.certificate[6] = {Cycle{{0, 3, 1, 4, 2, 5}}, Provenance::kLiftedFromDstar};
  EXPECT_TRUE(validate_certificate(g, report));

  auto wrong_length = report;
  wrong_length.certificate[4] = {Cycle{{0, 3}}, Provenance::kDirectSearch};
  EXPECT_FALSE(validate_certificate(g, wrong_length));

  auto repeated = report;
  repeated.certificate[4] = {Cycle{{0, 3, 0, 3}}, Provenance::kDirectSearch};
  EXPECT_FALSE(validate_certificate(g, repeated));

  auto incomplete = report;
  incomplete.certificate.erase(6);
  EXPECT_FALSE(validate_certificate(g, incomplete));
  incomplete.status = Status::kGuaranteeViolated;
  EXPECT_TRUE(validate_certificate(g, incomplete));
}

TEST(ValidateCertificateTest, DetectsEveryRemovedArc) {
  // Removing any arc a certificate cycle uses must invalidate it.
  const auto g = random_condition_A(5, 0, 11);
  const auto report = certify_even_pancyclic(g);
  ASSERT_EQ(report.status, Status::kCertified);
  for (const auto& [length, entry] : report.certificate) {
    const auto& v = entry.cycle.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const int tail = v[i];
      const int head = v[(i + 1) % v.size()];
      const BipartiteDigraph cut(5, g.as_digraph().without_arc(tail, head));
      EXPECT_FALSE(validate_certificate(cut, report)) << length;
    }
  }
}

}  // namespace
}  // namespace bipan
