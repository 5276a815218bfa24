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

#include <ostream>
#include <set>
#include <string>

#include "bipan/cli.hpp"
#include "dump.hpp"
#include "bipan/conditions.hpp"
#include "bipan/families.hpp"
#include "bipan/oracle.hpp"

namespace bipan::cli {
namespace {

bool all_same_side_sums_equal(const BipartiteDigraph& g, int target) {
  const int a = g.half_order();
  for (const Side side : {Side::X, Side::Y}) {
    for (int i = 0; i < a; ++i) {
      for (int j = i + 1; j < a; ++j) {
        if (degree(g, {side, i}) + degree(g, {side, j}) != target) return false;
      }
    }
  }
  return true;
}

}  // namespace

int cmd_selftest(const SelftestOptions& options, std::ostream& out, std::ostream& err,
                 const CertifyFn& certifier) {
  const CertifyOptions certify_options{
      .budget = options.budget != 0 ? options.budget : default_budget()};
  int checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    out << (ok ? "ok    " : "FAIL  ") << what << '\n';
    return ok;
  };

  bool fixtures_ok = true;
  {
    const auto g = d8();
    const auto spectrum = cycle_length_spectrum(g, 8);
    const auto a0 = check_condition_A(g, 0);
    fixtures_ok &= expect(spectrum.lengths == std::set<int>{2, 4, 6}, "D(8) spectrum is {2,4,6}");
    fixtures_ok &= expect(!is_hamiltonian(g), "D(8) is not Hamiltonian");
    fixtures_ok &= expect(strongly_connected(g), "D(8) is strong");
    fixtures_ok &= expect(check_dominating_pair_max_degree(g).holds,
                          "D(8) dominating-pair degree condition holds");
    fixtures_ok &= expect(!a0.holds && a0.witness && a0.witness->sum == 6,
                          "D(8) fails A_0 with witness sum 6");
  }
  for (int a : {2, 4, 6}) {
    const auto g = remark_family(a);
    fixtures_ok &= expect(all_same_side_sums_equal(g, 3 * a) && !strongly_connected(g),
                          "remark family a=" + std::to_string(a) + ": sums 3a, not strong");
  }
  {
    const auto g = complete_bipartite(3);
    const auto report = certifier(g, certify_options);
    fixtures_ok &= expect(report.status == Status::kCertified && validate_certificate(g, report),
                          "K*_{3,3} certified");
  }
  if (!fixtures_ok) {
    err << "selftest: fixture check failed\n";
    return kGuaranteeViolated;
  }

  const int max_a = options.quick ? 5 : 8;
  const int instances = options.quick ? 30 : 60;
  for (int i = 0; i < instances; ++i) {
    const int a = 3 + i % (max_a - 2);
    const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
    const auto g = random_condition_A(a, 0, seed);
    const auto report = certifier(g, certify_options);
    const bool valid = validate_certificate(g, report);
    const auto spectrum = cycle_length_spectrum(g, 2 * a);
    bool even_complete = true;
    for (int length = 2; length <= 2 * a; length += 2) {
      even_complete &= spectrum.lengths.contains(length);
    }
    const std::string label =
        "random A_0 a=" + std::to_string(a) + " seed=" + std::to_string(seed);
    if (!expect(report.status == Status::kCertified && valid && even_complete, label)) {
      const std::string path = detail::dump_instance(
          options.dump_dir, g, report.missing_lengths(),
          std::string("selftest status ") + std::string(to_string(report.status)) +
              (valid ? "" : ", invalid certificate"));
      err << "selftest: guarantee failure, instance written to " << path << '\n';
      return kGuaranteeViolated;
    }
  }
  out << "selftest: " << checks << " checks passed\n";
  return kOk;
}

}  // namespace bipan::cli
