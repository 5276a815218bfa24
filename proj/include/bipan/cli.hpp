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

#ifndef BIPAN_CLI_HPP_
#define BIPAN_CLI_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bipan/certifier.hpp"

namespace bipan::cli {

enum ExitCode : int {
  kOk = 0,
  kConditionFailed = 1,
  kInputError = 2,
  kGuaranteeViolated = 3,
  kBudgetExhausted = 4,
};

/// Search budget: BIPAN_BUDGET if set to a positive integer, else the
/// library default.
std::uint64_t default_budget();

struct CheckOptions {
  std::string file;
  int k = 0;
};
int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err);

struct CertifyCommandOptions {
  std::string file;
  bool json = false;
  std::uint64_t budget = 0;  // 0 selects default_budget()
  std::string dump_dir = ".";
};
int cmd_certify(const CertifyCommandOptions& options, std::ostream& out, std::ostream& err);

struct OracleOptions {
  std::string file;
  std::optional<int> max_len;
  bool json = false;
  bool verbose = false;
  std::uint64_t budget = 0;
};
int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);

struct GenOptions {
  std::string kind;
  std::vector<int> parameters;
  std::uint64_t seed = 0;
  std::string output;  // empty writes the graph to `out`
};
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

using CertifyFn =
    std::function<PancyclicityReport(const BipartiteDigraph&, const CertifyOptions&)>;

struct SelftestOptions {
  bool quick = false;
  std::string dump_dir = ".";
  std::uint64_t budget = 0;
};

/// Fixtures plus a seeded random sweep, end to end. `certifier` is
/// swappable so fault injection can be tested.
int cmd_selftest(const SelftestOptions& options, std::ostream& out, std::ostream& err,
                 const CertifyFn& certifier = certify_even_pancyclic);

/// Full command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bipan::cli

#endif  // BIPAN_CLI_HPP_
