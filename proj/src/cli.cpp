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

#include "bipan/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bipan/conditions.hpp"
#include "bipan/families.hpp"
#include "bipan/oracle.hpp"
#include "bipan/report_json.hpp"
#include "dump.hpp"

namespace bipan::cli {
namespace {

std::uint64_t resolve_budget(std::uint64_t requested) {
  return requested != 0 ? requested : default_budget();
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y%m%dT%H%M%SZ");
  return out.str();
}

int exit_code_for(Status status) {
  switch (status) {
    case Status::kCertified:
      return kOk;
    case Status::kHypothesesNotMet:
      return kConditionFailed;
    case Status::kGuaranteeViolated:
      return kGuaranteeViolated;
    case Status::kBudgetExhausted:
      return kBudgetExhausted;
  }
  return kGuaranteeViolated;
}

}  // namespace

namespace detail {

std::string dump_instance(const std::string& dir, const BipartiteDigraph& g,
                          const std::vector<int>& failing, const std::string& note) {
  static int sequence = 0;
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) /
                    ("counterexample-" + timestamp() + "-" + std::to_string(sequence++) + ".bdg");
  std::ofstream file(path);
  file << "# " << note << "\n# failing lengths:";
  for (int length : failing) file << ' ' << length;
  file << '\n' << serialize(g);
  return path.string();
}

}  // namespace detail

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BIPAN_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultBudget;
}

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  AnyGraph graph;
  try {
    graph = load_graph(options.file);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (const auto* g = std::get_if<BipartiteDigraph>(&graph)) {
    if (options.k < 0) {
      err << "error: k must be nonnegative\n";
      return kInputError;
    }
    const auto condition = check_condition_A(*g, options.k);
    const bool strong = strongly_connected(*g);
    json report{{"kind", "bdg"},
                {"a", g->half_order()},
                {"arcs", g->arc_count()},
                {"k", options.k},
                {"condition_A", to_json(condition, *g)},
                {"strong", strong},
                {"dominating_pair", to_json(check_dominating_pair_max_degree(*g), *g)}};
    out << report.dump(2) << '\n';
    return condition.holds && strong ? kOk : kConditionFailed;
  }

  const auto& d = std::get<Digraph>(graph);
  const auto meyniel = check_meyniel_nonadjacent(d);
  const bool strong = strongly_connected(d);
  json report{{"kind", "dg"},
              {"n", d.order()},
              {"arcs", d.arc_count()},
              {"meyniel", to_json(meyniel)},
              {"strong", strong}};
  out << report.dump(2) << '\n';
  return meyniel.holds && strong ? kOk : kConditionFailed;
}

int cmd_certify(const CertifyCommandOptions& options, std::ostream& out, std::ostream& err) {
  BipartiteDigraph g;
  try {
    auto graph = load_graph(options.file);
    if (!std::holds_alternative<BipartiteDigraph>(graph)) {
      err << "error: certify needs a bipartite 'bdg' graph\n";
      return kInputError;
    }
    g = std::get<BipartiteDigraph>(std::move(graph));
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const auto report =
      certify_even_pancyclic(g, CertifyOptions{.budget = resolve_budget(options.budget)});
  const bool valid = validate_certificate(g, report);
  int code = exit_code_for(report.status);
  if (!valid) code = kGuaranteeViolated;

  if (options.json) {
    json doc = to_json(report, g);
    doc["validated"] = valid;
    out << doc.dump(2) << '\n';
  } else {
    out << "status: " << to_string(report.status) << (valid ? "" : " (INVALID CERTIFICATE)")
        << '\n';
    for (const auto& [length, entry] : report.certificate) {
      out << "  " << std::setw(3) << length << "  " << cycle_to_string(g, entry.cycle)
          << "  [" << to_string(entry.provenance) << "]\n";
    }
    for (int length : report.missing_lengths()) {
      out << "  " << std::setw(3) << length << "  (none found)\n";
    }
  }

  if (code == kGuaranteeViolated) {
    const std::string path = detail::dump_instance(options.dump_dir, g, report.missing_lengths(),
                                           valid ? "guarantee violated" : "invalid certificate");
    err << "guarantee violation: instance written to " << path << '\n';
  }
  return code;
}

int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err) {
  AnyGraph graph;
  try {
    graph = load_graph(options.file);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const Digraph& d = std::visit(
      [](const auto& g) -> const Digraph& {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, Digraph>) {
          return g;
        } else {
          return g.as_digraph();
        }
      },
      graph);
  auto token = [&](int v) {
    if (const auto* b = std::get_if<BipartiteDigraph>(&graph)) return to_token(b->vertex(v));
    return std::to_string(v);
  };
  const int max_len = options.max_len.value_or(d.order());
  if (max_len < 0 || max_len > d.order() || d.order() > 64) {
    err << "error: --max-len must lie in [0, n] and n must be <= 64\n";
    return kInputError;
  }

  auto print = [&](const Spectrum& spectrum) {
    if (options.json) {
      out << to_json(spectrum, options.verbose).dump(2) << '\n';
      return;
    }
    bool first = true;
    for (int length : spectrum.lengths) {
      out << (first ? "" : " ") << length;
      first = false;
    }
    out << '\n';
    if (options.verbose) {
      for (const auto& [length, cycle] : spectrum.witnesses) {
        out << "  " << length << ":";
        for (int v : cycle.vertices) out << ' ' << token(v);
        out << '\n';
      }
    }
  };

  try {
    print(cycle_length_spectrum(d, max_len, resolve_budget(options.budget)));
  } catch (const OracleBudgetExceeded& e) {
    err << "error: " << e.what() << " (partial spectrum follows)\n";
    print(e.partial());
    return kBudgetExhausted;
  }
  return kOk;
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  AnyGraph graph;
  try {
    graph = generate(GeneratorSpec{.kind = parse_generator_kind(options.kind),
                                   .parameters = options.parameters,
                                   .seed = options.seed});
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const std::string text =
      std::visit([](const auto& g) { return serialize(g); }, graph);
  const auto [order, arcs] = std::visit(
      [](const auto& g) { return std::pair<int, std::size_t>(g.order(), g.arc_count()); },
      graph);
  if (options.output.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(options.output, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << options.output << '\n';
    return kInputError;
  }
  out << options.output << ": order " << order << ", " << arcs << " arcs\n";
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Even-pancyclicity certificates for balanced bipartite digraphs", "bipan"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Degree conditions and strong connectivity");
  check_cmd->add_option("file", check.file, "Graph file")->required();
  check_cmd->add_option("-k,--k", check.k, "Check condition A_k");

  CertifyCommandOptions certify;
  auto* certify_cmd = app.add_subcommand("certify", "Build and validate a certificate");
  certify_cmd->add_option("file", certify.file, "Bipartite graph file")->required();
  certify_cmd->add_flag("--json", certify.json, "Emit JSON");
  certify_cmd->add_option("--budget", certify.budget, "Node-expansion budget per search");
  certify_cmd->add_option("--dump-dir", certify.dump_dir, "Where violations are written");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact cycle-length spectrum");
  oracle_cmd->add_option("file", oracle.file, "Graph file")->required();
  oracle_cmd->add_option("--max-len", oracle.max_len, "Longest length searched (default n)");
  oracle_cmd->add_flag("--json", oracle.json, "Emit JSON");
  oracle_cmd->add_flag("-v,--verbose", oracle.verbose, "Print a witness per length");
  oracle_cmd->add_option("--budget", oracle.budget, "Node-expansion budget");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named family member");
  gen_cmd->add_option("kind", gen.kind, "complete | d8 | phi | remark | random | cycle")
      ->required();
  gen_cmd->add_option("parameters", gen.parameters, "Kind-specific integers");
  gen_cmd->add_option("--seed", gen.seed, "Seed for the random kind");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  SelftestOptions selftest;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the bundled acceptance corpus");
  selftest_cmd->add_flag("--quick", selftest.quick, "Only a <= 5");
  selftest_cmd->add_option("--dump-dir", selftest.dump_dir, "Where violations are written");
  selftest_cmd->add_option("--budget", selftest.budget, "Node-expansion budget per search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (*check_cmd) return cmd_check(check, out, err);
  if (*certify_cmd) return cmd_certify(certify, out, err);
  if (*oracle_cmd) return cmd_oracle(oracle, out, err);
  if (*gen_cmd) return cmd_gen(gen, out, err);
  return cmd_selftest(selftest, out, err);
}

}  // namespace bipan::cli
