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

#include "bipan/report_json.hpp"

#include <string>

namespace bipan {

json to_json(const ConditionReport& report, const BipartiteDigraph& g) {
  json out{{"holds", report.holds}, {"threshold", report.threshold}, {"witness", nullptr}};
  if (report.witness) {
    out["witness"] = {{"u", to_token(g.vertex(report.witness->u))},
                      {"v", to_token(g.vertex(report.witness->v))},
                      {"sum", report.witness->sum}};
  }
  return out;
}

json to_json(const ConditionReport& report) {
  json out{{"holds", report.holds}, {"threshold", report.threshold}, {"witness", nullptr}};
  if (report.witness) {
    out["witness"] = {
        {"u", report.witness->u}, {"v", report.witness->v}, {"sum", report.witness->sum}};
  }
  return out;
}

json to_json(const PerfectMatching& m) { return json(m.pair_of); }

json back_map_json(const ContractedDigraph& ds) {
  json out = json::array();
  for (const auto& [x, y] : ds.back_map) out.push_back({x, y});
  return out;
}

json to_json(const PancyclicityReport& report, const BipartiteDigraph& g) {
  json certificate = json::object();
  for (const auto& [length, entry] : report.certificate) {
    json cycle = json::array();
    for (int v : entry.cycle.vertices) cycle.push_back(to_token(g.vertex(v)));
    certificate[std::to_string(length)] = {
        {"cycle", std::move(cycle)}, {"provenance", std::string(to_string(entry.provenance))}};
  }
  json out{{"status", std::string(to_string(report.status))},
           {"hypotheses",
            {{"condition_A0", report.hypotheses.condition_A0},
             {"strong", report.hypotheses.strong},
             {"order_ok", report.hypotheses.order_ok}}},
           {"certificate", std::move(certificate)},
           {"missing", report.missing_lengths()},
           {"matching", nullptr}};
  if (report.contraction) {
    out["matching"] = {{"pair_of", to_json(report.contraction->matching)},
                       {"size", report.contraction->matching_size},
                       {"dstar_strong", report.contraction->dstar_strong},
                       {"complete_bipartite", report.contraction->complete_bipartite}};
  }
  return out;
}

json to_json(const Spectrum& spectrum, bool with_witnesses) {
  json out{{"lengths", json(std::vector<int>(spectrum.lengths.begin(), spectrum.lengths.end()))},
           {"max_len", spectrum.max_len_searched}};
  if (with_witnesses) {
    json witnesses = json::object();
    for (const auto& [length, cycle] : spectrum.witnesses) {
      witnesses[std::to_string(length)] = cycle.vertices;
    }
    out["witnesses"] = std::move(witnesses);
  }
  return out;
}

}  // namespace bipan
