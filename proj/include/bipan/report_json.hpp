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

#ifndef BIPAN_REPORT_JSON_HPP_
#define BIPAN_REPORT_JSON_HPP_

#include <json.hpp>

#include "bipan/certifier.hpp"
#include "bipan/conditions.hpp"
#include "bipan/contraction.hpp"
#include "bipan/matching.hpp"
#include "bipan/oracle.hpp"

namespace bipan {

using json = nlohmann::json;

/// {holds, threshold, witness: {u, v, sum} | null}; bipartite vertices are
/// written as "x<i>"/"y<j>" tokens, general ones as integers.
json to_json(const ConditionReport& report, const BipartiteDigraph& g);
json to_json(const ConditionReport& report);

/// pair_of as a plain array.
json to_json(const PerfectMatching& m);

/// Array of [x_index, y_index] pairs.
json back_map_json(const ContractedDigraph& ds);

/// {status, hypotheses, certificate: {"<L>": {cycle, provenance}}, matching}.
json to_json(const PancyclicityReport& report, const BipartiteDigraph& g);

/// {lengths, max_len, witnesses?}.
json to_json(const Spectrum& spectrum, bool with_witnesses);

}  // namespace bipan

#endif  // BIPAN_REPORT_JSON_HPP_
