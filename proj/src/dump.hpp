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

#ifndef BIPAN_SRC_DUMP_HPP_
#define BIPAN_SRC_DUMP_HPP_

#include <string>
#include <vector>

#include "bipan/graph.hpp"

namespace bipan::cli::detail {

/// Writes `g` with the failing lengths to a timestamped file under `dir`
/// and returns its path.
std::string dump_instance(const std::string& dir, const BipartiteDigraph& g,
                          const std::vector<int>& failing, const std::string& note);

}  // namespace bipan::cli::detail

#endif  // BIPAN_SRC_DUMP_HPP_
