// Copyright 2026 The qtn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "qtn/circuit.hpp"
#include "qtn/ordering.hpp"
#include "qtn/slicing.hpp"

namespace qtn {

// JSON documents exchanged by the command-line tools. Readers throw
// ValidationError on malformed input.

/// {"n": int, "edges": [[a, b], ...]}
std::string graph_to_json(const ProblemGraph& graph);
ProblemGraph graph_from_json(std::string_view text);

/// {"order": [labels], "width": int, "step_degrees": [ints]}
std::string order_to_json(const EliminationOrder& order);
EliminationOrder order_from_json(std::string_view text);

/// {"rounds": [{"step": s, "sliced": [labels]}], "prefix": [labels],
///  "final_order": [labels], "width": int}
/// The final order's step degrees are not stored; a parsed schedule has
/// final_order.width set to the stored width.
std::string schedule_to_json(const SliceSchedule& schedule);
SliceSchedule schedule_from_json(std::string_view text);

}  // namespace qtn
