// Copyright 2026 The hetcec Authors
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

#ifndef HETCEC_TOOLS_CLI_SERIALIZATION_HPP_
#define HETCEC_TOOLS_CLI_SERIALIZATION_HPP_

#include "hetcec/assignment.hpp"
#include "hetcec/load_optimizer.hpp"
#include "hetcec/simulator.hpp"
#include "json.hpp"

namespace hetcec::cli {

// [{"machine": 1, "load": "2/5"}, ...]
nlohmann::ordered_json loads_to_json(const LoadVector& loads);

// [{"alpha": "2/5", "machines": [1, 5, 6], "rows": [1, 4]}, ...]
// "rows" is the 1-based inclusive interval and is present only for
// materialized plans.
nlohmann::ordered_json blocks_to_json(const AssignmentPlan& plan);

// Inverse of blocks_to_json. When rows_per_block is non-zero every block
// must carry "rows" and worksets are derived from them.
AssignmentPlan plan_from_json(const nlohmann::json& blocks, int split_factor,
                              std::size_t rows_per_block);

nlohmann::ordered_json step_to_json(const StepReport& step);

}  // namespace hetcec::cli

#endif  // HETCEC_TOOLS_CLI_SERIALIZATION_HPP_
