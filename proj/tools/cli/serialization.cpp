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

#include "cli/serialization.hpp"

#include <string>

#include "hetcec/error.hpp"

namespace hetcec::cli {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json loads_to_json(const LoadVector& loads) {
  auto out = ordered_json::array();
  for (std::size_t i = 0; i < loads.machines.size(); ++i) {
    out.push_back({{"machine", loads.machines[i]},
                   {"load", loads.loads[i].to_string()}});
  }
  return out;
}

ordered_json blocks_to_json(const AssignmentPlan& plan) {
  auto out = ordered_json::array();
  for (std::size_t f = 0; f < plan.blocks.size(); ++f) {
    ordered_json block;
    block["alpha"] = plan.blocks[f].alpha.to_string();
    block["machines"] = plan.blocks[f].machines;
    if (plan.materialized()) {
      const RowRange& r = plan.row_ranges[f];
      block["rows"] = {r.begin + 1, r.end};
    }
    out.push_back(std::move(block));
  }
  return out;
}

AssignmentPlan plan_from_json(const json& blocks, int split_factor,
                              std::size_t rows_per_block) {
  auto bad = [](const std::string& msg) {
    fail(ErrorKind::kInvalidArgument, "plan: " + msg);
  };
  if (!blocks.is_array()) bad("blocks must be an array");
  AssignmentPlan plan;
  plan.split_factor = split_factor;
  for (std::size_t f = 0; f < blocks.size(); ++f) {
    const json& b = blocks[f];
    const std::string where = "block " + std::to_string(f + 1);
    if (!b.is_object() || !b.contains("alpha") || !b.contains("machines") ||
        !b["alpha"].is_string() || !b["machines"].is_array()) {
      bad(where + " needs a string 'alpha' and a 'machines' array");
    }
    AssignmentBlock block;
    block.alpha = Rational::parse(b["alpha"].get<std::string>());
    for (const json& m : b["machines"]) {
      if (!m.is_number_integer()) bad(where + ": machine ids must be integers");
      block.machines.push_back(m.get<MachineId>());
    }
    plan.blocks.push_back(std::move(block));
    if (rows_per_block > 0) {
      if (!b.contains("rows") || !b["rows"].is_array() || b["rows"].size() != 2 ||
          !b["rows"][0].is_number_unsigned() || !b["rows"][1].is_number_unsigned()) {
        bad(where + " needs 'rows': [first, last]");
      }
      const auto first = b["rows"][0].get<std::size_t>();
      const auto last = b["rows"][1].get<std::size_t>();
      if (first == 0 || last + 1 < first) bad(where + ": malformed row interval");
      plan.row_ranges.push_back(RowRange{first - 1, last});
    }
  }
  if (rows_per_block > 0) {
    plan.rows_per_block = rows_per_block;
    derive_worksets(plan);
  }
  return plan;
}

ordered_json step_to_json(const StepReport& step) {
  ordered_json out;
  out["t"] = step.t;
  out["available"] = step.loads.machines;
  out["N_t"] = step.available_count();
  out["loads"] = loads_to_json(step.loads);
  out["c_star"] = step.c_star.to_string();
  out["k_star"] = step.k_star;
  out["F"] = step.block_count();
  auto counts = ordered_json::array();
  for (MachineId m : step.loads.machines) {
    counts.push_back({{"machine", m}, {"rows", step.plan.rows_of(m).size()}});
  }
  out["row_counts"] = std::move(counts);
  out["verified"] = step.verified;
  out["overlap"] = step.overlap.to_string();
  out["baseline_time"] = step.baseline_time.to_string();
  out["blocks"] = blocks_to_json(step.plan);
  return out;
}

}  // namespace hetcec::cli
