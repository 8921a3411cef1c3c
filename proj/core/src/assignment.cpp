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

#include "hetcec/assignment.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "hetcec/error.hpp"

namespace hetcec {
namespace {

void check_fillable(const LoadVector& loads, int split_factor) {
  if (split_factor < 1) {
    fail(ErrorKind::kInvalidArgument, "split factor must be positive");
  }
  if (loads.loads.size() != loads.machines.size()) {
    fail(ErrorKind::kInvalidArgument, "load vector shape mismatch");
  }
  if (!std::is_sorted(loads.machines.begin(), loads.machines.end()) ||
      std::adjacent_find(loads.machines.begin(), loads.machines.end()) !=
          loads.machines.end()) {
    fail(ErrorKind::kInvalidArgument, "load vector machines must be ascending");
  }
  for (std::size_t i = 0; i < loads.loads.size(); ++i) {
    if (loads.loads[i] < Rational(0) || loads.loads[i] > Rational(1)) {
      fail(ErrorKind::kInfeasible,
           "load of machine " + std::to_string(loads.machines[i]) + " is " +
               loads.loads[i].to_string() + ", outside [0, 1]");
    }
  }
  if (loads.total() != Rational(split_factor)) {
    fail(ErrorKind::kInfeasible, "loads sum to " + loads.total().to_string() +
                                     ", expected L=" +
                                     std::to_string(split_factor));
  }
}

std::string join(const std::vector<MachineId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ids[i]);
  }
  return out + "}";
}

}  // namespace

Rational AssignmentPlan::share(MachineId machine) const {
  Rational total;
  for (const AssignmentBlock& b : blocks) {
    if (std::find(b.machines.begin(), b.machines.end(), machine) !=
        b.machines.end()) {
      total += b.alpha;
    }
  }
  return total;
}

const std::vector<std::size_t>& AssignmentPlan::rows_of(MachineId machine) const {
  static const std::vector<std::size_t> kEmpty;
  auto it = std::lower_bound(
      worksets.begin(), worksets.end(), machine,
      [](const MachineWorkset& w, MachineId m) { return w.machine < m; });
  if (it == worksets.end() || it->machine != machine) return kEmpty;
  return it->rows;
}

AssignmentPlan fill_assignment(const LoadVector& loads, int split_factor,
                               std::vector<FillStep>* trace) {
  check_fillable(loads, split_factor);
  const std::size_t n_avail = loads.machines.size();
  const auto big_l = static_cast<std::size_t>(split_factor);

  AssignmentPlan plan;
  plan.split_factor = split_factor;
  std::vector<Rational> residual = loads.loads;

  // Positions (into loads.machines) of non-zero residuals, ascending by
  // (residual, machine id).
  std::vector<std::size_t> order;
  for (;;) {
    order.clear();
    for (std::size_t i = 0; i < n_avail; ++i) {
      if (!residual[i].is_zero()) order.push_back(i);
    }
    if (order.empty()) break;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (residual[a] != residual[b]) return residual[a] < residual[b];
      return loads.machines[a] < loads.machines[b];
    });

    HETCEC_CHECK(plan.blocks.size() < n_avail,
                 "filling did not finish within N_t iterations");
    const std::size_t active = order.size();
    HETCEC_CHECK(active >= big_l,
                 std::to_string(active) + " machines with residual load, L=" +
                     std::to_string(split_factor));

    const Rational remaining =
        std::accumulate(residual.begin(), residual.end(), Rational(0));
    const Rational smallest = residual[order.front()];

    std::vector<std::size_t> chosen{order.front()};
    for (std::size_t j = active - big_l + 1; j < active; ++j) {
      chosen.push_back(order[j]);
    }

    Rational alpha = smallest;
    if (active >= big_l + 1) {
      // order[active - L] is the largest residual left out of the block.
      alpha = std::min(remaining / Rational(split_factor) -
                           residual[order[active - big_l]],
                       smallest);
    }
    HETCEC_CHECK(alpha > Rational(0),
                 "block fraction " + alpha.to_string() + " is not positive");

    AssignmentBlock block;
    block.alpha = alpha;
    for (std::size_t pos : chosen) {
      residual[pos] -= alpha;
      HETCEC_CHECK(residual[pos] >= Rational(0), "negative residual");
      block.machines.push_back(loads.machines[pos]);
    }
    std::sort(block.machines.begin(), block.machines.end());

    if (trace != nullptr) {
      trace->push_back(FillStep{alpha, block.machines, remaining, residual});
    }
    plan.blocks.push_back(std::move(block));
  }
  return plan;
}

std::size_t min_rows_per_block(const AssignmentPlan& plan) {
  std::int64_t lcm = 1;
  for (const AssignmentBlock& b : plan.blocks) {
    lcm = checked_lcm(lcm, b.alpha.den());
  }
  return static_cast<std::size_t>(lcm);
}

AssignmentPlan materialize_rows(AssignmentPlan plan, std::size_t rows,
                                int split_factor) {
  if (split_factor < 1 || plan.split_factor != split_factor) {
    fail(ErrorKind::kInvalidArgument, "split factor does not match the plan");
  }
  const auto big_l = static_cast<std::size_t>(split_factor);
  const std::size_t required = min_rows_per_block(plan);
  const std::size_t per_block = rows / big_l;
  if (rows == 0 || rows % big_l != 0 || per_block % required != 0) {
    fail(ErrorKind::kInfeasible,
         "q=" + std::to_string(rows) +
             " cannot be split into whole row blocks; q must be a multiple of " +
             std::to_string(required * big_l));
  }

  plan.rows_per_block = per_block;
  plan.row_ranges.clear();
  std::size_t next = 0;
  for (const AssignmentBlock& b : plan.blocks) {
    const Rational size = b.alpha * Rational(static_cast<std::int64_t>(per_block));
    HETCEC_CHECK(size.is_integer(), "fractional block size");
    plan.row_ranges.push_back(
        RowRange{next, next + static_cast<std::size_t>(size.num())});
    next = plan.row_ranges.back().end;
  }
  HETCEC_CHECK(next == per_block, "blocks do not cover all rows");
  derive_worksets(plan);
  return plan;
}

void derive_worksets(AssignmentPlan& plan) {
  if (plan.row_ranges.size() != plan.blocks.size()) {
    fail(ErrorKind::kInvalidArgument, "row range count does not match block count");
  }
  std::map<MachineId, std::vector<std::size_t>> rows_by_machine;
  for (std::size_t f = 0; f < plan.blocks.size(); ++f) {
    const RowRange& range = plan.row_ranges[f];
    for (MachineId m : plan.blocks[f].machines) {
      auto& w = rows_by_machine[m];
      for (std::size_t i = range.begin; i < range.end; ++i) w.push_back(i);
    }
  }
  plan.worksets.clear();
  for (auto& [machine, w] : rows_by_machine) {
    std::sort(w.begin(), w.end());
    plan.worksets.push_back(MachineWorkset{machine, std::move(w)});
  }
}

VerificationReport verify_assignment(const AssignmentPlan& plan,
                                     const LoadVector& loads,
                                     int split_factor) {
  VerificationReport report;
  auto fail_with = [&](std::string msg) {
    report.failures.push_back(std::move(msg));
  };
  const std::set<MachineId> available(loads.machines.begin(),
                                      loads.machines.end());

  if (plan.blocks.size() > loads.machines.size()) {
    fail_with("plan has " + std::to_string(plan.blocks.size()) +
              " blocks, more than N_t=" + std::to_string(loads.machines.size()));
  }
  Rational alpha_sum;
  for (std::size_t f = 0; f < plan.blocks.size(); ++f) {
    const AssignmentBlock& b = plan.blocks[f];
    const std::string where = "block " + std::to_string(f + 1);
    alpha_sum += b.alpha;
    if (b.alpha <= Rational(0)) {
      fail_with(where + ": fraction " + b.alpha.to_string() + " not positive");
    }
    const std::set<MachineId> distinct(b.machines.begin(), b.machines.end());
    if (distinct.size() != b.machines.size() ||
        b.machines.size() != static_cast<std::size_t>(split_factor)) {
      fail_with(where + ": machine set " + join(b.machines) +
                " is not L=" + std::to_string(split_factor) +
                " distinct machines");
    }
    for (MachineId m : distinct) {
      if (!available.contains(m)) {
        fail_with(where + ": machine " + std::to_string(m) + " not available");
      }
    }
  }
  if (alpha_sum != Rational(1)) {
    fail_with("block fractions sum to " + alpha_sum.to_string() +
              ", rows not fully covered");
  }
  for (std::size_t i = 0; i < loads.machines.size(); ++i) {
    const Rational got = plan.share(loads.machines[i]);
    if (got != loads.loads[i]) {
      fail_with("machine " + std::to_string(loads.machines[i]) + " assigned " +
                got.to_string() + ", load is " + loads.loads[i].to_string());
    }
  }

  if (!plan.materialized()) return report;

  const std::size_t per_block = plan.rows_per_block;
  if (plan.row_ranges.size() != plan.blocks.size()) {
    fail_with("row range count does not match block count");
    return report;
  }
  std::vector<int> coverage(per_block, 0);
  std::size_t expected_begin = 0;
  for (std::size_t f = 0; f < plan.blocks.size(); ++f) {
    const RowRange& r = plan.row_ranges[f];
    const std::string where = "block " + std::to_string(f + 1);
    if (r.begin != expected_begin || r.end < r.begin || r.end > per_block) {
      fail_with(where + ": row range overlaps or leaves a gap");
    }
    expected_begin = r.end;
    const Rational expected_size =
        plan.blocks[f].alpha * Rational(static_cast<std::int64_t>(per_block));
    if (expected_size != Rational(static_cast<std::int64_t>(r.size()))) {
      fail_with(where + ": " + std::to_string(r.size()) + " rows, fraction " +
                plan.blocks[f].alpha.to_string() + " of " +
                std::to_string(per_block));
    }
  }
  if (expected_begin != per_block) {
    fail_with("row ranges do not reach the last row");
  }
  for (const MachineWorkset& w : plan.worksets) {
    for (std::size_t row : w.rows) {
      if (row >= per_block) {
        fail_with("machine " + std::to_string(w.machine) + " has row " +
                  std::to_string(row) + " out of range");
        continue;
      }
      ++coverage[row];
    }
  }
  for (std::size_t row = 0; row < per_block; ++row) {
    if (coverage[row] != split_factor) {
      fail_with("row " + std::to_string(row) + " computed by " +
                std::to_string(coverage[row]) + " machines, expected " +
                std::to_string(split_factor));
      break;
    }
  }
  for (std::size_t i = 0; i < loads.machines.size(); ++i) {
    const auto count = static_cast<std::int64_t>(plan.rows_of(loads.machines[i]).size());
    if (Rational(count) !=
        loads.loads[i] * Rational(static_cast<std::int64_t>(per_block))) {
      fail_with("machine " + std::to_string(loads.machines[i]) + " holds " +
                std::to_string(count) + " rows, load " +
                loads.loads[i].to_string() + " of " + std::to_string(per_block));
    }
  }
  return report;
}

}  // namespace hetcec
