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

#ifndef HETCEC_ASSIGNMENT_HPP_
#define HETCEC_ASSIGNMENT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "hetcec/load_optimizer.hpp"
#include "hetcec/mds_codec.hpp"
#include "hetcec/rational.hpp"

namespace hetcec {

// A fraction alpha of the coded rows, computed by exactly L machines.
struct AssignmentBlock {
  Rational alpha;
  std::vector<MachineId> machines;  // ascending

  friend bool operator==(const AssignmentBlock&, const AssignmentBlock&) = default;
};

// Half-open interval [begin, end) of 0-based coded row indices.
struct RowRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const RowRange&, const RowRange&) = default;
};

struct MachineWorkset {
  MachineId machine = 0;
  std::vector<std::size_t> rows;  // ascending
};

struct AssignmentPlan {
  int split_factor = 0;
  std::vector<AssignmentBlock> blocks;

  // Filled in by materialize_rows; empty before.
  std::size_t rows_per_block = 0;  // q/L
  std::vector<RowRange> row_ranges;      // parallel to blocks
  std::vector<MachineWorkset> worksets;  // ascending by machine

  bool materialized() const { return rows_per_block > 0; }

  // Sum of alpha over the blocks that include `machine`.
  Rational share(MachineId machine) const;

  // Empty if the plan is not materialized or the machine has no rows.
  const std::vector<std::size_t>& rows_of(MachineId machine) const;
};

// One iteration of the filling loop, recorded for inspection.
struct FillStep {
  Rational alpha;
  std::vector<MachineId> machines;
  Rational remaining_before;          // L' at the start of the iteration
  std::vector<Rational> residual_after;  // parallel to LoadVector::machines
};

// Splits the rows into blocks of L machines so that every machine n ends
// up with exactly loads[n] of the rows.
//
// Each iteration takes the non-zero residuals in ascending order (ties by
// ascending machine id), pairs the smallest one with the L-1 largest, and
// assigns them the largest fraction that keeps the remaining residuals
// fillable: min(L'/L - m[l[N'-L+1]], m[l[1]]) while more than L machines
// remain, all of m[l[1]] otherwise. Finishes in at most N_t iterations.
//
// Throws Error(kInfeasible) unless the loads sum to L and each lies in
// [0, 1]. Throws Error(kInternal) if a loop invariant breaks.
AssignmentPlan fill_assignment(const LoadVector& loads, int split_factor,
                               std::vector<FillStep>* trace = nullptr);

// Smallest q/L for which every block of `plan` covers a whole number of rows.
std::size_t min_rows_per_block(const AssignmentPlan& plan);

// Lays the blocks out as consecutive row intervals of sizes alpha_f * q/L
// and derives each machine's workset. Throws Error(kInfeasible) naming the
// required multiple if q is not divisible accordingly.
AssignmentPlan materialize_rows(AssignmentPlan plan, std::size_t rows,
                                int split_factor);

// Rebuilds plan.worksets from plan.row_ranges and the block machine sets.
void derive_worksets(AssignmentPlan& plan);

struct VerificationReport {
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Checks that the plan realises `loads` exactly with every row computed by
// exactly L distinct available machines and at most N_t blocks. Row-level
// checks run only for materialized plans.
VerificationReport verify_assignment(const AssignmentPlan& plan,
                                     const LoadVector& loads,
                                     int split_factor);

}  // namespace hetcec

#endif  // HETCEC_ASSIGNMENT_HPP_
