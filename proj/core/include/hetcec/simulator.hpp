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

#ifndef HETCEC_SIMULATOR_HPP_
#define HETCEC_SIMULATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hetcec/assignment.hpp"
#include "hetcec/field.hpp"
#include "hetcec/load_optimizer.hpp"
#include "hetcec/mds_codec.hpp"
#include "hetcec/rational.hpp"

namespace hetcec {

struct ElasticEvent {
  int t = 0;
  std::vector<MachineId> available;
};

// Upper bound on an auto-sized q/L. Timelines whose block fractions need
// more rows than this fail with kInfeasible and must set q explicitly.
inline constexpr std::int64_t kMaxAutoRowsPerBlock = std::int64_t{1} << 20;

struct Timeline {
  int machine_count = 0;  // N
  int split_factor = 0;   // L
  // q. When absent (and no data is given) it is chosen as L times the LCM
  // of every block-fraction denominator across all steps, capped at
  // kMaxAutoRowsPerBlock rows per block.
  std::optional<std::size_t> rows;
  std::size_t cols = 0;  // r
  std::vector<Rational> speeds;
  std::vector<ElasticEvent> events;  // strictly increasing t
  // Generated from `seed` when absent.
  std::optional<FieldMatrix> data;
  // One query per event, or empty to generate them from `seed`.
  std::vector<FieldVector> queries;
  std::uint64_t seed = 0;
  // Run the per-machine partial products of a step on separate threads.
  bool parallel = false;
};

struct StepReport {
  int t = 0;
  LoadVector loads;
  Rational c_star;
  int k_star = 0;
  AssignmentPlan plan;  // materialized
  bool verified = false;
  // Fraction of this step's (row, machine) pairs also present in the
  // previous step. Zero for the first step.
  Rational overlap;
  Rational baseline_time;

  int available_count() const { return static_cast<int>(loads.machines.size()); }
  std::size_t block_count() const { return plan.blocks.size(); }
};

struct RunReport {
  std::size_t rows = 0;  // resolved q
  std::size_t cols = 0;
  std::uint64_t seed = 0;
  std::vector<StepReport> steps;
};

// Runs every event: optimal loads, filling, row layout, coded partial
// products on each available machine, decoding, and an exact comparison
// of the decoded y_t with X w_t.
//
// Errors raised while handling an event carry its t in Error::step().
RunReport run_timeline(const Timeline& timeline);

// L times the LCM of every block-fraction denominator in `plans`: the
// smallest q at which all of them materialize. Throws kInfeasible above
// kMaxAutoRowsPerBlock rows per block.
std::size_t auto_row_count(const std::vector<AssignmentPlan>& plans,
                           int split_factor);

// Equal-load reconstruction of the homogeneous cyclic scheme: N_t groups of
// rows, group j handled by machines j..j+L-1 (cyclically) of the available
// set. Every machine gets L/N_t.
struct BaselineResult {
  LoadVector loads;
  AssignmentPlan plan;  // fractions only
  Rational time;
};

BaselineResult cyclic_baseline(const AvailableSet& available, int split_factor,
                               const SpeedVector& speeds);

// |retained (row, machine) pairs| / |current pairs|; zero when previous is
// null. Both plans must be materialized over the same q/L.
Rational overlap_metric(const AssignmentPlan* previous,
                        const AssignmentPlan& current);

// Per-step CSV with header
// t,N_t,c_star_num,c_star_den,F,baseline_num,baseline_den,overlap_num,overlap_den,verified
void write_steps_csv(std::ostream& out, const RunReport& report);

// Deterministic pseudorandom field data used when a timeline leaves the
// matrix or queries unspecified.
FieldMatrix random_matrix(std::size_t rows, std::size_t cols,
                          std::uint64_t seed);
std::vector<FieldVector> random_queries(std::size_t count, std::size_t cols,
                                        std::uint64_t seed);

}  // namespace hetcec

#endif  // HETCEC_SIMULATOR_HPP_
