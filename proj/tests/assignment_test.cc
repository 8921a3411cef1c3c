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
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hetcec/error.hpp"
#include "testing/oracles.hpp"

namespace hetcec {
namespace {

using Blocks = std::vector<AssignmentBlock>;

LoadVector loads_of(std::vector<MachineId> machines,
                    std::initializer_list<std::pair<int, int>> mu, int l) {
  LoadVector out;
  out.machines = std::move(machines);
  for (auto [n, d] : mu) out.loads.emplace_back(n, d);
  out.split_factor = l;
  return out;
}

const LoadVector kStepTwo =
    loads_of({1, 2, 3, 5, 6}, {{2, 5}, {2, 5}, {3, 5}, {4, 5}, {4, 5}}, 3);

TEST(FillAssignmentTest, ReproducesReferenceTraceForOnePreemption) {
  std::vector<FillStep> trace;
  const AssignmentPlan plan = fill_assignment(kStepTwo, 3, &trace);
  const Blocks expected{{Rational(2, 5), {1, 5, 6}},
                        {Rational(1, 5), {2, 3, 6}},
                        {Rational(1, 5), {2, 3, 5}},
                        {Rational(1, 5), {3, 5, 6}}};
  EXPECT_EQ(plan.blocks, expected);

  ASSERT_EQ(trace.size(), 4u);
  EXPECT_EQ(trace[0].remaining_before, Rational(3));
  EXPECT_EQ(trace[1].remaining_before, Rational(9, 5));
  EXPECT_EQ(trace[2].remaining_before, Rational(6, 5));
  EXPECT_EQ(trace[3].remaining_before, Rational(3, 5));
  const std::vector<Rational> after_first{Rational(0), Rational(2, 5), Rational(3, 5),
                                          Rational(2, 5), Rational(2, 5)};
  const std::vector<Rational> after_second{Rational(0), Rational(1, 5), Rational(2, 5),
                                           Rational(2, 5), Rational(1, 5)};
  EXPECT_EQ(trace[0].residual_after, after_first);
  EXPECT_EQ(trace[1].residual_after, after_second);
  EXPECT_EQ(trace[3].residual_after, std::vector<Rational>(5, Rational(0)));
}

TEST(FillAssignmentTest, AllMachinesFullyLoaded) {
  const AssignmentPlan plan = fill_assignment(loads_of({2, 3, 5}, {{1, 1}, {1, 1}, {1, 1}}, 3), 3);
  EXPECT_EQ(plan.blocks, (Blocks{{Rational(1), {2, 3, 5}}}));
}

TEST(FillAssignmentTest, NoPreemption) {
  const AssignmentPlan plan = fill_assignment(
      loads_of({1, 2, 3, 4, 5, 6}, {{1, 3}, {1, 3}, {1, 2}, {1, 2}, {2, 3}, {2, 3}}, 3), 3);
  const Blocks expected{{Rational(1, 3), {1, 5, 6}},
                        {Rational(1, 3), {2, 3, 4}},
                        {Rational(1, 6), {3, 5, 6}},
                        {Rational(1, 6), {4, 5, 6}}};
  EXPECT_EQ(plan.blocks, expected);
}

TEST(FillAssignmentTest, TwoPreemptions) {
  const AssignmentPlan plan =
      fill_assignment(loads_of({1, 2, 3, 5}, {{4, 7}, {4, 7}, {6, 7}, {1, 1}}, 3), 3);
  const Blocks expected{{Rational(3, 7), {1, 3, 5}},
                        {Rational(1, 7), {1, 2, 5}},
                        {Rational(3, 7), {2, 3, 5}}};
  EXPECT_EQ(plan.blocks, expected);
}

TEST(FillAssignmentTest, SplitFactorOne) {
  const AssignmentPlan plan =
      fill_assignment(loads_of({1, 2, 3}, {{1, 4}, {1, 2}, {1, 4}}, 1), 1);
  Rational total;
  for (const auto& b : plan.blocks) {
    EXPECT_EQ(b.machines.size(), 1u);
    total += b.alpha;
  }
  EXPECT_EQ(total, Rational(1));
  EXPECT_TRUE(verify_assignment(plan, loads_of({1, 2, 3}, {{1, 4}, {1, 2}, {1, 4}}, 1), 1)
                  .passed());
}

TEST(FillAssignmentTest, ZeroLoadMachinesAreSkipped) {
  const LoadVector mu = loads_of({1, 2, 3, 4}, {{0, 1}, {1, 1}, {1, 1}, {1, 1}}, 3);
  const AssignmentPlan plan = fill_assignment(mu, 3);
  EXPECT_EQ(plan.blocks, (Blocks{{Rational(1), {2, 3, 4}}}));
}

TEST(FillAssignmentTest, RejectsInfeasibleLoads) {
  auto expect_infeasible = [](const LoadVector& mu) {
    try {
      fill_assignment(mu, 3);
      FAIL() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
    }
  };
  expect_infeasible(loads_of({1, 2, 3}, {{1, 1}, {1, 1}, {1, 2}}, 3));
  expect_infeasible(loads_of({1, 2, 3, 4}, {{3, 2}, {1, 2}, {1, 2}, {1, 2}}, 3));
  expect_infeasible(loads_of({1, 2, 3, 4}, {{-1, 2}, {1, 1}, {1, 1}, {3, 2}}, 3));
}

TEST(FillAssignmentTest, RejectsUnsortedMachines) {
  EXPECT_THROW(fill_assignment(loads_of({2, 1, 3}, {{1, 1}, {1, 1}, {1, 1}}, 3), 3), Error);
}

class FillPropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{77};

  // Optimal loads for a random instance, optionally padded with zero-load
  // machines.
  LoadVector random_loads(int* split) {
    const auto inst = testing::random_instance(rng_, 12, 6, 20);
    *split = inst.split_factor;
    const auto r = optimal_load(SpeedVector(inst.speeds),
                                AvailableSet(inst.available, inst.machine_count),
                                inst.split_factor);
    LoadVector mu = r.loads;
    if (std::bernoulli_distribution(0.2)(rng_)) {
      mu.machines.push_back(100);
      mu.loads.push_back(Rational(0));
    }
    return mu;
  }
};

TEST_F(FillPropertyTest, ExactRealizationCoverageAndBounds) {
  for (int trial = 0; trial < 1000; ++trial) {
    int split = 0;
    const LoadVector mu = random_loads(&split);
    std::vector<FillStep> trace;
    const AssignmentPlan plan = fill_assignment(mu, split, &trace);

    Rational alpha_sum;
    for (const auto& b : plan.blocks) {
      alpha_sum += b.alpha;
      EXPECT_GT(b.alpha, Rational(0));
      ASSERT_EQ(b.machines.size(), static_cast<std::size_t>(split));
      EXPECT_TRUE(std::adjacent_find(b.machines.begin(), b.machines.end()) ==
                  b.machines.end());
    }
    EXPECT_EQ(alpha_sum, Rational(1));
    for (std::size_t i = 0; i < mu.machines.size(); ++i) {
      EXPECT_EQ(plan.share(mu.machines[i]), mu.loads[i]);
    }
    EXPECT_LE(plan.blocks.size(), mu.machines.size());
    EXPECT_TRUE(verify_assignment(plan, mu, split).passed());

    // Each iteration removes L * alpha of the remaining load and leaves a
    // fillable residual (no entry above L'/L).
    for (std::size_t f = 0; f < trace.size(); ++f) {
      const Rational after = trace[f].remaining_before - Rational(split) * trace[f].alpha;
      const Rational next = f + 1 < trace.size() ? trace[f + 1].remaining_before : Rational(0);
      EXPECT_EQ(after, next);
      for (const Rational& m : trace[f].residual_after) {
        EXPECT_GE(m, Rational(0));
        EXPECT_LE(m * Rational(split), after);
      }
    }
  }
}

TEST(MaterializeRowsTest, ConsecutiveIntervals) {
  const AssignmentPlan plan = materialize_rows(fill_assignment(kStepTwo, 3), 30, 3);
  ASSERT_TRUE(plan.materialized());
  EXPECT_EQ(plan.rows_per_block, 10u);
  const std::vector<RowRange> expected{{0, 4}, {4, 6}, {6, 8}, {8, 10}};
  EXPECT_EQ(plan.row_ranges, expected);
  EXPECT_EQ(plan.rows_of(1), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(plan.rows_of(2), (std::vector<std::size_t>{4, 5, 6, 7}));
  EXPECT_EQ(plan.rows_of(6).size(), 8u);
  EXPECT_TRUE(plan.rows_of(4).empty());
}

TEST(MaterializeRowsTest, SingleBlock) {
  AssignmentPlan plan;
  plan.split_factor = 3;
  plan.blocks = {{Rational(1), {1, 2, 3}}};
  const AssignmentPlan out = materialize_rows(plan, 21, 3);
  EXPECT_EQ(out.row_ranges, (std::vector<RowRange>{{0, 7}}));
}

TEST(MaterializeRowsTest, NonIntegralBlockNamesRequiredMultiple) {
  const AssignmentPlan plan = fill_assignment(
      loads_of({1, 2, 3, 4, 5, 6}, {{1, 3}, {1, 3}, {1, 2}, {1, 2}, {2, 3}, {2, 3}}, 3), 3);
  EXPECT_EQ(min_rows_per_block(plan), 6u);
  try {
    materialize_rows(plan, 30, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
    EXPECT_NE(std::string(e.what()).find("multiple of 18"), std::string::npos) << e.what();
  }
  EXPECT_THROW(materialize_rows(plan, 19, 3), Error);
}

TEST(VerifyAssignmentTest, ReferencePlanPasses) {
  AssignmentPlan plan;
  plan.split_factor = 3;
  plan.blocks = {{Rational(2, 5), {1, 5, 6}},
                 {Rational(1, 5), {2, 3, 6}},
                 {Rational(1, 5), {2, 3, 5}},
                 {Rational(1, 5), {3, 5, 6}}};
  EXPECT_TRUE(verify_assignment(plan, kStepTwo, 3).passed());
  EXPECT_TRUE(verify_assignment(materialize_rows(plan, 15, 3), kStepTwo, 3).passed());
}

TEST(VerifyAssignmentTest, DroppedBlockFailsCoverage) {
  AssignmentPlan plan = materialize_rows(fill_assignment(kStepTwo, 3), 15, 3);
  plan.blocks.pop_back();
  plan.row_ranges.pop_back();
  derive_worksets(plan);
  const auto report = verify_assignment(plan, kStepTwo, 3);
  EXPECT_FALSE(report.passed());
  const bool mentions_coverage = std::any_of(
      report.failures.begin(), report.failures.end(),
      [](const std::string& f) { return f.find("not fully covered") != std::string::npos; });
  EXPECT_TRUE(mentions_coverage);
}

TEST(VerifyAssignmentTest, DuplicateMachineFails) {
  AssignmentPlan plan = fill_assignment(kStepTwo, 3);
  plan.blocks[0].machines = {1, 5, 5};
  const auto report = verify_assignment(plan, kStepTwo, 3);
  EXPECT_FALSE(report.passed());
  EXPECT_NE(report.failures.front().find("distinct"), std::string::npos);
}

TEST(VerifyAssignmentTest, UnavailableMachineAndShiftedRowsFail) {
  AssignmentPlan plan = fill_assignment(kStepTwo, 3);
  plan.blocks[0].machines = {1, 4, 6};
  EXPECT_FALSE(verify_assignment(plan, kStepTwo, 3).passed());

  AssignmentPlan rows = materialize_rows(fill_assignment(kStepTwo, 3), 15, 3);
  rows.row_ranges[1].begin += 1;
  derive_worksets(rows);
  EXPECT_FALSE(verify_assignment(rows, kStepTwo, 3).passed());
}

}  // namespace
}  // namespace hetcec
