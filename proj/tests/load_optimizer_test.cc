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

#include "hetcec/load_optimizer.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "hetcec/error.hpp"
#include "testing/oracles.hpp"

namespace hetcec {
namespace {

std::vector<Rational> ints(std::initializer_list<int> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

std::vector<Rational> fracs(std::initializer_list<std::pair<int, int>> v) {
  std::vector<Rational> out;
  for (auto [n, d] : v) out.emplace_back(n, d);
  return out;
}

const SpeedVector kReferenceSpeeds(ints({2, 2, 3, 3, 4, 4}));

TEST(OptimalLoadTest, AllSixAvailable) {
  const auto r = optimal_load(kReferenceSpeeds, AvailableSet({1, 2, 3, 4, 5, 6}, 6), 3);
  EXPECT_EQ(r.k_star, 6);
  EXPECT_EQ(r.c_star, Rational(1, 6));
  EXPECT_EQ(r.loads.loads, fracs({{1, 3}, {1, 3}, {1, 2}, {1, 2}, {2, 3}, {2, 3}}));
  EXPECT_EQ(r.loads.machines, (std::vector<MachineId>{1, 2, 3, 4, 5, 6}));
}

TEST(OptimalLoadTest, MachineFourPreempted) {
  const auto r = optimal_load(kReferenceSpeeds, AvailableSet({1, 2, 3, 5, 6}, 6), 3);
  EXPECT_EQ(r.k_star, 5);
  EXPECT_EQ(r.c_star, Rational(1, 5));
  EXPECT_EQ(r.loads.machines, (std::vector<MachineId>{1, 2, 3, 5, 6}));
  EXPECT_EQ(r.loads.loads, fracs({{2, 5}, {2, 5}, {3, 5}, {4, 5}, {4, 5}}));
  EXPECT_EQ(r.loads.load(4), Rational(0));
}

TEST(OptimalLoadTest, FastestMachineSaturates) {
  const auto r = optimal_load(kReferenceSpeeds, AvailableSet({1, 2, 3, 5}, 6), 3);
  EXPECT_EQ(r.k_star, 3);
  EXPECT_EQ(r.c_star, Rational(2, 7));
  EXPECT_EQ(r.loads.loads, fracs({{4, 7}, {4, 7}, {6, 7}, {1, 1}}));
}

TEST(OptimalLoadTest, ExactlyLAvailable) {
  const auto r = optimal_load(kReferenceSpeeds, AvailableSet({2, 3, 5}, 6), 3);
  EXPECT_EQ(r.loads.loads, ints({1, 1, 1}));
  EXPECT_EQ(r.c_star, Rational(1, 2));
  EXPECT_GE(r.k_star, 1);
  EXPECT_LE(r.k_star, 3);
}

TEST(OptimalLoadTest, StrictLowerBoundAtTie) {
  // k=2 would give c = 1/2 = 1/s[3]; the strict bound rejects it and k=3
  // holds with equality on the right.
  const auto r = optimal_load(SpeedVector(ints({1, 1, 2})), AvailableSet({1, 2, 3}, 3), 2);
  EXPECT_EQ(r.k_star, 3);
  EXPECT_EQ(r.c_star, Rational(1, 2));
  EXPECT_EQ(r.loads.loads, fracs({{1, 2}, {1, 2}, {1, 1}}));
}

TEST(OptimalLoadTest, UnsortedIdsAndRationalSpeeds) {
  const SpeedVector s(fracs({{4, 1}, {1, 2}, {3, 2}, {4, 1}}));
  const auto r = optimal_load(s, AvailableSet({4, 1, 2, 3}, 4), 2);
  EXPECT_EQ(r.loads.total(), Rational(2));
  EXPECT_EQ(load_time(r.loads, s), r.c_star);
  EXPECT_EQ(r.c_star, oracle_load(s, AvailableSet({1, 2, 3, 4}, 4), 2));
}

TEST(OptimalLoadTest, TooFewMachines) {
  try {
    optimal_load(kReferenceSpeeds, AvailableSet({1, 2}, 6), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
  }
}

TEST(SpeedVectorTest, RejectsNonPositive) {
  EXPECT_THROW(SpeedVector(ints({1, 0, 2})), Error);
  EXPECT_THROW(SpeedVector(fracs({{-1, 2}})), Error);
  EXPECT_THROW(SpeedVector({}), Error);
}

TEST(AvailableSetTest, Validation) {
  EXPECT_THROW(AvailableSet({1, 1}, 3), Error);
  EXPECT_THROW(AvailableSet({0, 1}, 3), Error);
  EXPECT_THROW(AvailableSet({4}, 3), Error);
  const AvailableSet a({3, 1}, 3);
  EXPECT_TRUE(a.contains(1));
  EXPECT_FALSE(a.contains(2));
  EXPECT_EQ(a.machines()[0], 1);
}

TEST(OracleLoadTest, Examples) {
  EXPECT_EQ(oracle_load(kReferenceSpeeds, AvailableSet({1, 2, 3, 4, 5, 6}, 6), 3),
            Rational(1, 6));
  EXPECT_EQ(oracle_load(SpeedVector(ints({1, 1, 1, 1})),
                        AvailableSet({1, 2, 3, 4}, 4), 4),
            Rational(1));
  EXPECT_THROW(oracle_load(kReferenceSpeeds, AvailableSet({1}, 6), 3), Error);
}

TEST(OracleLoadTest, IterationCapIsEnforced) {
  EXPECT_THROW(oracle_load(kReferenceSpeeds, AvailableSet({1, 2, 3, 4, 5, 6}, 6), 3, 0),
               Error);
}

TEST(LoadTimeTest, Examples) {
  LoadVector mu{{1, 2, 3, 4, 5, 6},
                fracs({{1, 3}, {1, 3}, {1, 2}, {1, 2}, {2, 3}, {2, 3}}),
                3};
  EXPECT_EQ(load_time(mu, kReferenceSpeeds), Rational(1, 6));
  LoadVector zeros{{1, 2, 3}, ints({0, 0, 0}), 3};
  EXPECT_EQ(load_time(zeros, kReferenceSpeeds), Rational(0));
  LoadVector ones{{1, 2, 3}, ints({1, 1, 1}), 3};
  EXPECT_EQ(load_time(ones, SpeedVector(ints({2, 3, 4}))), Rational(1, 2));
  LoadVector unknown{{7}, ints({1}), 1};
  EXPECT_THROW(load_time(unknown, kReferenceSpeeds), Error);
  LoadVector ragged{{1, 2}, ints({1}), 1};
  EXPECT_THROW(load_time(ragged, kReferenceSpeeds), Error);
}

class OptimizerPropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{20260415};
};

TEST_F(OptimizerPropertyTest, FeasibleOptimalAndOfTheoremForm) {
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = testing::random_instance(rng_, 12, 6, 20);
    const SpeedVector s(inst.speeds);
    const AvailableSet avail(inst.available, inst.machine_count);
    const auto r = optimal_load(s, avail, inst.split_factor);
    const int n_avail = avail.size();

    EXPECT_EQ(r.loads.total(), Rational(inst.split_factor));
    for (const Rational& mu : r.loads.loads) {
      EXPECT_GE(mu, Rational(0));
      EXPECT_LE(mu, Rational(1));
      // Filling condition: mu <= (sum mu) / L.
      EXPECT_LE(mu, r.loads.total() / Rational(inst.split_factor));
    }
    EXPECT_EQ(load_time(r.loads, s), r.c_star);
    EXPECT_EQ(r.c_star, oracle_load(s, avail, inst.split_factor));
    EXPECT_GE(r.k_star, n_avail - inst.split_factor + 1);
    EXPECT_LE(r.k_star, n_avail);

    std::vector<MachineId> order(inst.available);
    std::stable_sort(order.begin(), order.end(), [&](MachineId a, MachineId b) {
      return s.speed(a) < s.speed(b);
    });
    for (int pos = 0; pos < n_avail; ++pos) {
      const MachineId m = order[static_cast<std::size_t>(pos)];
      if (pos < r.k_star) {
        EXPECT_EQ(r.loads.load(m), r.c_star * s.speed(m));
      } else {
        EXPECT_EQ(r.loads.load(m), Rational(1));
      }
    }
  }
}

TEST_F(OptimizerPropertyTest, ScalingSpeedsScalesTime) {
  const std::vector<Rational> gammas{Rational(3, 2), Rational(7), Rational(1, 5)};
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = testing::random_instance(rng_, 10, 5, 20);
    const AvailableSet avail(inst.available, inst.machine_count);
    const auto base = optimal_load(SpeedVector(inst.speeds), avail, inst.split_factor);
    for (const Rational& gamma : gammas) {
      std::vector<Rational> scaled;
      for (const Rational& v : inst.speeds) scaled.push_back(v * gamma);
      const auto r = optimal_load(SpeedVector(scaled), avail, inst.split_factor);
      EXPECT_EQ(r.c_star, base.c_star / gamma);
      EXPECT_EQ(r.loads.loads, base.loads.loads);
    }
  }
}

TEST_F(OptimizerPropertyTest, EqualSpeedsSplitEvenly) {
  for (int n_avail = 1; n_avail <= 12; ++n_avail) {
    for (int l = 1; l <= n_avail; ++l) {
      std::vector<MachineId> ids;
      for (int i = 1; i <= n_avail; ++i) ids.push_back(i);
      const auto r = optimal_load(SpeedVector(std::vector<Rational>(n_avail, Rational(5))),
                                  AvailableSet(ids, n_avail), l);
      for (const Rational& mu : r.loads.loads) EXPECT_EQ(mu, Rational(l, n_avail));
    }
  }
}

}  // namespace
}  // namespace hetcec
