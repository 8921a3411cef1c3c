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
#include <numeric>
#include <string>
#include <utility>

#include "hetcec/error.hpp"

namespace hetcec {
namespace {

void require_enough(const AvailableSet& available, int split_factor) {
  if (split_factor < 1) {
    fail(ErrorKind::kInvalidArgument, "split factor must be positive");
  }
  if (available.size() < split_factor) {
    fail(ErrorKind::kInfeasible,
         std::to_string(available.size()) +
             " machines available, at least L=" + std::to_string(split_factor) +
             " required");
  }
}

// Available machines by ascending speed, ties by ascending id.
std::vector<MachineId> by_speed(const SpeedVector& speeds,
                                const AvailableSet& available) {
  std::vector<MachineId> order(available.machines().begin(),
                               available.machines().end());
  std::stable_sort(order.begin(), order.end(),
                   [&](MachineId a, MachineId b) {
                     return speeds.speed(a) < speeds.speed(b);
                   });
  return order;
}

}  // namespace

SpeedVector::SpeedVector(std::vector<Rational> speeds)
    : speeds_(std::move(speeds)) {
  if (speeds_.empty()) fail(ErrorKind::kInvalidArgument, "empty speed vector");
  for (std::size_t i = 0; i < speeds_.size(); ++i) {
    if (speeds_[i].sign() <= 0) {
      fail(ErrorKind::kInvalidArgument,
           "speed of machine " + std::to_string(i + 1) + " is " +
               speeds_[i].to_string() + ", must be positive");
    }
  }
}

const Rational& SpeedVector::speed(MachineId machine) const {
  if (machine < 1 || machine > machine_count()) {
    fail(ErrorKind::kInvalidArgument,
         "no speed for machine " + std::to_string(machine));
  }
  return speeds_[static_cast<std::size_t>(machine - 1)];
}

AvailableSet::AvailableSet(std::vector<MachineId> machines, int machine_count)
    : machines_(std::move(machines)) {
  std::sort(machines_.begin(), machines_.end());
  if (std::adjacent_find(machines_.begin(), machines_.end()) != machines_.end()) {
    fail(ErrorKind::kInvalidArgument, "duplicate machine in available set");
  }
  for (MachineId m : machines_) {
    if (m < 1 || m > machine_count) {
      fail(ErrorKind::kInvalidArgument,
           "machine " + std::to_string(m) + " outside [1, " +
               std::to_string(machine_count) + "]");
    }
  }
}

bool AvailableSet::contains(MachineId machine) const {
  return std::binary_search(machines_.begin(), machines_.end(), machine);
}

Rational LoadVector::load(MachineId machine) const {
  auto it = std::lower_bound(machines.begin(), machines.end(), machine);
  if (it == machines.end() || *it != machine) return Rational(0);
  return loads[static_cast<std::size_t>(it - machines.begin())];
}

Rational LoadVector::total() const {
  return std::accumulate(loads.begin(), loads.end(), Rational(0));
}

OptimizerResult optimal_load(const SpeedVector& speeds,
                             const AvailableSet& available, int split_factor) {
  require_enough(available, split_factor);
  const std::vector<MachineId> order = by_speed(speeds, available);
  const int n_avail = static_cast<int>(order.size());
  auto s = [&](int k) -> const Rational& {  // 1-based position in `order`
    return speeds.speed(order[static_cast<std::size_t>(k - 1)]);
  };

  std::vector<Rational> prefix(static_cast<std::size_t>(n_avail) + 1);
  for (int k = 1; k <= n_avail; ++k) prefix[k] = prefix[k - 1] + s(k);

  int k_star = 0;
  Rational c_star;
  for (int k = n_avail; k >= n_avail - split_factor + 1; --k) {
    const Rational c = Rational(k + split_factor - n_avail) / prefix[k];
    const bool upper = c <= s(k).reciprocal();
    const bool lower = k == n_avail || s(k + 1).reciprocal() < c;
    if (upper && lower) {
      k_star = k;
      c_star = c;
      break;
    }
  }
  HETCEC_CHECK(k_star > 0, "no k in [N_t-L+1, N_t] satisfies the bounds");

  OptimizerResult result;
  result.k_star = k_star;
  result.c_star = c_star;
  result.loads.split_factor = split_factor;
  result.loads.machines.assign(available.machines().begin(),
                               available.machines().end());
  result.loads.loads.assign(result.loads.machines.size(), Rational(1));
  for (int k = 1; k <= k_star; ++k) {
    const MachineId m = order[static_cast<std::size_t>(k - 1)];
    auto it = std::lower_bound(result.loads.machines.begin(),
                               result.loads.machines.end(), m);
    result.loads.loads[static_cast<std::size_t>(
        it - result.loads.machines.begin())] = c_star * s(k);
  }

  HETCEC_CHECK(result.loads.total() == Rational(split_factor),
               "loads sum to " + result.loads.total().to_string());
  return result;
}

Rational oracle_load(const SpeedVector& speeds, const AvailableSet& available,
                     int split_factor, int max_iterations) {
  require_enough(available, split_factor);
  auto feasible = [&](const Rational& c) {
    Rational covered;
    for (MachineId m : available.machines()) {
      covered += std::min(c * speeds.speed(m), Rational(1));
    }
    return covered >= Rational(split_factor);
  };

  // Candidates: the kinks 1/s[n], and for every count of saturated fastest
  // machines the point where the remaining linear piece reaches L. The
  // minimiser is one of them.
  std::vector<Rational> sorted_speeds;
  for (MachineId m : available.machines()) {
    sorted_speeds.push_back(speeds.speed(m));
  }
  std::sort(sorted_speeds.begin(), sorted_speeds.end());
  const int n_avail = available.size();
  std::vector<Rational> candidates;
  Rational slow_sum;
  for (int j = 1; j <= n_avail; ++j) {
    slow_sum += sorted_speeds[static_cast<std::size_t>(j - 1)];
    candidates.push_back(sorted_speeds[static_cast<std::size_t>(j - 1)].reciprocal());
    const int saturated = n_avail - j;
    if (saturated < split_factor) {
      candidates.push_back(Rational(split_factor - saturated) / slow_sum);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // Invariant: candidates[hi] is feasible; everything below lo is not.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  HETCEC_CHECK(feasible(candidates[hi]), "largest breakpoint infeasible");
  int iterations = 0;
  while (lo < hi) {
    if (++iterations > max_iterations) {
      fail(ErrorKind::kInternal, "oracle bisection did not converge");
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[hi];
}

Rational load_time(const LoadVector& loads, const SpeedVector& speeds) {
  if (loads.loads.size() != loads.machines.size()) {
    fail(ErrorKind::kInvalidArgument, "load vector shape mismatch");
  }
  Rational worst;
  for (std::size_t i = 0; i < loads.machines.size(); ++i) {
    worst = std::max(worst, loads.loads[i] / speeds.speed(loads.machines[i]));
  }
  return worst;
}

}  // namespace hetcec
