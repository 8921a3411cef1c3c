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

#ifndef HETCEC_LOAD_OPTIMIZER_HPP_
#define HETCEC_LOAD_OPTIMIZER_HPP_

#include <span>
#include <vector>

#include "hetcec/mds_codec.hpp"
#include "hetcec/rational.hpp"

namespace hetcec {

// Per-machine computation speeds (rows per unit time) for machines 1..N.
class SpeedVector {
 public:
  // Throws Error(kInvalidArgument) if empty or any speed is not positive.
  explicit SpeedVector(std::vector<Rational> speeds);

  int machine_count() const { return static_cast<int>(speeds_.size()); }
  const Rational& speed(MachineId machine) const;
  std::span<const Rational> values() const { return speeds_; }

 private:
  std::vector<Rational> speeds_;
};

// Machines available in one time step. Stored sorted and unique.
class AvailableSet {
 public:
  // Throws Error(kInvalidArgument) on duplicates or ids outside [1, N].
  AvailableSet(std::vector<MachineId> machines, int machine_count);

  std::span<const MachineId> machines() const { return machines_; }
  int size() const { return static_cast<int>(machines_.size()); }
  bool contains(MachineId machine) const;

 private:
  std::vector<MachineId> machines_;
};

// Fraction of the q/L coded rows each available machine computes.
// Preempted machines are simply absent.
struct LoadVector {
  std::vector<MachineId> machines;  // ascending
  std::vector<Rational> loads;      // parallel to machines
  int split_factor = 0;

  // Zero for machines not in the vector.
  Rational load(MachineId machine) const;
  Rational total() const;
};

struct OptimizerResult {
  LoadVector loads;
  Rational c_star;
  // Number of slowest machines that finish exactly at c_star.
  int k_star = 0;
};

// Optimal load vector and completion time.
//
// Machines are ordered by ascending speed (ties by ascending id). For
// k = N_t down to N_t - L + 1 the candidate time is
//
//   c_k = (k + L - N_t) / (s[1] + ... + s[k])
//
// and k* is the largest k with 1/s[k+1] < c_k <= 1/s[k] (the left bound is
// dropped for k = N_t). The k* slowest machines get load c_k* * s[n]; the
// others are saturated at 1. With N_t = L every machine gets load 1.
//
// Throws Error(kInfeasible) if fewer than L machines are available.
OptimizerResult optimal_load(const SpeedVector& speeds,
                             const AvailableSet& available, int split_factor);

// Independent check of optimal_load's c_star, working from the relaxed
// problem directly: the smallest c with sum_n min(c * s[n], 1) >= L.
// The minimiser lies on a breakpoint of the piecewise-linear left side, so
// the search bisects over the sorted set of candidate breakpoints with an
// exact feasibility test. Throws Error(kInternal) if `max_iterations`
// bisection steps do not suffice.
Rational oracle_load(const SpeedVector& speeds, const AvailableSet& available,
                     int split_factor, int max_iterations = 64);

// max_n load[n] / s[n]. Throws Error(kInvalidArgument) if a machine of the
// load vector has no speed.
Rational load_time(const LoadVector& loads, const SpeedVector& speeds);

}  // namespace hetcec

#endif  // HETCEC_LOAD_OPTIMIZER_HPP_
