// Copyright 2026 The Authors.
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

// Efficient allocation over a trading network under a polymatroid
// constraint on outcomes: the integral optimum by enumeration and the
// lottery relaxation, whose supports range over the whole capacity box
// while only the mean must satisfy the constraint.

#ifndef CTN_ALLOCATION_H_
#define CTN_ALLOCATION_H_

#include <optional>

#include "ctn/convexity.h"
#include "ctn/network.h"
#include "ctn/polymatroid.h"

namespace ctn {

struct SizeLimits {
  int max_arcs = 8;
  std::int64_t max_capacity = 3;
  std::size_t max_domain = 2000;
};

class EAInstance {
 public:
  // Throws ValidationError when the constraint's ground set is not the arc
  // set (same ids, same order).
  EAInstance(Economy economy, std::optional<Polymatroid> constraint);

  const Economy& economy() const { return economy_; }
  const TradeGraph& graph() const { return economy_.graph(); }
  bool has_constraint() const { return constraint_.has_value(); }
  const std::optional<Polymatroid>& constraint() const { return constraint_; }
  // The constraint, or the box polymatroid of the capacities.
  const Polymatroid& effective_constraint() const { return effective_; }

  // Throws SizeLimitError naming the first exceeded limit.
  void CheckSize(const SizeLimits& limits) const;

  // The capacity box in lexicographic order.
  std::vector<IntVec> BoxOutcomes() const;
  // Outcomes of the box that satisfy the constraint.
  std::vector<IntVec> FeasibleOutcomes() const;

 private:
  Economy economy_;
  std::optional<Polymatroid> constraint_;
  Polymatroid effective_;
};

struct IntegralSolution {
  // False when no feasible outcome has a finite aggregate value.
  bool feasible = false;
  ExtRat value = ExtRat::MinusInfinity();
  PointSet argmax;
};

struct RelaxationSolution {
  // False when no lottery over finite outcomes has its mean in the
  // constraint.
  bool feasible = false;
  Rat value;
  RatVec mean;
  LotteryWitness lottery;
};

struct SolveReport {
  IntegralSolution integral;
  RelaxationSolution fractional;
  // Relaxation strictly above the integral optimum (or the integral
  // problem infeasible while the relaxation is not).
  bool gap = false;
  double integral_ms = 0;
  double fractional_ms = 0;
};

class NoFiniteOutcomeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

IntegralSolution SolveIntegral(const EAInstance& inst,
                               const SizeLimits& limits = {});
// Throws NoFiniteOutcomeError when every box outcome has value -inf.
RelaxationSolution SolveRelaxation(const EAInstance& inst,
                                   const SizeLimits& limits = {});
SolveReport DetectGap(const EAInstance& inst, const SizeLimits& limits = {});

// Independent re-check of a relaxation witness: weights, mean, membership
// of the mean and the recomputed value. Empty when valid.
std::string VerifyRelaxation(const EAInstance& inst,
                             const RelaxationSolution& sol);

struct IntegerOptimalityCheck {
  bool holds = false;
  std::optional<Rat> integral;    // best f(z) over domain points in P
  std::optional<Rat> fractional;  // best lottery value with mean in P
  LotteryWitness lottery;
};

// Compares max f over the integer points of P with the relaxation over
// lotteries on dom f whose mean lies in P. Throws PreconditionError unless
// f is M-natural-concave with the polymatroid's dimension.
IntegerOptimalityCheck VerifyIntegerOptimality(const FiniteIntFunction& f,
                                               const Polymatroid& p);

}  // namespace ctn

#endif  // CTN_ALLOCATION_H_
