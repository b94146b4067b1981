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

// Exact rational linear programming.
//
// SolveLp runs a two-phase revised simplex over GMP rationals with Bland's
// rule, so it always terminates and never needs a tolerance. Every result
// carries a certificate that VerifyLpResult can re-check by plain arithmetic:
//
//  * Optimal: a primal point and multipliers y (one per constraint and per
//    finite variable bound) with  c = sum_k y_k a_k  and  c.x = sum_k y_k b_k.
//    Sign convention (constraint read as "a.x REL b"):
//        maximize: y >= 0 on <=, y <= 0 on >=, free on =.
//        minimize: y <= 0 on <=, y >= 0 on >=, free on =.
//    Lower bounds count as ">=" and upper bounds as "<=".
//  * Infeasible: Farkas multipliers m with  sum_k m_k a_k = 0  and
//    sum_k m_k b_k = -1, where m >= 0 on <=, m <= 0 on >=, free on =.
//    Adding up the scaled constraints gives 0 <= -1.
//
// Results are deterministic: ties are broken by lowest index everywhere.

#ifndef CTN_LP_H_
#define CTN_LP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctn/rational.h"
#include "ctn/vec.h"

namespace ctn {

enum class Sense { kMaximize, kMinimize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LpTerm {
  int var;
  Rat coef;
};

struct LinearConstraint {
  std::vector<LpTerm> terms;
  Relation relation = Relation::kLessEqual;
  Rat rhs;
  std::string name;
};

struct VariableBounds {
  std::optional<Rat> lower;
  std::optional<Rat> upper;
};

class LinearProgram {
 public:
  Sense sense = Sense::kMaximize;

  int AddVariable(std::string name, Rat objective = 0,
                  std::optional<Rat> lower = Rat(0),
                  std::optional<Rat> upper = std::nullopt);
  int AddFreeVariable(std::string name, Rat objective = 0) {
    return AddVariable(std::move(name), std::move(objective), std::nullopt);
  }
  // Terms referring to the same variable are merged; zero terms dropped.
  // Throws std::out_of_range for unknown variables.
  int AddConstraint(std::vector<LpTerm> terms, Relation relation, Rat rhs,
                    std::string name = "");

  int num_variables() const { return static_cast<int>(names_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const RatVec& objective() const { return objective_; }
  const std::vector<VariableBounds>& bounds() const { return bounds_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  void set_objective(int var, Rat coef) { objective_.at(var) = std::move(coef); }

  // Plain-text dump mirroring the program's fields, for debugging.
  std::string Dump() const;

 private:
  std::vector<std::string> names_;
  RatVec objective_;
  std::vector<VariableBounds> bounds_;
  std::vector<LinearConstraint> constraints_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rat optimum;       // when kOptimal
  RatVec primal;     // when kOptimal (a feasible point when kUnbounded)
  // Optimal: dual multipliers. Infeasible: Farkas multipliers.
  RatVec row_multipliers;
  RatVec lower_bound_multipliers;  // zero where no lower bound
  RatVec upper_bound_multipliers;  // zero where no upper bound
  int pivots = 0;
};

LpResult SolveLp(const LinearProgram& lp);

// Re-checks a result's certificate with independent arithmetic. Returns an
// empty string when the certificate is valid, else a description.
std::string VerifyLpResult(const LinearProgram& lp, const LpResult& result);

struct FeasibilityResult {
  bool feasible = false;
  RatVec witness;              // when feasible
  LpResult certificate;        // Farkas multipliers when infeasible
};

// Feasibility of the program's constraints and bounds; the objective is
// ignored.
FeasibilityResult CheckFeasible(const LinearProgram& lp);

// Process-wide tallies of solves whose certificates were re-verified.
struct LpStats {
  std::uint64_t solves = 0;
  std::uint64_t optimal = 0;
  std::uint64_t infeasible = 0;
  std::uint64_t certificate_failures = 0;
};
LpStats GetLpStats();
void ResetLpStats();

}  // namespace ctn

#endif  // CTN_LP_H_
