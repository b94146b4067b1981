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

// Competitive equilibrium: verification, price search by LP feasibility
// and exhaustive non-existence certificates.
//
// Two notions are kept apart. With arc prices alone every agent demands at
// p and the constraint plays no role in demands. With constraint rents, a
// multiplier mu_S >= 0 on each constraint row x(S) <= f(S) that is tight at
// the outcome is charged to sellers: the seller of arc e receives
// p_e - sum of mu_S over S containing e, the buyer pays p_e.

#ifndef CTN_EQUILIBRIUM_H_
#define CTN_EQUILIBRIUM_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctn/allocation.h"
#include "ctn/lp.h"

namespace ctn {

enum class PriceNotion { kArcPrices, kConstraintRents };
const char* ToString(PriceNotion notion);

struct PriceSystem {
  PriceNotion notion = PriceNotion::kArcPrices;
  RatVec p;  // per arc
  // (S, mu_S) for nonzero rents, ascending S.
  std::vector<std::pair<Subset, Rat>> rents;
};

// Per arc: sum of mu_S over S containing the arc.
RatVec ArcRents(const PriceSystem& ps, int num_arcs);
// Local prices of `agent` after charging rents to its sales.
RatVec EffectivePrices(const TradeGraph& g, int agent, const PriceSystem& ps);

struct AgentCheck {
  IntVec bundle;
  ExtRat surplus;
  DemandSet demand;
  bool in_demand = false;
};

struct CEReport {
  IntVec outcome;
  PriceSystem prices;
  std::vector<AgentCheck> agents;
  bool rents_nonnegative = true;
  // Every positive rent sits on a set tight at the outcome.
  bool complementary_slackness = true;
  bool verdict = false;
};

// Throws InfeasibleOutcomeError unless x respects capacities, the
// constraint when present, and every valuation is finite at x.
void CheckOutcome(const EAInstance& inst, const IntVec& x);

CEReport VerifyCompetitiveEquilibrium(const EAInstance& inst, const IntVec& x,
                                      const PriceSystem& ps);

struct PriceSearch {
  bool found = false;
  PriceSystem prices;
  // The feasibility system over (p, mu) and, when infeasible, its Farkas
  // certificate.
  LinearProgram program;
  LpResult certificate;
};

// Arc prices supporting x: one row per agent and alternative domain point,
// (y' - y).p <= w(y) - w(y').
PriceSearch FindArcPrices(const EAInstance& inst, const IntVec& x);
// As above with seller-side rents on the constraint rows tight at x. Throws
// PreconditionError when the instance has no constraint.
PriceSearch FindPricesWithRents(const EAInstance& inst, const IntVec& x);

struct OutcomeRefutation {
  IntVec outcome;
  PriceSearch arc_prices;
  std::optional<PriceSearch> rents;  // when constrained
};

struct NonexistenceResult {
  bool exists = false;
  IntVec outcome;        // when exists
  PriceSystem prices;    // when exists
  // Every search run, in outcome order; complete when !exists.
  std::vector<OutcomeRefutation> searches;
};

// Tries every feasible outcome with finite aggregate value in
// lexicographic order, arc prices first, then rents when constrained.
NonexistenceResult CertifyNonexistence(const EAInstance& inst);

// Re-checks every Farkas certificate in the result by exact arithmetic.
// Empty when all check.
std::string VerifyCertificates(const NonexistenceResult& r);

struct WelfareCheck {
  bool holds = false;
  ExtRat value;
  ExtRat optimum;
};

// Aggregate value at x against the integral optimum of the instance.
// Throws PreconditionError unless (x, ps) passes verification.
WelfareCheck CheckFirstWelfare(const EAInstance& inst, const IntVec& x,
                               const PriceSystem& ps);

}  // namespace ctn

#endif  // CTN_EQUILIBRIUM_H_
