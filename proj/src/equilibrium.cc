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

#include "ctn/equilibrium.h"

#include <exception>

#include "ctn/errors.h"

namespace ctn {

const char* ToString(PriceNotion notion) {
  switch (notion) {
    case PriceNotion::kArcPrices:
      return "arc-prices";
    case PriceNotion::kConstraintRents:
      return "constraint-rents";
  }
  return "?";
}

RatVec ArcRents(const PriceSystem& ps, int num_arcs) {
  RatVec r(num_arcs, Rat(0));
  for (const auto& [s, mu] : ps.rents) {
    for (int e = 0; e < num_arcs; ++e) {
      if (s >> e & 1) r[e] += mu;
    }
  }
  return r;
}

RatVec EffectivePrices(const TradeGraph& g, int agent, const PriceSystem& ps) {
  const RatVec rent = ArcRents(ps, g.num_arcs());
  RatVec q;
  for (std::size_t e : g.incident(agent)) {
    q.push_back(g.Sign(agent, e) > 0 ? ps.p[e] - rent[e] : ps.p[e]);
  }
  return q;
}

void CheckOutcome(const EAInstance& inst, const IntVec& x) {
  const NetFlow y = OutcomeToNetFlow(inst.graph(), x);
  if (inst.has_constraint() &&
      !inst.constraint()->Contains(std::span<const std::int64_t>(x))) {
    throw InfeasibleOutcomeError("outcome " + Format(x) +
                                 " violates the constraint");
  }
  for (int i = 0; i < inst.graph().num_agents(); ++i) {
    if (!inst.economy().valuation(i)(y[i]).IsFinite()) {
      throw InfeasibleOutcomeError("outcome " + Format(x) + " is -inf for " +
                                   inst.graph().agents()[i]);
    }
  }
}

CEReport VerifyCompetitiveEquilibrium(const EAInstance& inst, const IntVec& x,
                                      const PriceSystem& ps) {
  CheckOutcome(inst, x);
  const TradeGraph& g = inst.graph();
  if (ps.p.size() != static_cast<std::size_t>(g.num_arcs())) {
    throw std::invalid_argument("price vector has wrong dimension");
  }
  CEReport report;
  report.outcome = x;
  report.prices = ps;
  for (const auto& [s, mu] : ps.rents) {
    if (mu.Sign() < 0) report.rents_nonnegative = false;
    if (mu.Sign() > 0 &&
        (!inst.has_constraint() ||
         SubsetSum(x, s) != inst.constraint()->fn()(s))) {
      report.complementary_slackness = false;
    }
  }
  const NetFlow y = OutcomeToNetFlow(g, x);
  report.verdict = report.rents_nonnegative && report.complementary_slackness;
  for (int i = 0; i < g.num_agents(); ++i) {
    const FiniteIntFunction& w = inst.economy().valuation(i);
    const RatVec q = EffectivePrices(g, i, ps);
    AgentCheck check;
    check.bundle = y[i];
    check.surplus = Surplus(w, y[i], q);
    check.demand = Demand(w, q);
    check.in_demand = check.demand.bundles.Contains(y[i]);
    report.verdict = report.verdict && check.in_demand;
    report.agents.push_back(std::move(check));
  }
  return report;
}

namespace {

PriceSearch SearchPrices(const EAInstance& inst, const IntVec& x,
                         bool rents) {
  CheckOutcome(inst, x);
  const TradeGraph& g = inst.graph();
  const NetFlow y = OutcomeToNetFlow(g, x);
  PriceSearch search;
  LinearProgram& lp = search.program;
  for (const Arc& a : g.arcs()) lp.AddFreeVariable("p_" + a.id);
  std::vector<std::pair<Subset, int>> mu;  // tight set -> column
  if (rents) {
    const SetFunction& f = inst.constraint()->fn();
    for (Subset s = 1; s <= f.full(); ++s) {
      if (SubsetSum(x, s) == f(s)) {
        mu.emplace_back(s, lp.AddVariable("mu" + f.SubsetToString(s)));
      }
    }
  }
  for (int i = 0; i < g.num_agents(); ++i) {
    const FiniteIntFunction& w = inst.economy().valuation(i);
    const Rat here = w(y[i]).value();
    const auto& inc = g.incident(i);
    for (const auto& [z, v] : w.entries()) {
      if (!v.IsFinite() || z == y[i]) continue;
      std::vector<LpTerm> terms;
      for (std::size_t k = 0; k < inc.size(); ++k) {
        const std::int64_t d = z[k] - y[i][k];
        if (d == 0) continue;
        terms.push_back({static_cast<int>(inc[k]), Rat(d)});
        if (g.Sign(i, inc[k]) < 0) continue;
        for (const auto& [s, col] : mu) {
          if (s >> inc[k] & 1) terms.push_back({col, Rat(-d)});
        }
      }
      lp.AddConstraint(std::move(terms), Relation::kLessEqual,
                       here - v.value(),
                       g.agents()[i] + ":" + Format(z));
    }
  }
  const FeasibilityResult r = CheckFeasible(lp);
  search.found = r.feasible;
  search.prices.notion =
      rents ? PriceNotion::kConstraintRents : PriceNotion::kArcPrices;
  if (r.feasible) {
    search.prices.p.assign(r.witness.begin(),
                           r.witness.begin() + g.num_arcs());
    for (const auto& [s, col] : mu) {
      if (!r.witness[col].IsZero()) {
        search.prices.rents.emplace_back(s, r.witness[col]);
      }
    }
  } else {
    search.certificate = r.certificate;
  }
  return search;
}

}  // namespace

PriceSearch FindArcPrices(const EAInstance& inst, const IntVec& x) {
  return SearchPrices(inst, x, /*rents=*/false);
}

PriceSearch FindPricesWithRents(const EAInstance& inst, const IntVec& x) {
  if (!inst.has_constraint()) {
    throw PreconditionError("rents need a constraint");
  }
  return SearchPrices(inst, x, /*rents=*/true);
}

NonexistenceResult CertifyNonexistence(const EAInstance& inst) {
  std::vector<IntVec> outcomes;
  for (IntVec& x : inst.FeasibleOutcomes()) {
    if (AggregateValue(inst.economy(), x).IsFinite()) {
      outcomes.push_back(std::move(x));
    }
  }
  NonexistenceResult result;
  result.searches.resize(outcomes.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    try {
      OutcomeRefutation& r = result.searches[i];
      r.outcome = outcomes[i];
      r.arc_prices = FindArcPrices(inst, outcomes[i]);
      if (inst.has_constraint()) {
        r.rents = FindPricesWithRents(inst, outcomes[i]);
      }
    } catch (...) {
#pragma omp critical(ctn_certify_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  for (const OutcomeRefutation& r : result.searches) {
    const PriceSearch* hit = nullptr;
    if (r.arc_prices.found) {
      hit = &r.arc_prices;
    } else if (r.rents && r.rents->found) {
      hit = &*r.rents;
    }
    if (hit) {
      result.exists = true;
      result.outcome = r.outcome;
      result.prices = hit->prices;
      break;
    }
  }
  return result;
}

std::string VerifyCertificates(const NonexistenceResult& r) {
  for (const OutcomeRefutation& o : r.searches) {
    for (const PriceSearch* s :
         {&o.arc_prices, o.rents ? &*o.rents : nullptr}) {
      if (s == nullptr || s->found) continue;
      if (s->certificate.status != LpStatus::kInfeasible) {
        return "outcome " + Format(o.outcome) + ": missing certificate";
      }
      const std::string err = VerifyLpResult(s->program, s->certificate);
      if (!err.empty()) return "outcome " + Format(o.outcome) + ": " + err;
    }
  }
  return "";
}

WelfareCheck CheckFirstWelfare(const EAInstance& inst, const IntVec& x,
                               const PriceSystem& ps) {
  if (!VerifyCompetitiveEquilibrium(inst, x, ps).verdict) {
    throw PreconditionError("not a competitive equilibrium");
  }
  WelfareCheck check;
  check.value = AggregateValue(inst.economy(), x);
  check.optimum = SolveIntegral(inst).value;
  check.holds = check.value == check.optimum;
  return check;
}

}  // namespace ctn
