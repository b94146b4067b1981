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

// Trading networks: agents joined by directed arcs (seller -> buyer), the
// map from outcomes (copies traded per arc) to per-agent signed net flows,
// quasi-linear surplus and demand, and structural classification of the
// valuations.
//
// Agent i sees its incident arcs in global arc order. In its net flow a
// sold arc carries +x_e and a bought arc -x_e, so the transfer at prices p
// is the single inner product p.y.

#ifndef CTN_NETWORK_H_
#define CTN_NETWORK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ctn/convexity.h"
#include "ctn/rational.h"
#include "ctn/vec.h"

namespace ctn {

struct Arc {
  std::string id;
  std::string seller;
  std::string buyer;
  std::int64_t capacity = 1;
};

class TradeGraph {
 public:
  // Throws ValidationError (with a path such as "arcs[2].buyer") on
  // duplicate ids, unknown agents, self-loops or capacities below 1.
  TradeGraph(std::vector<std::string> agents, std::vector<Arc> arcs);

  const std::vector<std::string>& agents() const { return agents_.names(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int num_agents() const { return static_cast<int>(agents_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const IndexSet& arc_index() const { return arc_index_; }
  // Throws std::out_of_range.
  int AgentPosition(const std::string& name) const;

  // Global positions of the arcs touching `agent`, ascending.
  const std::vector<std::size_t>& incident(int agent) const {
    return incident_[agent];
  }
  // Local coordinate names of `agent`: its incident arc ids.
  IndexSet LocalIndex(int agent) const;
  // +1 when `agent` sells arc `e`, -1 when it buys.
  int Sign(int agent, std::size_t e) const;
  int seller(std::size_t e) const { return seller_[e]; }
  int buyer(std::size_t e) const { return buyer_[e]; }
  IntVec Capacities() const;

 private:
  IndexSet agents_;
  std::vector<Arc> arcs_;
  IndexSet arc_index_;
  std::vector<int> seller_;
  std::vector<int> buyer_;
  std::vector<std::vector<std::size_t>> incident_;
};

// One valuation per agent, over that agent's local coordinates.
class Economy {
 public:
  // Throws ValidationError ("valuations[i]...") when a table's coordinates
  // differ from the agent's incident arcs or a domain point breaks the sign
  // or capacity conventions.
  Economy(TradeGraph graph, std::vector<FiniteIntFunction> valuations);

  const TradeGraph& graph() const { return graph_; }
  const FiniteIntFunction& valuation(int agent) const {
    return valuations_[agent];
  }
  const std::vector<FiniteIntFunction>& valuations() const {
    return valuations_;
  }

 private:
  TradeGraph graph_;
  std::vector<FiniteIntFunction> valuations_;
};

// Per-agent signed flows, indexed by agent then local coordinate.
using NetFlow = std::vector<IntVec>;

// Throws InfeasibleOutcomeError when x leaves [0, capacity].
NetFlow OutcomeToNetFlow(const TradeGraph& g, const IntVec& x);
// Throws InfeasibleOutcomeError when the two endpoint flows of some arc do
// not cancel or violate sign conventions.
IntVec NetFlowToOutcome(const TradeGraph& g, const NetFlow& y);

// Restriction of arc prices to an agent's local coordinates.
RatVec LocalPrices(const TradeGraph& g, int agent, const RatVec& p);

// w(y) + q.y with local prices q; -inf when y is off the domain.
ExtRat Surplus(const FiniteIntFunction& w, const IntVec& y, const RatVec& q);

struct DemandSet {
  ExtRat utility = ExtRat::MinusInfinity();
  PointSet bundles;
};

// Every domain point maximizing surplus at local prices q. Throws
// PreconditionError when the valuation has no finite value.
DemandSet Demand(const FiniteIntFunction& w, const RatVec& q);

// Sum of valuations at the outcome's net flows, -inf if any is off-domain.
ExtRat AggregateValue(const Economy& econ, const IntVec& x);

enum class AgentRole { kIsolated, kSellerOnly, kBuyerOnly, kBoth };
const char* ToString(AgentRole role);

struct AgentStructure {
  AgentRole role = AgentRole::kIsolated;
  // Product domain over the outgoing/incoming split and the rectangle
  // identity w(a,b) + w(a',b') = w(a,b') + w(a',b).
  bool separable = false;
  std::string separability_detail;
  // Meaningful only when separable.
  bool outgoing_msharp_concave = false;
  bool outgoing_linear = false;
  bool incoming_msharp_concave = false;
  bool incoming_linear = false;
  // Every incoming slice linear and every outgoing slice M-natural-concave.
  bool mixed = false;
};

struct StructureReport {
  std::vector<AgentStructure> agents;
  bool two_sided = false;       // nobody both buys and sells
  bool all_separable = false;
  // Uniform orientation across all agents.
  bool outgoing_msharp_incoming_linear = false;
  bool outgoing_linear_incoming_msharp = false;
  // all_separable and one of the two orientations.
  bool integrality_hypotheses = false;
};

StructureReport ClassifyStructure(const Economy& econ);

}  // namespace ctn

#endif  // CTN_NETWORK_H_
