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

#include "ctn/network.h"

#include <map>
#include <set>

#include "ctn/errors.h"
#include "ctn/kernels.h"
#include "ctn/lp.h"

namespace ctn {

TradeGraph::TradeGraph(std::vector<std::string> agents, std::vector<Arc> arcs)
    : arcs_(std::move(arcs)) {
  try {
    agents_ = IndexSet(std::move(agents));
  } catch (const std::invalid_argument& e) {
    throw ValidationError("agents", "duplicate agent id");
  }
  std::vector<std::string> ids;
  for (std::size_t e = 0; e < arcs_.size(); ++e) {
    const Arc& a = arcs_[e];
    const std::string path = "arcs[" + std::to_string(e) + "]";
    if (a.id.empty()) throw ValidationError(path + ".id", "empty arc id");
    if (!agents_.Contains(a.seller)) {
      throw ValidationError(path + ".seller", "unknown agent \"" + a.seller + "\"");
    }
    if (!agents_.Contains(a.buyer)) {
      throw ValidationError(path + ".buyer", "unknown agent \"" + a.buyer + "\"");
    }
    if (a.seller == a.buyer) {
      throw ValidationError(path, "seller and buyer coincide");
    }
    if (a.capacity < 1) {
      throw ValidationError(path + ".capacity", "capacity must be positive");
    }
    for (const std::string& id : ids) {
      if (id == a.id) {
        throw ValidationError(path + ".id", "duplicate arc id \"" + a.id + "\"");
      }
    }
    ids.push_back(a.id);
    seller_.push_back(static_cast<int>(agents_.Position(a.seller)));
    buyer_.push_back(static_cast<int>(agents_.Position(a.buyer)));
  }
  arc_index_ = IndexSet(std::move(ids));
  incident_.resize(agents_.size());
  for (std::size_t e = 0; e < arcs_.size(); ++e) {
    incident_[seller_[e]].push_back(e);
    incident_[buyer_[e]].push_back(e);
  }
}

int TradeGraph::AgentPosition(const std::string& name) const {
  return static_cast<int>(agents_.Position(name));
}

IndexSet TradeGraph::LocalIndex(int agent) const {
  std::vector<std::string> names;
  for (std::size_t e : incident_[agent]) names.push_back(arcs_[e].id);
  return IndexSet(std::move(names));
}

int TradeGraph::Sign(int agent, std::size_t e) const {
  if (seller_[e] == agent) return 1;
  if (buyer_[e] == agent) return -1;
  throw std::invalid_argument("agent does not touch arc " + arcs_[e].id);
}

IntVec TradeGraph::Capacities() const {
  IntVec caps;
  for (const Arc& a : arcs_) caps.push_back(a.capacity);
  return caps;
}

Economy::Economy(TradeGraph graph, std::vector<FiniteIntFunction> valuations)
    : graph_(std::move(graph)), valuations_(std::move(valuations)) {
  if (valuations_.size() != static_cast<std::size_t>(graph_.num_agents())) {
    throw ValidationError("valuations", "expected one valuation per agent");
  }
  for (int i = 0; i < graph_.num_agents(); ++i) {
    const std::string path = "valuations[agent=" + graph_.agents()[i] + "]";
    const IndexSet local = graph_.LocalIndex(i);
    if (!(valuations_[i].index() == local)) {
      throw ValidationError(path, "coordinates must be the incident arcs");
    }
    const auto& inc = graph_.incident(i);
    for (const auto& [z, v] : valuations_[i].entries()) {
      if (!v.IsFinite()) continue;
      for (std::size_t k = 0; k < z.size(); ++k) {
        const Arc& arc = graph_.arcs()[inc[k]];
        const std::int64_t signed_flow = graph_.Sign(i, inc[k]) * z[k];
        if (signed_flow < 0 || signed_flow > arc.capacity) {
          throw ValidationError(
              path + ".entries" + Format(z),
              "flow on " + arc.id + " breaks the " +
                  (graph_.Sign(i, inc[k]) > 0 ? "seller" : "buyer") +
                  " sign or capacity convention");
        }
      }
    }
  }
}

NetFlow OutcomeToNetFlow(const TradeGraph& g, const IntVec& x) {
  if (x.size() != static_cast<std::size_t>(g.num_arcs())) {
    throw InfeasibleOutcomeError("outcome has wrong dimension");
  }
  for (int e = 0; e < g.num_arcs(); ++e) {
    if (x[e] < 0 || x[e] > g.arcs()[e].capacity) {
      throw InfeasibleOutcomeError("outcome " + Format(x) +
                                   " exceeds the capacity of arc " +
                                   g.arcs()[e].id);
    }
  }
  NetFlow y(g.num_agents());
  for (int i = 0; i < g.num_agents(); ++i) {
    for (std::size_t e : g.incident(i)) y[i].push_back(g.Sign(i, e) * x[e]);
  }
  return y;
}

IntVec NetFlowToOutcome(const TradeGraph& g, const NetFlow& y) {
  if (y.size() != static_cast<std::size_t>(g.num_agents())) {
    throw InfeasibleOutcomeError("net flow has wrong number of agents");
  }
  std::vector<std::optional<std::int64_t>> seller_side(g.num_arcs());
  std::vector<std::optional<std::int64_t>> buyer_side(g.num_arcs());
  for (int i = 0; i < g.num_agents(); ++i) {
    const auto& inc = g.incident(i);
    if (y[i].size() != inc.size()) {
      throw InfeasibleOutcomeError("agent " + g.agents()[i] +
                                   " has wrong flow dimension");
    }
    for (std::size_t k = 0; k < inc.size(); ++k) {
      (g.Sign(i, inc[k]) > 0 ? seller_side : buyer_side)[inc[k]] = y[i][k];
    }
  }
  IntVec x(g.num_arcs());
  for (int e = 0; e < g.num_arcs(); ++e) {
    if (*seller_side[e] + *buyer_side[e] != 0 || *seller_side[e] < 0) {
      throw InfeasibleOutcomeError("flows on arc " + g.arcs()[e].id +
                                   " do not cancel");
    }
    x[e] = *seller_side[e];
  }
  return x;
}

RatVec LocalPrices(const TradeGraph& g, int agent, const RatVec& p) {
  RatVec q;
  for (std::size_t e : g.incident(agent)) q.push_back(p[e]);
  return q;
}

ExtRat Surplus(const FiniteIntFunction& w, const IntVec& y, const RatVec& q) {
  const ExtRat v = w(y);
  if (!v.IsFinite()) return v;
  return ExtRat(v.value() + Dot(q, y));
}

DemandSet Demand(const FiniteIntFunction& w, const RatVec& q) {
  std::vector<ExtRat> values;
  values.reserve(w.entries().size());
  for (const auto& [z, v] : w.entries()) {
    values.push_back(v.IsFinite() ? ExtRat(v.value() + Dot(q, z)) : v);
  }
  const ArgmaxResult best = parallel::Argmax(values);
  if (best.indices.empty()) {
    throw PreconditionError("valuation has no finite value");
  }
  DemandSet d;
  d.utility = best.best;
  std::vector<IntVec> pts;
  for (std::size_t i : best.indices) pts.push_back(w.entries()[i].first);
  d.bundles = PointSet(std::move(pts));
  return d;
}

ExtRat AggregateValue(const Economy& econ, const IntVec& x) {
  const NetFlow y = OutcomeToNetFlow(econ.graph(), x);
  ExtRat total(Rat(0));
  for (int i = 0; i < econ.graph().num_agents(); ++i) {
    total = total + econ.valuation(i)(y[i]);
    if (!total.IsFinite()) break;
  }
  return total;
}

const char* ToString(AgentRole role) {
  switch (role) {
    case AgentRole::kIsolated:
      return "isolated";
    case AgentRole::kSellerOnly:
      return "seller";
    case AgentRole::kBuyerOnly:
      return "buyer";
    case AgentRole::kBoth:
      return "both";
  }
  return "?";
}

namespace {

// Whether v = c.z + d for some c, d on every listed point.
bool IsAffine(const std::vector<std::pair<IntVec, Rat>>& table) {
  if (table.size() <= 1) return true;
  const std::size_t dim = table.front().first.size();
  LinearProgram lp;
  for (std::size_t k = 0; k < dim; ++k) lp.AddFreeVariable("c" + std::to_string(k));
  const int d = lp.AddFreeVariable("d");
  for (const auto& [z, v] : table) {
    std::vector<LpTerm> terms{{d, 1}};
    for (std::size_t k = 0; k < dim; ++k) {
      terms.push_back({static_cast<int>(k), Rat(z[k])});
    }
    lp.AddConstraint(terms, Relation::kEqual, v);
  }
  return CheckFeasible(lp).feasible;
}

bool IsMSharpConcaveTable(const std::vector<std::pair<IntVec, Rat>>& table) {
  if (table.empty()) return true;
  return !parallel::FirstExchangeViolation(ExchangeTable(table),
                                           ExchangeKind::kMSharp);
}

AgentStructure ClassifyAgent(const Economy& econ, int agent) {
  const TradeGraph& g = econ.graph();
  const FiniteIntFunction& w = econ.valuation(agent);
  const auto& inc = g.incident(agent);
  std::vector<std::size_t> out_pos, in_pos;
  for (std::size_t k = 0; k < inc.size(); ++k) {
    (g.Sign(agent, inc[k]) > 0 ? out_pos : in_pos).push_back(k);
  }
  AgentStructure s;
  if (inc.empty()) {
    s.role = AgentRole::kIsolated;
  } else if (in_pos.empty()) {
    s.role = AgentRole::kSellerOnly;
  } else if (out_pos.empty()) {
    s.role = AgentRole::kBuyerOnly;
  } else {
    s.role = AgentRole::kBoth;
  }

  auto project = [](const IntVec& z, const std::vector<std::size_t>& pos) {
    IntVec p;
    for (std::size_t k : pos) p.push_back(z[k]);
    return p;
  };
  // Finite table keyed by (outgoing part, incoming part).
  std::map<std::pair<IntVec, IntVec>, Rat> table;
  std::set<IntVec> outs, ins;
  for (const auto& [z, v] : w.entries()) {
    if (!v.IsFinite()) continue;
    IntVec a = project(z, out_pos), b = project(z, in_pos);
    outs.insert(a);
    ins.insert(b);
    table.emplace(std::make_pair(std::move(a), std::move(b)), v.value());
  }

  // Slices for the mixed condition.
  s.mixed = true;
  for (const IntVec& a : outs) {
    std::vector<std::pair<IntVec, Rat>> slice;
    for (const IntVec& b : ins) {
      if (auto it = table.find({a, b}); it != table.end()) {
        slice.emplace_back(b, it->second);
      }
    }
    s.mixed = s.mixed && IsAffine(slice);
  }
  for (const IntVec& b : ins) {
    std::vector<std::pair<IntVec, Rat>> slice;
    for (const IntVec& a : outs) {
      if (auto it = table.find({a, b}); it != table.end()) {
        slice.emplace_back(a, it->second);
      }
    }
    s.mixed = s.mixed && IsMSharpConcaveTable(slice);
  }

  if (table.size() != outs.size() * ins.size()) {
    s.separable = false;
    s.separability_detail = "domain is not a product of its projections";
    return s;
  }
  const IntVec& a0 = *outs.begin();
  const IntVec& b0 = *ins.begin();
  const Rat base = table.at({a0, b0});
  for (const auto& [key, v] : table) {
    const Rat split = table.at({key.first, b0}) + table.at({a0, key.second}) - base;
    if (v != split) {
      s.separable = false;
      s.separability_detail = "rectangle identity fails at outgoing " +
                              Format(key.first) + ", incoming " +
                              Format(key.second);
      return s;
    }
  }
  s.separable = true;
  s.separability_detail = (out_pos.empty() || in_pos.empty())
                              ? "one side empty"
                              : "rectangle identity holds";
  std::vector<std::pair<IntVec, Rat>> out_part, in_part;
  for (const IntVec& a : outs) out_part.emplace_back(a, table.at({a, b0}));
  for (const IntVec& b : ins) in_part.emplace_back(b, table.at({a0, b}));
  s.outgoing_linear = IsAffine(out_part);
  s.incoming_linear = IsAffine(in_part);
  s.outgoing_msharp_concave = IsMSharpConcaveTable(out_part);
  s.incoming_msharp_concave = IsMSharpConcaveTable(in_part);
  return s;
}

}  // namespace

StructureReport ClassifyStructure(const Economy& econ) {
  StructureReport r;
  r.two_sided = true;
  r.all_separable = true;
  r.outgoing_msharp_incoming_linear = true;
  r.outgoing_linear_incoming_msharp = true;
  for (int i = 0; i < econ.graph().num_agents(); ++i) {
    AgentStructure s = ClassifyAgent(econ, i);
    r.two_sided = r.two_sided && s.role != AgentRole::kBoth;
    r.all_separable = r.all_separable && s.separable;
    r.outgoing_msharp_incoming_linear = r.outgoing_msharp_incoming_linear &&
                                        s.separable &&
                                        s.outgoing_msharp_concave &&
                                        s.incoming_linear;
    r.outgoing_linear_incoming_msharp = r.outgoing_linear_incoming_msharp &&
                                        s.separable && s.outgoing_linear &&
                                        s.incoming_msharp_concave;
    r.agents.push_back(std::move(s));
  }
  r.integrality_hypotheses =
      r.all_separable &&
      (r.outgoing_msharp_incoming_linear || r.outgoing_linear_incoming_msharp);
  return r;
}

}  // namespace ctn
