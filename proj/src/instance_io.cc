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

#include "ctn/instance_io.h"

#include <fstream>
#include <set>

#include "ctn/errors.h"

namespace ctn {
namespace {

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void CheckKeys(const Json& j, const std::string& path,
               std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ValidationError(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) {
      throw ValidationError(path.empty() ? key : path + "." + key,
                            "unknown key");
    }
  }
}

const Json& Require(const Json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) {
    throw ValidationError(path, std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

std::string Join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string AsString(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ValidationError(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t AsInt(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ValidationError(path, "expected an integer");
  return j.get<std::int64_t>();
}

const Json& AsArray(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path, "expected an array");
  return j;
}

ExtRat AsValue(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return ExtRat(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return ExtRat::Parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(path, e.what());
    }
  }
  throw ValidationError(path, "expected an integer or a \"p/q\" string");
}

Rat AsRat(const Json& j, const std::string& path) {
  const ExtRat v = AsValue(j, path);
  if (!v.IsFinite()) throw ValidationError(path, "expected a finite value");
  return v.value();
}

std::vector<std::string> AsStrings(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  const Json& arr = AsArray(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(AsString(arr[i], Index(path, i)));
  }
  return out;
}

IndexSet AsIndexSet(const Json& j, const std::string& path) {
  try {
    return IndexSet(AsStrings(j, path));
  } catch (const ValidationError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ValidationError(path, e.what());
  }
}

FiniteIntFunction ParseTable(const Json& j, const std::string& path) {
  CheckKeys(j, path, {"coordinates", "entries"});
  const std::string cpath = Join(path, "coordinates");
  const IndexSet index = AsIndexSet(Require(j, path, "coordinates"), cpath);
  const std::string epath = Join(path, "entries");
  const Json& entries = AsArray(Require(j, path, "entries"), epath);
  if (entries.empty()) throw ValidationError(epath, "empty table");
  std::vector<std::pair<IntVec, ExtRat>> rows;
  std::set<IntVec> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string rpath = Index(epath, i);
    CheckKeys(entries[i], rpath, {"point", "value"});
    const std::string ppath = Join(rpath, "point");
    const Json& point = AsArray(Require(entries[i], rpath, "point"), ppath);
    if (point.size() != index.size()) {
      throw ValidationError(ppath, "expected " + std::to_string(index.size()) +
                                       " coordinates");
    }
    IntVec z;
    for (std::size_t k = 0; k < point.size(); ++k) {
      z.push_back(AsInt(point[k], Index(ppath, k)));
    }
    if (!seen.insert(z).second) throw ValidationError(rpath, "duplicate point");
    rows.emplace_back(std::move(z), AsValue(Require(entries[i], rpath, "value"),
                                            Join(rpath, "value")));
  }
  return FiniteIntFunction(index, std::move(rows));
}

NamedPointSet ParsePointSet(const Json& j, const std::string& path) {
  CheckKeys(j, path, {"coordinates", "points"});
  NamedPointSet out;
  out.coordinates =
      AsIndexSet(Require(j, path, "coordinates"), Join(path, "coordinates"));
  const std::string ppath = Join(path, "points");
  const Json& pts = AsArray(Require(j, path, "points"), ppath);
  std::vector<IntVec> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Json& p = AsArray(pts[i], Index(ppath, i));
    if (p.size() != out.coordinates.size()) {
      throw ValidationError(Index(ppath, i), "wrong number of coordinates");
    }
    IntVec z;
    for (std::size_t k = 0; k < p.size(); ++k) {
      z.push_back(AsInt(p[k], Index(Index(ppath, i), k)));
    }
    points.push_back(std::move(z));
  }
  out.points = PointSet(std::move(points));
  return out;
}

Polymatroid ParseConstraint(const Json& j, const TradeGraph& g) {
  const std::string path = "constraint";
  const IndexSet& ground = g.arc_index();
  SetFunction f(ground, std::vector<std::int64_t>(std::size_t{1} << ground.size(), 0));
  if (j.is_array()) {
    std::vector<std::pair<std::vector<std::string>, std::int64_t>> entries;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string rpath = Index(path, i);
      CheckKeys(j[i], rpath, {"subset", "value"});
      entries.emplace_back(
          AsStrings(Require(j[i], rpath, "subset"), Join(rpath, "subset")),
          AsInt(Require(j[i], rpath, "value"), Join(rpath, "value")));
    }
    try {
      f = SetFunction::FromEntries(ground, entries);
    } catch (const ValidationError& e) {
      const std::string what = e.what();
      const std::string msg =
          e.path().empty() ? what : what.substr(e.path().size() + 2);
      throw ValidationError(path + e.path(), msg);
    }
  } else if (j.is_object()) {
    CheckKeys(j, path, {"type", "caps", "global", "groups"});
    if (AsString(Require(j, path, "type"), path + ".type") !=
        "cardinality-cap") {
      throw ValidationError(path + ".type", "unknown constraint type");
    }
    IntVec caps = g.Capacities();
    if (j.contains("caps")) {
      const Json& c = j.at("caps");
      if (!c.is_object()) throw ValidationError(path + ".caps", "expected an object");
      for (const auto& [arc, cap] : c.items()) {
        const std::string cpath = path + ".caps." + arc;
        if (!ground.Contains(arc)) throw ValidationError(cpath, "unknown arc");
        const std::int64_t v = AsInt(cap, cpath);
        if (v < 0) throw ValidationError(cpath, "cap must be nonnegative");
        caps[ground.Position(arc)] = std::min(v, caps[ground.Position(arc)]);
      }
    }
    std::vector<std::pair<Subset, std::int64_t>> groups;
    if (j.contains("global")) {
      groups.emplace_back(f.full(), AsInt(j.at("global"), path + ".global"));
    }
    if (j.contains("groups")) {
      const Json& gs = AsArray(j.at("groups"), path + ".groups");
      for (std::size_t i = 0; i < gs.size(); ++i) {
        const std::string gpath = Index(path + ".groups", i);
        CheckKeys(gs[i], gpath, {"arcs", "cap"});
        Subset s = 0;
        for (const std::string& arc :
             AsStrings(Require(gs[i], gpath, "arcs"), gpath + ".arcs")) {
          if (!ground.Contains(arc)) {
            throw ValidationError(gpath + ".arcs", "unknown arc \"" + arc + "\"");
          }
          s |= Subset{1} << ground.Position(arc);
        }
        groups.emplace_back(s, AsInt(Require(gs[i], gpath, "cap"), gpath + ".cap"));
      }
    }
    for (const auto& [s, cap] : groups) {
      if (cap < 0) throw ValidationError(path, "group cap must be nonnegative");
    }
    f = SetFunction::CapacityCaps(ground, caps, groups);
  } else {
    throw ValidationError(path, "expected a subset list or a shorthand object");
  }
  try {
    return Polymatroid::Create(std::move(f));
  } catch (const PreconditionError& e) {
    throw ValidationError(path, e.what());
  }
}

EAInstance ParseInstance(const Json& doc) {
  const std::vector<std::string> agents =
      AsStrings(Require(doc, "", "agents"), "agents");
  std::vector<Arc> arcs;
  const Json& jarcs = AsArray(Require(doc, "", "arcs"), "arcs");
  for (std::size_t i = 0; i < jarcs.size(); ++i) {
    const std::string path = Index("arcs", i);
    CheckKeys(jarcs[i], path, {"id", "seller", "buyer", "capacity"});
    Arc a;
    a.id = AsString(Require(jarcs[i], path, "id"), path + ".id");
    a.seller = AsString(Require(jarcs[i], path, "seller"), path + ".seller");
    a.buyer = AsString(Require(jarcs[i], path, "buyer"), path + ".buyer");
    if (jarcs[i].contains("capacity")) {
      a.capacity = AsInt(jarcs[i].at("capacity"), path + ".capacity");
    }
    arcs.push_back(std::move(a));
  }
  TradeGraph g(agents, std::move(arcs));

  std::vector<std::optional<FiniteIntFunction>> ws(g.num_agents());
  const Json& jvals = AsArray(Require(doc, "", "valuations"), "valuations");
  for (std::size_t i = 0; i < jvals.size(); ++i) {
    const std::string path = Index("valuations", i);
    CheckKeys(jvals[i], path, {"agent", "entries"});
    const std::string apath = path + ".agent";
    const std::string agent = AsString(Require(jvals[i], path, "agent"), apath);
    int pos = 0;
    try {
      pos = g.AgentPosition(agent);
    } catch (const std::out_of_range&) {
      throw ValidationError(apath, "unknown agent \"" + agent + "\"");
    }
    if (ws[pos]) throw ValidationError(apath, "second valuation for " + agent);
    const IndexSet local = g.LocalIndex(pos);
    const auto& inc = g.incident(pos);
    const std::string epath = path + ".entries";
    const Json& entries = AsArray(Require(jvals[i], path, "entries"), epath);
    if (entries.empty()) throw ValidationError(epath, "empty table");
    std::vector<std::pair<IntVec, ExtRat>> rows;
    std::set<IntVec> seen;
    for (std::size_t r = 0; r < entries.size(); ++r) {
      const std::string rpath = Index(epath, r);
      CheckKeys(entries[r], rpath, {"flows", "value"});
      const ExtRat value =
          AsValue(Require(entries[r], rpath, "value"), rpath + ".value");
      IntVec z(local.size(), 0);
      if (entries[r].contains("flows")) {
        const Json& flows = entries[r].at("flows");
        if (!flows.is_object()) {
          throw ValidationError(rpath + ".flows", "expected an object");
        }
        for (const auto& [arc, amount] : flows.items()) {
          const std::string fpath = rpath + ".flows." + arc;
          if (!local.Contains(arc)) {
            throw ValidationError(fpath, "arc is not incident to " + agent);
          }
          const std::size_t k = local.Position(arc);
          z[k] = AsInt(amount, fpath);
          const std::int64_t signed_flow = g.Sign(pos, inc[k]) * z[k];
          if (value.IsFinite() &&
              (signed_flow < 0 || signed_flow > g.arcs()[inc[k]].capacity)) {
            throw ValidationError(
                fpath, g.Sign(pos, inc[k]) > 0
                           ? "seller flow must lie in [0, capacity]"
                           : "buyer flow must lie in [-capacity, 0]");
          }
        }
      }
      if (!seen.insert(z).second) {
        throw ValidationError(rpath, "duplicate point " + Format(z));
      }
      rows.emplace_back(std::move(z), value);
    }
    ws[pos] = FiniteIntFunction(local, std::move(rows));
  }
  std::vector<FiniteIntFunction> valuations;
  for (int i = 0; i < g.num_agents(); ++i) {
    if (!ws[i]) {
      throw ValidationError("valuations", "no valuation for agent " +
                                              g.agents()[i]);
    }
    valuations.push_back(std::move(*ws[i]));
  }
  std::optional<Polymatroid> p;
  if (doc.contains("constraint") && !doc.at("constraint").is_null()) {
    p = ParseConstraint(doc.at("constraint"), g);
  }
  return EAInstance(Economy(std::move(g), std::move(valuations)), std::move(p));
}

Json SubsetJson(const SetFunction& f, Subset s) {
  Json out = Json::array();
  for (const std::string& name : f.Names(s)) out.push_back(name);
  return out;
}

}  // namespace

InstanceDocument ParseDocument(const Json& doc) {
  CheckKeys(doc, "", {"agents", "arcs", "valuations", "constraint", "tables",
                      "point_sets"});
  InstanceDocument out;
  if (doc.contains("agents") || doc.contains("arcs") ||
      doc.contains("valuations") || doc.contains("constraint")) {
    out.instance = ParseInstance(doc);
  }
  if (doc.contains("tables")) {
    const Json& t = doc.at("tables");
    if (!t.is_object()) throw ValidationError("tables", "expected an object");
    for (const auto& [name, table] : t.items()) {
      out.tables.emplace(name, ParseTable(table, "tables." + name));
    }
  }
  if (doc.contains("point_sets")) {
    const Json& t = doc.at("point_sets");
    if (!t.is_object()) {
      throw ValidationError("point_sets", "expected an object");
    }
    for (const auto& [name, set] : t.items()) {
      out.point_sets.emplace(name, ParsePointSet(set, "point_sets." + name));
    }
  }
  return out;
}

InstanceDocument LoadDocument(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("", "cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("", std::string("malformed JSON: ") + e.what());
  }
  return ParseDocument(doc);
}

Json InstanceToJson(const EAInstance& inst) {
  const TradeGraph& g = inst.graph();
  Json doc;
  doc["agents"] = g.agents();
  doc["arcs"] = Json::array();
  for (const Arc& a : g.arcs()) {
    doc["arcs"].push_back({{"id", a.id},
                           {"seller", a.seller},
                           {"buyer", a.buyer},
                           {"capacity", a.capacity}});
  }
  doc["valuations"] = Json::array();
  for (int i = 0; i < g.num_agents(); ++i) {
    const FiniteIntFunction& w = inst.economy().valuation(i);
    Json entries = Json::array();
    for (const auto& [z, v] : w.entries()) {
      Json flows = Json::object();
      for (std::size_t k = 0; k < z.size(); ++k) flows[w.index().name(k)] = z[k];
      entries.push_back({{"flows", flows}, {"value", ToJson(v)}});
    }
    doc["valuations"].push_back({{"agent", g.agents()[i]}, {"entries", entries}});
  }
  if (inst.has_constraint()) {
    const SetFunction& f = inst.constraint()->fn();
    doc["constraint"] = Json::array();
    for (Subset s = 0; s <= f.full(); ++s) {
      doc["constraint"].push_back({{"subset", SubsetJson(f, s)}, {"value", f(s)}});
    }
  }
  return doc;
}

FiniteIntFunction LookupTable(const InstanceDocument& doc,
                              const std::string& name) {
  if (auto it = doc.tables.find(name); it != doc.tables.end()) {
    return it->second;
  }
  if (doc.instance) {
    const TradeGraph& g = doc.instance->graph();
    for (int i = 0; i < g.num_agents(); ++i) {
      if (g.agents()[i] == name) return doc.instance->economy().valuation(i);
    }
    if (name.size() > 1 && name[0] == 'w' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      const int k = std::stoi(name.substr(1));
      if (k >= 1 && k <= g.num_agents()) {
        return doc.instance->economy().valuation(k - 1);
      }
    }
  }
  throw ValidationError("tables", "no table named \"" + name + "\"");
}

NamedPointSet LookupPointSet(const InstanceDocument& doc,
                             const std::string& name) {
  if (auto it = doc.point_sets.find(name); it != doc.point_sets.end()) {
    return it->second;
  }
  const FiniteIntFunction f = LookupTable(doc, name);
  return {f.index(), f.EffectiveDomain()};
}

Json ToJson(const Rat& r) { return r.ToString(); }
Json ToJson(const ExtRat& r) { return r.ToString(); }

Json ToJson(const IntVec& v) {
  Json out = Json::array();
  for (std::int64_t x : v) out.push_back(x);
  return out;
}

Json ToJson(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(x.ToString());
  return out;
}

Json ToJson(const PointSet& s) {
  Json out = Json::array();
  for (const IntVec& z : s.points()) out.push_back(ToJson(z));
  return out;
}

Json ToJson(const LotteryWitness& w) {
  Json support = Json::array();
  for (const auto& [z, weight] : w.support) {
    support.push_back({{"point", ToJson(z)}, {"weight", ToJson(weight)}});
  }
  return {{"target", ToJson(w.target)},
          {"value", ToJson(w.value)},
          {"support", support}};
}

Json ToJson(const ConvexityCheck& c) {
  Json out = {{"holds", c.holds}};
  if (!c.reason.empty()) out["reason"] = c.reason;
  if (c.counterexample) {
    out["counterexample"] = {{"x", ToJson(c.counterexample->x)},
                             {"y", ToJson(c.counterexample->y)},
                             {"u", c.counterexample->u}};
  }
  return out;
}

Json ToJson(const LinearProgram& lp) {
  Json vars = Json::array();
  for (int v = 0; v < lp.num_variables(); ++v) {
    const VariableBounds& b = lp.bounds()[v];
    vars.push_back({{"name", lp.variable_names()[v]},
                    {"objective", ToJson(lp.objective()[v])},
                    {"lower", b.lower ? ToJson(*b.lower) : Json(nullptr)},
                    {"upper", b.upper ? ToJson(*b.upper) : Json(nullptr)}});
  }
  Json rows = Json::array();
  for (const LinearConstraint& c : lp.constraints()) {
    Json terms = Json::array();
    for (const LpTerm& t : c.terms) {
      terms.push_back({{"var", t.var}, {"coef", ToJson(t.coef)}});
    }
    rows.push_back({{"name", c.name},
                    {"terms", terms},
                    {"relation", c.relation == Relation::kLessEqual ? "<="
                                 : c.relation == Relation::kEqual   ? "="
                                                                    : ">="},
                    {"rhs", ToJson(c.rhs)}});
  }
  return {{"sense", lp.sense == Sense::kMaximize ? "max" : "min"},
          {"variables", vars},
          {"constraints", rows}};
}

Json ToJson(const LpResult& r) {
  Json out = {{"status", ToString(r.status)}};
  if (r.status == LpStatus::kOptimal) {
    out["optimum"] = ToJson(r.optimum);
    out["primal"] = ToJson(r.primal);
  }
  out["row_multipliers"] = ToJson(r.row_multipliers);
  out["lower_bound_multipliers"] = ToJson(r.lower_bound_multipliers);
  out["upper_bound_multipliers"] = ToJson(r.upper_bound_multipliers);
  return out;
}

LinearProgram ProgramFromJson(const Json& j) {
  LinearProgram lp;
  lp.sense = AsString(Require(j, "program", "sense"), "program.sense") == "min"
                 ? Sense::kMinimize
                 : Sense::kMaximize;
  const Json& vars = AsArray(Require(j, "program", "variables"), "program.variables");
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const std::string path = Index("program.variables", v);
    auto bound = [&](const char* key) -> std::optional<Rat> {
      const Json& b = Require(vars[v], path, key);
      if (b.is_null()) return std::nullopt;
      return AsRat(b, Join(path, key));
    };
    lp.AddVariable(AsString(Require(vars[v], path, "name"), path + ".name"),
                   AsRat(Require(vars[v], path, "objective"), path + ".objective"),
                   bound("lower"), bound("upper"));
  }
  const Json& rows =
      AsArray(Require(j, "program", "constraints"), "program.constraints");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string path = Index("program.constraints", r);
    std::vector<LpTerm> terms;
    const Json& jt = AsArray(Require(rows[r], path, "terms"), path + ".terms");
    for (std::size_t t = 0; t < jt.size(); ++t) {
      const std::string tpath = Index(path + ".terms", t);
      const std::int64_t var = AsInt(Require(jt[t], tpath, "var"), tpath + ".var");
      if (var < 0 || var >= lp.num_variables()) {
        throw ValidationError(tpath + ".var", "unknown variable");
      }
      terms.push_back({static_cast<int>(var),
                       AsRat(Require(jt[t], tpath, "coef"), tpath + ".coef")});
    }
    const std::string rel =
        AsString(Require(rows[r], path, "relation"), path + ".relation");
    const Relation relation = rel == "<="  ? Relation::kLessEqual
                              : rel == "=" ? Relation::kEqual
                              : rel == ">=" ? Relation::kGreaterEqual
                                            : throw ValidationError(
                                                  path + ".relation",
                                                  "unknown relation");
    lp.AddConstraint(std::move(terms), relation,
                     AsRat(Require(rows[r], path, "rhs"), path + ".rhs"),
                     AsString(Require(rows[r], path, "name"), path + ".name"));
  }
  return lp;
}

LpResult LpResultFromJson(const Json& j) {
  LpResult r;
  const std::string status =
      AsString(Require(j, "certificate", "status"), "certificate.status");
  if (status == "optimal") {
    r.status = LpStatus::kOptimal;
  } else if (status == "infeasible") {
    r.status = LpStatus::kInfeasible;
  } else if (status == "unbounded") {
    r.status = LpStatus::kUnbounded;
  } else {
    throw ValidationError("certificate.status", "unknown status");
  }
  auto vec = [&](const char* key) {
    RatVec out;
    if (!j.contains(key)) return out;
    const std::string path = std::string("certificate.") + key;
    const Json& arr = AsArray(j.at(key), path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back(AsRat(arr[i], Index(path, i)));
    }
    return out;
  };
  if (j.contains("optimum")) r.optimum = AsRat(j.at("optimum"), "certificate.optimum");
  r.primal = vec("primal");
  r.row_multipliers = vec("row_multipliers");
  r.lower_bound_multipliers = vec("lower_bound_multipliers");
  r.upper_bound_multipliers = vec("upper_bound_multipliers");
  return r;
}

Json ToJson(const SolveReport& r) {
  Json integral = {{"feasible", r.integral.feasible},
                   {"value", ToJson(r.integral.value)},
                   {"argmax", ToJson(r.integral.argmax)}};
  Json fractional = {{"feasible", r.fractional.feasible}};
  if (r.fractional.feasible) {
    fractional["value"] = ToJson(r.fractional.value);
    fractional["mean"] = ToJson(r.fractional.mean);
    fractional["lottery"] = ToJson(r.fractional.lottery);
  }
  return {{"integral", integral}, {"fractional", fractional}, {"gap", r.gap}};
}

Json ToJson(const StructureReport& r, const TradeGraph& g) {
  Json agents = Json::array();
  for (std::size_t i = 0; i < r.agents.size(); ++i) {
    const AgentStructure& a = r.agents[i];
    Json entry = {{"agent", g.agents()[i]},
                  {"role", ToString(a.role)},
                  {"separable", a.separable},
                  {"separability_detail", a.separability_detail}};
    if (a.separable) {
      entry["outgoing_msharp_concave"] = a.outgoing_msharp_concave;
      entry["outgoing_linear"] = a.outgoing_linear;
      entry["incoming_msharp_concave"] = a.incoming_msharp_concave;
      entry["incoming_linear"] = a.incoming_linear;
    }
    entry["mixed"] = a.mixed;
    agents.push_back(std::move(entry));
  }
  return {{"agents", agents},
          {"two_sided", r.two_sided},
          {"all_separable", r.all_separable},
          {"outgoing_msharp_incoming_linear", r.outgoing_msharp_incoming_linear},
          {"outgoing_linear_incoming_msharp", r.outgoing_linear_incoming_msharp},
          {"integrality_hypotheses", r.integrality_hypotheses}};
}

Json ToJson(const PriceSystem& ps, const EAInstance& inst) {
  const TradeGraph& g = inst.graph();
  Json p = Json::object();
  for (int e = 0; e < g.num_arcs(); ++e) p[g.arcs()[e].id] = ToJson(ps.p[e]);
  Json out = {{"notion", ToString(ps.notion)}, {"p", p}};
  if (ps.notion == PriceNotion::kConstraintRents) {
    const SetFunction& f = inst.effective_constraint().fn();
    Json rents = Json::array();
    for (const auto& [s, mu] : ps.rents) {
      rents.push_back({{"subset", SubsetJson(f, s)}, {"mu", ToJson(mu)}});
    }
    out["rents"] = rents;
  }
  return out;
}

Json ToJson(const CEReport& r, const EAInstance& inst) {
  const TradeGraph& g = inst.graph();
  Json agents = Json::array();
  for (std::size_t i = 0; i < r.agents.size(); ++i) {
    const AgentCheck& a = r.agents[i];
    agents.push_back({{"agent", g.agents()[i]},
                      {"coordinates", g.LocalIndex(static_cast<int>(i)).names()},
                      {"bundle", ToJson(a.bundle)},
                      {"surplus", ToJson(a.surplus)},
                      {"demand_utility", ToJson(a.demand.utility)},
                      {"demand", ToJson(a.demand.bundles)},
                      {"in_demand", a.in_demand}});
  }
  return {{"outcome", ToJson(r.outcome)},
          {"prices", ToJson(r.prices, inst)},
          {"agents", agents},
          {"rents_nonnegative", r.rents_nonnegative},
          {"complementary_slackness", r.complementary_slackness},
          {"verdict", r.verdict}};
}

Json ToJson(const PriceSearch& s, const EAInstance& inst) {
  Json out = {{"notion", ToString(s.prices.notion)}, {"found", s.found}};
  if (s.found) {
    out["prices"] = ToJson(s.prices, inst);
  } else {
    out["program"] = ToJson(s.program);
    out["certificate"] = ToJson(s.certificate);
  }
  return out;
}

Json ToJson(const NonexistenceResult& r, const EAInstance& inst) {
  Json out = {{"exists", r.exists}};
  if (r.exists) {
    out["outcome"] = ToJson(r.outcome);
    out["prices"] = ToJson(r.prices, inst);
  }
  Json searches = Json::array();
  for (const OutcomeRefutation& o : r.searches) {
    searches.push_back(
        {{"outcome", ToJson(o.outcome)},
         {"arc_prices", ToJson(o.arc_prices, inst)},
         {"rents", o.rents ? ToJson(*o.rents, inst) : Json(nullptr)}});
  }
  out["searches"] = searches;
  return out;
}

Json ToJson(const WelfareCheck& w) {
  return {{"holds", w.holds},
          {"value", ToJson(w.value)},
          {"optimum", ToJson(w.optimum)}};
}

std::string RecheckCertificates(const Json& report) {
  if (report.is_object()) {
    if (report.contains("program") && report.contains("certificate")) {
      try {
        const LinearProgram lp = ProgramFromJson(report.at("program"));
        const LpResult r = LpResultFromJson(report.at("certificate"));
        if (r.status != LpStatus::kInfeasible) return "certificate not infeasible";
        const std::string err = VerifyLpResult(lp, r);
        if (!err.empty()) return err;
      } catch (const ValidationError& e) {
        return e.what();
      }
    }
    for (const auto& [key, value] : report.items()) {
      const std::string err = RecheckCertificates(value);
      if (!err.empty()) return key + ": " + err;
    }
  } else if (report.is_array()) {
    for (std::size_t i = 0; i < report.size(); ++i) {
      const std::string err = RecheckCertificates(report[i]);
      if (!err.empty()) return "[" + std::to_string(i) + "]: " + err;
    }
  }
  return "";
}

}  // namespace ctn
