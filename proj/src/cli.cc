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

#include "ctn/cli.h"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ctn/allocation.h"
#include "ctn/builtin.h"
#include "ctn/convexity.h"
#include "ctn/equilibrium.h"
#include "ctn/errors.h"
#include "ctn/instance_io.h"
#include "ctn/suites.h"

namespace ctn {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Options shared by every subcommand that reads an instance.
struct Common {
  std::string instance_path;
  std::string builtin;
  std::string output = "human";
  bool recheck = false;
  SizeLimits limits;
};

struct CommandResult {
  Json doc;
  int code = kExitPositive;
  std::string human;
};

const std::vector<std::string>& BuiltinNames() {
  static const auto* names = new std::vector<std::string>{
      "swap", "swap-unconstrained", "two-sided"};
  return *names;
}

EAInstance Builtin(const std::string& name) {
  if (name == "swap") return BuiltinSwapInstance(true);
  if (name == "swap-unconstrained") return BuiltinSwapInstance(false);
  if (name == "two-sided") return BuiltinTwoSidedInstance();
  throw UsageError("unknown built-in instance '" + name + "'");
}

// The instance file, or a built-in instance ("swap" when neither is given).
InstanceDocument LoadSource(const Common& c) {
  if (!c.instance_path.empty()) {
    if (!c.builtin.empty()) {
      throw UsageError("give an instance file or --builtin, not both");
    }
    return LoadDocument(c.instance_path);
  }
  InstanceDocument doc;
  doc.instance = Builtin(c.builtin.empty() ? "swap" : c.builtin);
  return doc;
}

const EAInstance& RequireInstance(const InstanceDocument& doc,
                                  const SizeLimits& limits) {
  if (!doc.instance) throw ValidationError("agents", "document has no market");
  doc.instance->CheckSize(limits);
  return *doc.instance;
}

IntVec ParseOutcome(const std::string& text, const EAInstance& inst) {
  const RatVec r = ParseRatVec(text);
  if (static_cast<int>(r.size()) != inst.graph().num_arcs()) {
    throw UsageError("--outcome needs one entry per arc");
  }
  IntVec x;
  for (const Rat& v : r) {
    if (!v.IsInteger()) throw UsageError("--outcome must be integral");
    x.push_back(v.ToInt64());
  }
  return x;
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

// Plain text of a JSON scalar without quotes.
std::string Text(const Json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string PointText(const Json& point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) s += ",";
    s += Text(point[i]);
  }
  return s + ")";
}

std::string LotteryText(const Json& lottery) {
  std::string s;
  for (const Json& atom : lottery["support"]) {
    if (!s.empty()) s += " + ";
    s += Text(atom["weight"]) + " " + PointText(atom["point"]);
  }
  return s;
}

std::string PricesText(const Json& prices) {
  std::string s;
  for (const auto& [arc, p] : prices["p"].items()) {
    s += " p_" + arc + "=" + Text(p);
  }
  if (prices.contains("rents")) {
    for (const Json& r : prices["rents"]) {
      std::string subset;
      for (const Json& a : r["subset"]) {
        subset += (subset.empty() ? "" : ",") + Text(a);
      }
      s += " mu{" + subset + "}=" + Text(r["mu"]);
    }
  }
  return s;
}

std::string CheckText(const Json& check) {
  std::string s = check["holds"].get<bool>() ? "holds" : "fails";
  if (check.contains("counterexample")) {
    const Json& w = check["counterexample"];
    s += " (x=" + PointText(w["x"]) + " y=" + PointText(w["y"]) +
         " u=" + Text(w["u"]) + ")";
  }
  if (check.contains("reason")) s += " [" + Text(check["reason"]) + "]";
  return s;
}

std::string SolveText(const Json& j) {
  std::ostringstream out;
  const Json& in = j["integral"];
  if (in["feasible"].get<bool>()) {
    out << "integral optimum: " << Text(in["value"]) << " at";
    for (const Json& p : in["argmax"]) out << " " << PointText(p);
    out << "\n";
  } else {
    out << "integral optimum: no feasible outcome\n";
  }
  const Json& fr = j["fractional"];
  if (fr["feasible"].get<bool>()) {
    out << "fractional optimum: " << Text(fr["value"]) << " with lottery "
        << LotteryText(fr["lottery"]) << "\n";
  } else {
    out << "fractional optimum: infeasible\n";
  }
  out << "gap: " << YesNo(j["gap"].get<bool>()) << "\n";
  return out.str();
}

std::string SearchText(const Json& search) {
  if (search["found"].get<bool>()) {
    return std::string("found") + PricesText(search["prices"]);
  }
  return "none (Farkas certificate over " +
         std::to_string(search["program"]["constraints"].size()) + " rows)";
}

std::string CertifyText(const Json& j) {
  std::ostringstream out;
  for (const Json& s : j["searches"]) {
    out << PointText(s["outcome"]) << ": arc-prices "
        << SearchText(s["arc_prices"]);
    if (!s["rents"].is_null()) {
      out << "; constraint-rents " << SearchText(s["rents"]);
    }
    out << "\n";
  }
  out << "equilibrium exists: " << YesNo(j["exists"].get<bool>());
  if (j["exists"].get<bool>()) {
    out << " at " << PointText(j["outcome"]) << " with"
        << PricesText(j["prices"]);
  }
  out << "\n";
  return out.str();
}

// Subcommands.

CommandResult Validate(const Common& c) {
  const InstanceDocument doc = LoadSource(c);
  CommandResult r;
  r.doc["valid"] = true;
  std::ostringstream human;
  human << "valid\n";
  if (doc.instance) {
    const EAInstance& inst = RequireInstance(doc, c.limits);
    Json arcs = Json::array();
    for (const Arc& a : inst.graph().arcs()) arcs.push_back(a.id);
    const StructureReport s = ClassifyStructure(inst.economy());
    r.doc["agents"] = inst.graph().agents();
    r.doc["arcs"] = arcs;
    r.doc["constrained"] = inst.has_constraint();
    r.doc["structure"] = ToJson(s, inst.graph());
    human << inst.graph().num_agents() << " agents, "
          << inst.graph().num_arcs() << " arcs, "
          << (inst.has_constraint() ? "constrained" : "unconstrained") << "\n"
          << "two-sided: " << YesNo(s.two_sided)
          << ", separable: " << YesNo(s.all_separable)
          << ", integrality hypotheses: " << YesNo(s.integrality_hypotheses)
          << "\n";
  }
  Json tables = Json::array();
  for (const auto& [name, f] : doc.tables) tables.push_back(name);
  Json sets = Json::array();
  for (const auto& [name, s] : doc.point_sets) sets.push_back(name);
  r.doc["tables"] = tables;
  r.doc["point_sets"] = sets;
  r.human = human.str();
  return r;
}

CommandResult Check(const Common& c, const std::string& function,
                    const std::string& set, std::string property) {
  if (function.empty() == set.empty()) {
    throw UsageError("give exactly one of --function or --set");
  }
  const InstanceDocument doc = LoadSource(c);
  ConvexityCheck check;
  CommandResult r;
  if (!function.empty()) {
    if (property.empty()) property = "msharp-concave";
    const FiniteIntFunction f = LookupTable(doc, function);
    if (property == "msharp-concave") {
      check = IsMSharpConcave(f);
    } else if (property == "m-concave") {
      check = IsMConcave(f);
    } else if (property == "msharp-convex") {
      check = IsMSharpConvex(f);
    } else {
      check = IsMConvex(f);
    }
    r.doc["function"] = function;
    r.doc["coordinates"] = f.index().names();
    r.doc["domain_size"] = f.EffectiveDomain().size();
  } else {
    if (property.empty()) property = "m-convex";
    const NamedPointSet s = LookupPointSet(doc, set);
    if (property == "m-convex") {
      check = IsMConvexSet(s.points);
    } else if (property == "msharp-convex") {
      check = IsMSharpConvexSet(s.points);
    } else {
      throw UsageError("point sets support m-convex and msharp-convex");
    }
    r.doc["set"] = set;
    r.doc["coordinates"] = s.coordinates.names();
    r.doc["size"] = s.points.size();
  }
  r.doc["property"] = property;
  r.doc["result"] = ToJson(check);
  r.code = check.holds ? kExitPositive : kExitNegative;
  r.human = (function.empty() ? set : function) + " " + property + ": " +
            CheckText(r.doc["result"]) + "\n";
  return r;
}

CommandResult Extension(const Common& c, const std::string& function,
                        const std::string& point, bool convex) {
  const InstanceDocument doc = LoadSource(c);
  const FiniteIntFunction f = LookupTable(doc, function);
  const RatVec x = ParseRatVec(point);
  if (x.size() != f.dimension()) {
    throw UsageError("--point needs " + std::to_string(f.dimension()) +
                     " coordinates");
  }
  CommandResult r;
  r.doc["function"] = function;
  r.doc["point"] = ToJson(x);
  r.doc["kind"] = convex ? "convex" : "concave";
  std::ostringstream human;
  try {
    const ExtensionValue v =
        convex ? ConvexExtension(f, x) : ConcaveExtension(f, x);
    r.doc["inside_hull"] = true;
    r.doc["value"] = ToJson(v.value);
    r.doc["lottery"] = ToJson(v.lottery);
    human << (convex ? "convex" : "concave") << " extension at "
          << Format(x) << ": " << v.value << "\n"
          << "lottery: " << LotteryText(r.doc["lottery"]) << "\n";
    if (!convex) {
      const PointSet facet = FacetSet(f, x);
      r.doc["facet"] = ToJson(facet);
      r.doc["facet_m_convex"] = ToJson(IsMConvexSet(facet));
      r.doc["facet_msharp_convex"] = ToJson(IsMSharpConvexSet(facet));
      human << "facet: " << facet.ToString() << "\n"
            << "facet M-convex: " << CheckText(r.doc["facet_m_convex"])
            << "\nfacet M-natural-convex: "
            << CheckText(r.doc["facet_msharp_convex"]) << "\n";
    }
  } catch (const OutsideHullError& e) {
    r.doc["inside_hull"] = false;
    r.doc["program"] = ToJson(e.program());
    r.doc["certificate"] = ToJson(e.certificate());
    r.code = kExitNegative;
    human << Format(x) << " lies outside the hull of the domain\n";
  }
  r.human = human.str();
  return r;
}

CommandResult Solve(const Common& c) {
  const InstanceDocument doc = LoadSource(c);
  const EAInstance& inst = RequireInstance(doc, c.limits);
  const SolveReport report = DetectGap(inst, c.limits);
  CommandResult r;
  r.doc["constrained"] = inst.has_constraint();
  const Json report_json = ToJson(report);
  for (const auto& [key, value] : report_json.items()) r.doc[key] = value;
  r.code = (report.gap || !report.integral.feasible) ? kExitNegative
                                                     : kExitPositive;
  r.human = SolveText(r.doc);
  return r;
}

CommandResult Prices(const Common& c, const std::string& outcome, bool rents) {
  const InstanceDocument doc = LoadSource(c);
  const EAInstance& inst = RequireInstance(doc, c.limits);
  IntVec x;
  if (outcome.empty()) {
    const IntegralSolution sol = SolveIntegral(inst, c.limits);
    if (!sol.feasible) throw ValidationError("", "no feasible outcome");
    x = sol.argmax.points().front();
  } else {
    x = ParseOutcome(outcome, inst);
  }
  const PriceSearch search =
      rents ? FindPricesWithRents(inst, x) : FindArcPrices(inst, x);
  CommandResult r;
  r.doc["outcome"] = ToJson(x);
  r.doc["search"] = ToJson(search, inst);
  std::ostringstream human;
  human << "outcome " << Format(x) << ", "
        << ToString(rents ? PriceNotion::kConstraintRents
                          : PriceNotion::kArcPrices)
        << ": " << SearchText(r.doc["search"]) << "\n";
  if (search.found) {
    const CEReport ce = VerifyCompetitiveEquilibrium(inst, x, search.prices);
    r.doc["verification"] = ToJson(ce, inst);
    r.doc["welfare"] = ToJson(CheckFirstWelfare(inst, x, search.prices));
    human << "verified: " << YesNo(ce.verdict) << ", efficient: "
          << YesNo(r.doc["welfare"]["holds"].get<bool>()) << "\n";
  } else {
    r.code = kExitNegative;
  }
  r.human = human.str();
  return r;
}

// Shared by certify and the built-in example.
Json CertifyJson(const EAInstance& inst, bool* exists) {
  const NonexistenceResult result = CertifyNonexistence(inst);
  const std::string problem = VerifyCertificates(result);
  if (!problem.empty()) {
    throw std::logic_error("certificate self-check failed: " + problem);
  }
  Json j = ToJson(result, inst);
  if (result.exists) {
    j["welfare"] = ToJson(CheckFirstWelfare(inst, result.outcome,
                                            result.prices));
  }
  *exists = result.exists;
  return j;
}

CommandResult Certify(const Common& c) {
  const InstanceDocument doc = LoadSource(c);
  const EAInstance& inst = RequireInstance(doc, c.limits);
  bool exists = false;
  CommandResult r;
  r.doc = CertifyJson(inst, &exists);
  r.code = exists ? kExitPositive : kExitNegative;
  r.human = CertifyText(r.doc);
  return r;
}

CommandResult SwapExample() {
  const EAInstance inst = BuiltinSwapInstance(true);
  CommandResult r;
  r.doc["instance"] = InstanceToJson(inst);
  Json valuations = Json::array();
  std::ostringstream human;
  for (int i = 0; i < inst.graph().num_agents(); ++i) {
    const std::string name = "w" + std::to_string(i + 1);
    const ConvexityCheck check = IsMSharpConcave(inst.economy().valuation(i));
    valuations.push_back({{"name", name},
                          {"agent", inst.graph().agents()[i]},
                          {"msharp_concave", ToJson(check)}});
    human << name << " M-natural-concave: " << YesNo(check.holds) << "\n";
  }
  r.doc["valuations"] = valuations;
  const SolveReport report = DetectGap(inst);
  r.doc["solve"] = ToJson(report);
  bool exists = false;
  r.doc["certify"] = CertifyJson(inst, &exists);
  r.code = (report.gap || !exists) ? kExitNegative : kExitPositive;
  human << SolveText(r.doc["solve"]) << CertifyText(r.doc["certify"]);
  r.human = human.str();
  return r;
}

CommandResult Suite(std::vector<std::string> names,
                    const SuiteOptions& options) {
  if (names.empty()) names = SuiteNames();
  CommandResult r;
  r.doc["seed"] = options.seed;
  r.doc["count"] = options.count;
  r.doc["max_arcs"] = options.max_arcs;
  r.doc["max_capacity"] = options.max_capacity;
  Json suites = Json::array();
  std::ostringstream human;
  bool all_ok = true;
  for (const std::string& name : names) {
    const SuiteResult s = RunSuite(name, options);
    all_ok = all_ok && s.ok();
    Json counters = Json::object();
    for (const auto& [key, value] : s.counters) counters[key] = value;
    suites.push_back({{"name", s.name},
                      {"claim", s.claim},
                      {"instances", s.instances},
                      {"passed", s.passed},
                      {"ok", s.ok()},
                      {"counters", counters},
                      {"failures", s.failures}});
    human << (s.ok() ? "PASS " : "FAIL ") << s.name << " " << s.passed << "/"
          << s.instances << " (" << std::fixed << std::setprecision(1)
          << s.ms << " ms)";
    for (const auto& [key, value] : s.counters) {
      human << " " << key << "=" << value;
    }
    human << "\n";
    for (const std::string& f : s.failures) human << "  " << f << "\n";
  }
  r.doc["suites"] = suites;
  r.code = all_ok ? kExitPositive : kExitNegative;
  r.human = human.str();
  return r;
}

void AddCommon(CLI::App* sub, Common* c, bool with_instance) {
  if (with_instance) {
    sub->add_option("instance", c->instance_path, "Instance document (JSON)");
    sub->add_option("--builtin", c->builtin,
                    "Built-in instance used when no file is given")
        ->check(CLI::IsMember(BuiltinNames()));
    sub->add_option("--max-arcs", c->limits.max_arcs, "Arc limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-capacity", c->limits.max_capacity,
                    "Per-arc capacity limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-domain", c->limits.max_domain,
                    "Limit on enumerated outcomes")
        ->check(CLI::PositiveNumber);
  }
  sub->add_option("--output", c->output, "Output mode")
      ->check(CLI::IsMember({"human", "json"}));
  sub->add_flag("--recheck", c->recheck,
                "Re-verify every certificate in the report before printing");
}

void ReportError(const Common& c, const std::string& path,
                 const std::string& message, std::ostream& out,
                 std::ostream& err) {
  err << "error: " << message << "\n";
  if (c.output == "json") {
    Json j = {{"error", {{"path", path}, {"message", message}}}};
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Constrained trading networks: structure checks, allocation, "
               "equilibrium prices and property suites.",
               "ctn"};
  app.require_subcommand(1);
  Common c;
  std::string function, set, property, point, outcome;
  bool convex = false, rents = false;
  std::vector<std::string> suite_names;
  SuiteOptions suite_options;

  CLI::App* validate =
      app.add_subcommand("validate", "Check an instance document");
  AddCommon(validate, &c, true);

  CLI::App* check =
      app.add_subcommand("check", "M / M-natural checks on a table or set");
  AddCommon(check, &c, true);
  check->add_option("--function", function,
                    "Table name, agent id or w<k> for the k-th valuation");
  check->add_option("--set", set, "Point set name or table (its domain)");
  check->add_option("--property", property, "Property to check")
      ->check(CLI::IsMember(
          {"msharp-concave", "m-concave", "msharp-convex", "m-convex"}));

  CLI::App* extension = app.add_subcommand(
      "extension", "Concave extension and facet set at a rational point");
  AddCommon(extension, &c, true);
  extension->add_option("--function", function, "Table name")->required();
  extension->add_option("--point", point, "Point such as 1/2,-1/2")
      ->required();
  extension->add_flag("--convex", convex, "Evaluate the convex extension");

  CLI::App* solve = app.add_subcommand(
      "solve", "Integral and relaxed optimum with gap detection");
  AddCommon(solve, &c, true);

  CLI::App* prices =
      app.add_subcommand("prices", "Search for supporting prices");
  AddCommon(prices, &c, true);
  prices->add_option("--outcome", outcome,
                     "Outcome such as 1,0 (default: an integral optimum)");
  prices->add_flag("--rents", rents, "Allow constraint rents");

  CLI::App* certify = app.add_subcommand(
      "certify", "Find an equilibrium or refute every feasible outcome");
  AddCommon(certify, &c, true);

  CLI::App* example = app.add_subcommand(
      "paper-example1",
      "Built-in two-agent swap market under a one-trade cap, end to end");
  example->alias("swap-example");
  AddCommon(example, &c, false);

  CLI::App* suite = app.add_subcommand("suite", "Seeded property suites");
  AddCommon(suite, &c, false);
  suite->add_option("--name", suite_names, "Suites to run (default: all)")
      ->check(CLI::IsMember(SuiteNames()));
  suite->add_option("--seed", suite_options.seed, "Seed")
      ->capture_default_str();
  suite->add_option("--count", suite_options.count, "Instances per suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  suite->add_option("--max-arcs", suite_options.max_arcs, "Arcs per instance")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  suite->add_option("--max-capacity", suite_options.max_capacity,
                    "Per-arc capacity")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPositive : kExitUsage;
  }

  CommandResult r;
  try {
    if (validate->parsed()) {
      r = Validate(c);
    } else if (check->parsed()) {
      r = Check(c, function, set, property);
    } else if (extension->parsed()) {
      r = Extension(c, function, point, convex);
    } else if (solve->parsed()) {
      r = Solve(c);
    } else if (prices->parsed()) {
      r = Prices(c, outcome, rents);
    } else if (certify->parsed()) {
      r = Certify(c);
    } else if (example->parsed()) {
      r = SwapExample();
    } else {
      r = Suite(suite_names, suite_options);
    }
  } catch (const ValidationError& e) {
    ReportError(c, e.path(), e.what(), out, err);
    return kExitUsage;
  } catch (const std::exception& e) {
    ReportError(c, "", e.what(), out, err);
    return kExitUsage;
  }

  if (c.recheck) {
    const std::string problem = RecheckCertificates(r.doc);
    if (!problem.empty()) {
      ReportError(c, "", "certificate recheck failed at " + problem, out, err);
      return kExitUsage;
    }
  }
  if (c.output == "json") {
    out << r.doc.dump(2) << "\n";
  } else {
    out << r.human;
    if (c.recheck) out << "certificates rechecked\n";
  }
  return r.code;
}

}  // namespace ctn
