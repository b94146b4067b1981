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

#include "ctn/suites.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "ctn/equilibrium.h"
#include "ctn/generators.h"

namespace ctn {
namespace {

constexpr std::size_t kMaxFailures = 5;

std::uint64_t InstanceSeed(std::uint64_t seed, int i) {
  // splitmix64 of the pair.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(i) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Trial {
  bool pass = false;
  std::string failure;
  std::vector<std::int64_t> tallies;
};

using TrialFn = std::function<void(InstanceGenerator&, Trial&)>;

SuiteResult RunTrials(std::string name, std::string claim,
                      const SuiteOptions& options,
                      const std::vector<std::string>& counters,
                      const TrialFn& fn) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Trial> trials(std::max(options.count, 0));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(trials.size()); ++i) {
    Trial& t = trials[i];
    t.tallies.assign(counters.size(), 0);
    try {
      InstanceGenerator gen(InstanceSeed(options.seed, i));
      fn(gen, t);
    } catch (const std::exception& e) {
      t.pass = false;
      t.failure = std::string("exception: ") + e.what();
    }
  }
  SuiteResult r;
  r.name = std::move(name);
  r.claim = std::move(claim);
  r.instances = static_cast<int>(trials.size());
  for (const std::string& c : counters) r.counters.emplace_back(c, 0);
  for (std::size_t i = 0; i < trials.size(); ++i) {
    if (trials[i].pass) ++r.passed;
    if (!trials[i].pass && r.failures.size() < kMaxFailures) {
      r.failures.push_back("#" + std::to_string(i) + ": " + trials[i].failure);
    }
    for (std::size_t c = 0; c < counters.size(); ++c) {
      r.counters[c].second += trials[i].tallies[c];
    }
  }
  r.ms = std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
             .count();
  return r;
}

IndexSet Coordinates(int n) {
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back("e" + std::to_string(k));
  return IndexSet(std::move(names));
}

IntVec RandomCaps(InstanceGenerator& gen, int n, std::int64_t max_capacity) {
  IntVec caps;
  for (int k = 0; k < n; ++k) caps.push_back(gen.Uniform(1, max_capacity));
  return caps;
}

// Every lottery on `b` with mean x has value `target`: the largest and the
// smallest such lottery value both equal it.
bool Rebalances(const FiniteIntFunction& f, const RatVec& x, const PointSet& b,
                const Rat& target) {
  for (Sense sense : {Sense::kMaximize, Sense::kMinimize}) {
    LinearProgram lp;
    lp.sense = sense;
    std::vector<LpTerm> weights;
    std::vector<std::vector<LpTerm>> mean(x.size());
    for (const IntVec& z : b.points()) {
      const ExtRat v = f(z);
      if (!v.IsFinite()) return false;
      const int col = lp.AddVariable("lambda" + Format(z), v.value());
      weights.push_back({col, Rat(1)});
      for (std::size_t k = 0; k < x.size(); ++k) mean[k].push_back({col, Rat(z[k])});
    }
    lp.AddConstraint(std::move(weights), Relation::kEqual, Rat(1), "weights");
    for (std::size_t k = 0; k < x.size(); ++k) {
      lp.AddConstraint(std::move(mean[k]), Relation::kEqual, x[k], "mean");
    }
    const LpResult r = SolveLp(lp);
    if (r.status != LpStatus::kOptimal || r.optimum != target) return false;
  }
  return true;
}

// First welfare on a verified equilibrium; tallies slots `found`, `ok`.
void CheckWelfare(const EAInstance& inst, const IntVec& x,
                  const PriceSystem& ps, Trial& t, int found, int ok) {
  ++t.tallies[found];
  const WelfareCheck w = CheckFirstWelfare(inst, x, ps);
  if (w.holds) {
    ++t.tallies[ok];
  } else {
    t.pass = false;
    t.failure = "equilibrium at " + Format(x) + " has value " +
                w.value.ToString() + " below the optimum " +
                w.optimum.ToString();
  }
}

}  // namespace

std::int64_t SuiteResult::counter(const std::string& key) const {
  for (const auto& [k, v] : counters) {
    if (k == key) return v;
  }
  return 0;
}

SuiteResult RunIntegerOptimumSuite(const SuiteOptions& options) {
  return RunTrials(
      "integer-optimum",
      "lottery relaxation of an M-natural-concave f over an integral "
      "polymatroid equals the integral maximum",
      options, {"constraint_binding"},
      [&](InstanceGenerator& gen, Trial& t) {
        const int n = static_cast<int>(gen.Uniform(1, options.max_arcs));
        const IndexSet index = Coordinates(n);
        const IntVec caps = RandomCaps(gen, n, options.max_capacity);
        const FiniteIntFunction f =
            gen.MSharpConcave(index, IntVec(n, 0), caps);
        const Polymatroid p = gen.RandomPolymatroid(index, caps);
        const IntegerOptimalityCheck c = VerifyIntegerOptimality(f, p);
        std::optional<Rat> best;
        for (const auto& [z, v] : f.entries()) {
          if (v.IsFinite() && (!best || v.value() > *best)) best = v.value();
        }
        if (c.integral && best && *c.integral < *best) ++t.tallies[0];
        t.pass = c.holds;
        if (!t.pass) {
          t.failure = "integral " +
                      (c.integral ? c.integral->ToString() : "none") +
                      ", fractional " +
                      (c.fractional ? c.fractional->ToString() : "none");
        }
      });
}

SuiteResult RunTwoSidedSuite(const SuiteOptions& options) {
  return RunTrials(
      "two-sided",
      "two-sided separable markets under a polymatroid: no integrality gap "
      "and rent-supported prices at an integral optimum",
      options,
      {"incoming_msharp", "ce_found", "welfare_ok", "arc_prices_suffice"},
      [&](InstanceGenerator& gen, Trial& t) {
        TwoSidedOptions opt;
        opt.max_arcs = options.max_arcs;
        opt.max_capacity = options.max_capacity;
        opt.orientation = gen.Uniform(0, 1) == 0
                              ? Orientation::kOutgoingMSharp
                              : Orientation::kIncomingMSharp;
        if (opt.orientation == Orientation::kIncomingMSharp) ++t.tallies[0];
        const EAInstance inst = gen.TwoSided(opt);
        const SolveReport rep = DetectGap(inst);
        if (!rep.integral.feasible) {
          t.failure = "no feasible outcome";
          return;
        }
        if (rep.gap) {
          t.failure = "gap: integral " + rep.integral.value.ToString() +
                      ", fractional " + rep.fractional.value.ToString();
          return;
        }
        if (const std::string err = VerifyRelaxation(inst, rep.fractional);
            !err.empty()) {
          t.failure = "relaxation witness: " + err;
          return;
        }
        const IntVec& x = rep.integral.argmax.points().front();
        const PriceSearch s = FindPricesWithRents(inst, x);
        if (!s.found) {
          t.failure = "no rent-supported prices at " + Format(x);
          return;
        }
        if (!VerifyCompetitiveEquilibrium(inst, x, s.prices).verdict) {
          t.failure = "price witness at " + Format(x) + " does not verify";
          return;
        }
        if (FindArcPrices(inst, x).found) ++t.tallies[3];
        t.pass = true;
        CheckWelfare(inst, x, s.prices, t, 1, 2);
      });
}

SuiteResult RunFacetSuite(const SuiteOptions& options) {
  return RunTrials(
      "facet",
      "the facet set B_f(x) of an M-natural-concave f is M-convex, and every "
      "lottery on it with mean x attains the concave extension",
      options,
      {"facet_m_convex", "facet_msharp_convex", "rebalancing_ok",
       "m_concave_cases", "m_concave_facet_m_convex"},
      [&](InstanceGenerator& gen, Trial& t) {
        const int n = static_cast<int>(
            gen.Uniform(1, std::min(3, std::max(1, options.max_arcs))));
        const IndexSet index = Coordinates(n);
        const IntVec caps = RandomCaps(gen, n, options.max_capacity);
        const FiniteIntFunction f =
            gen.MSharpConcave(index, IntVec(n, 0), caps);
        const RatVec x = gen.HullPoint(f);
        const PointSet b = FacetSet(f, x);
        const ConvexityCheck m = IsMConvexSet(b);
        const bool msharp = IsMSharpConvexSet(b).holds;
        const bool rebalance = Rebalances(f, x, b, ConcaveExtension(f, x).value);
        if (m.holds) ++t.tallies[0];
        if (msharp) ++t.tallies[1];
        if (rebalance) ++t.tallies[2];
        // The same on an M-concave layer {z : z(E) = k} of f.
        std::vector<std::int64_t> sums;
        const PointSet dom = f.EffectiveDomain();
        for (const IntVec& z : dom.points()) {
          std::int64_t s = 0;
          for (std::int64_t c : z) s += c;
          sums.push_back(s);
        }
        const std::int64_t k =
            sums[gen.Uniform(0, static_cast<std::int64_t>(sums.size()) - 1)];
        std::vector<std::pair<IntVec, ExtRat>> layer;
        for (const auto& [z, v] : f.entries()) {
          std::int64_t s = 0;
          for (std::int64_t c : z) s += c;
          if (s == k && v.IsFinite()) layer.emplace_back(z, v);
        }
        const FiniteIntFunction g(index, std::move(layer));
        if (IsMConcave(g)) {
          ++t.tallies[3];
          if (IsMConvexSet(FacetSet(g, gen.HullPoint(g)))) ++t.tallies[4];
        }
        t.pass = m.holds && rebalance;
        if (!t.pass) {
          t.failure = "x = " + Format(x) + ", B = " + b.ToString() + ": " +
                      (m.holds ? "rebalancing fails" : m.reason);
        }
      });
}

SuiteResult RunRoundTripSuite(const SuiteOptions& options) {
  return RunTrials(
      "round-trip",
      "an M-convex set induces a submodular function whose base is the set, "
      "and a monotone submodular function is recovered from its base",
      options, {"set_points", "independent_msharp_convex"},
      [&](InstanceGenerator& gen, Trial& t) {
        const int n = static_cast<int>(gen.Uniform(1, options.max_arcs));
        const IndexSet index = Coordinates(n);
        const PointSet b = gen.MConvexSet(index, options.max_capacity);
        t.tallies[0] += static_cast<std::int64_t>(b.size());
        const SetFunction induced = SetFunctionFromMConvexSet(b, index);
        if (FindSubmodularityViolation(induced)) {
          t.failure = "induced function not submodular";
          return;
        }
        if (PointsFromSetFunction(induced).base.points() != b.points()) {
          t.failure = "base of the induced function differs from the set";
          return;
        }
        const SetFunction f = gen.Coverage(index, options.max_capacity);
        const PolymatroidPoints pts = PointsFromSetFunction(f);
        if (!IsMConvexSet(pts.base)) {
          t.failure = "base not M-convex";
          return;
        }
        if (IsMSharpConvexSet(pts.independent)) ++t.tallies[1];
        if (!(SetFunctionFromMConvexSet(pts.base, index) == f)) {
          t.failure = "function not recovered from its base";
          return;
        }
        t.pass = true;
      });
}

SuiteResult RunClosureIntersectionSuite(const SuiteOptions& options) {
  return RunTrials(
      "closure-intersection",
      "linear optima over the intersection of two M-convex hulls are "
      "attained at common integer points",
      options, {"nonempty_intersection", "objectives"},
      [&](InstanceGenerator& gen, Trial& t) {
        const int n = static_cast<int>(
            gen.Uniform(2, std::min(4, std::max(2, options.max_arcs))));
        const IndexSet index = Coordinates(n);
        const auto [b1, b2] = gen.MConvexPair(index, options.max_capacity);
        for (const IntVec& z : b1.points()) {
          if (b2.Contains(z)) {
            ++t.tallies[0];
            break;
          }
        }
        const ClosureIntersectionCheck c = VerifyClosureIntersection(b1, b2);
        t.tallies[1] += c.objectives;
        t.pass = c.holds;
        if (!t.pass) t.failure = c.reason;
      });
}

SuiteResult RunGreedySuite(const SuiteOptions& options) {
  return RunTrials(
      "greedy",
      "the greedy vertex attains the LP optimum of a linear objective over "
      "the polymatroid",
      options, {},
      [&](InstanceGenerator& gen, Trial& t) {
        const int n = static_cast<int>(gen.Uniform(1, options.max_arcs + 1));
        const IndexSet index = Coordinates(n);
        const Polymatroid p =
            gen.RandomPolymatroid(index, RandomCaps(gen, n, options.max_capacity));
        RatVec w;
        for (int k = 0; k < n; ++k) w.push_back(Rat(gen.Uniform(-6, 6), 2));
        const IntVec greedy = p.GreedyVertex(w);
        LinearProgram lp;
        std::vector<int> cols;
        for (int k = 0; k < n; ++k) cols.push_back(lp.AddVariable(index.name(k), w[k]));
        for (LinearConstraint& c : p.Inequalities(cols)) {
          lp.AddConstraint(std::move(c.terms), c.relation, c.rhs, c.name);
        }
        const LpResult r = SolveLp(lp);
        if (r.status != LpStatus::kOptimal) {
          t.failure = "LP status " + ToString(r.status);
          return;
        }
        if (!p.Contains(std::span<const std::int64_t>(greedy))) {
          t.failure = "greedy point " + Format(greedy) + " outside P";
          return;
        }
        const Rat value = Dot(w, greedy);
        t.pass = value == r.optimum && VerifyLpResult(lp, r).empty();
        if (!t.pass) {
          t.failure = "greedy " + value.ToString() + ", LP " + r.optimum.ToString();
        }
      });
}

SuiteResult RunUnconstrainedExistenceSuite(const SuiteOptions& options) {
  return RunTrials(
      "unconstrained-existence",
      "unconstrained markets with M-natural-concave valuations have no gap "
      "and arc prices supporting an efficient outcome",
      options, {"ce_found", "welfare_ok"},
      [&](InstanceGenerator& gen, Trial& t) {
        MultiSidedOptions opt;
        opt.max_arcs = options.max_arcs;
        opt.max_capacity = options.max_capacity;
        opt.constrained = false;
        const EAInstance inst = gen.MultiSided(opt);
        const SolveReport rep = DetectGap(inst);
        if (!rep.integral.feasible) {
          t.failure = "no feasible outcome";
          return;
        }
        if (rep.gap) {
          t.failure = "gap: integral " + rep.integral.value.ToString() +
                      ", fractional " + rep.fractional.value.ToString();
          return;
        }
        const IntVec& x = rep.integral.argmax.points().front();
        const PriceSearch s = FindArcPrices(inst, x);
        if (!s.found) {
          t.failure = "no arc prices at " + Format(x);
          return;
        }
        if (!VerifyCompetitiveEquilibrium(inst, x, s.prices).verdict) {
          t.failure = "price witness at " + Format(x) + " does not verify";
          return;
        }
        t.pass = true;
        CheckWelfare(inst, x, s.prices, t, 0, 1);
      });
}

SuiteResult RunGapSuite(const SuiteOptions& options) {
  return RunTrials(
      "gap-nonexistence",
      "constrained multi-sided markets: a gap implies a complete "
      "non-existence certificate; equilibria found are efficient",
      options,
      {"gaps", "certified_nonexistence", "ce_found", "welfare_ok",
       "no_gap_no_ce"},
      [&](InstanceGenerator& gen, Trial& t) {
        MultiSidedOptions opt;
        opt.max_arcs = options.max_arcs;
        opt.max_capacity = std::min<std::int64_t>(options.max_capacity, 1);
        const EAInstance inst = gen.MultiSided(opt);
        const SolveReport rep = DetectGap(inst);
        const NonexistenceResult cert = CertifyNonexistence(inst);
        if (rep.gap) ++t.tallies[0];
        if (cert.exists) {
          if (rep.gap) {
            t.failure = "equilibrium found despite a gap";
            return;
          }
          if (!VerifyCompetitiveEquilibrium(inst, cert.outcome, cert.prices)
                   .verdict) {
            t.failure = "price witness does not verify";
            return;
          }
          t.pass = true;
          CheckWelfare(inst, cert.outcome, cert.prices, t, 2, 3);
          return;
        }
        if (const std::string err = VerifyCertificates(cert); !err.empty()) {
          t.failure = "certificate: " + err;
          return;
        }
        ++t.tallies[1];
        if (!rep.gap) ++t.tallies[4];
        t.pass = true;
      });
}

std::vector<std::string> SuiteNames() {
  return {"integer-optimum", "two-sided",   "facet",
          "round-trip",      "closure-intersection", "greedy",
          "unconstrained-existence", "gap-nonexistence"};
}

SuiteResult RunSuite(const std::string& name, const SuiteOptions& options) {
  if (name == "integer-optimum") return RunIntegerOptimumSuite(options);
  if (name == "two-sided") return RunTwoSidedSuite(options);
  if (name == "facet") return RunFacetSuite(options);
  if (name == "round-trip") return RunRoundTripSuite(options);
  if (name == "closure-intersection") return RunClosureIntersectionSuite(options);
  if (name == "greedy") return RunGreedySuite(options);
  if (name == "unconstrained-existence") {
    return RunUnconstrainedExistenceSuite(options);
  }
  if (name == "gap-nonexistence") return RunGapSuite(options);
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace ctn
