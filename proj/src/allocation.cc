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

#include "ctn/allocation.h"

#include <chrono>

#include "ctn/errors.h"
#include "ctn/kernels.h"

namespace ctn {
namespace {

Polymatroid BoxOrConstraint(const Economy& econ,
                            const std::optional<Polymatroid>& constraint) {
  if (constraint) return *constraint;
  return Polymatroid::Create(SetFunction::Additive(
      econ.graph().arc_index(), econ.graph().Capacities()));
}

// Lotteries over `finite` whose mean satisfies every inequality of `p`.
// Rows for nonempty subsets are skipped when `caps` is false (the box
// constraint is implied by the supports).
RelaxationSolution RelaxOver(const std::vector<std::pair<IntVec, Rat>>& finite,
                             const Polymatroid& p, bool caps, bool nonneg) {
  const std::size_t n = static_cast<std::size_t>(p.size());
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  std::vector<LpTerm> weights;
  for (const auto& [z, v] : finite) {
    weights.push_back({lp.AddVariable("l" + Format(z), v), 1});
  }
  lp.AddConstraint(weights, Relation::kEqual, 1, "weights");
  if (caps) {
    for (Subset s = 1; s <= p.fn().full(); ++s) {
      std::vector<LpTerm> terms;
      for (std::size_t j = 0; j < finite.size(); ++j) {
        terms.push_back({static_cast<int>(j), Rat(SubsetSum(finite[j].first, s))});
      }
      lp.AddConstraint(terms, Relation::kLessEqual, Rat(p.fn()(s)),
                       "cap" + p.fn().SubsetToString(s));
    }
  }
  if (nonneg) {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<LpTerm> terms;
      for (std::size_t j = 0; j < finite.size(); ++j) {
        terms.push_back({static_cast<int>(j), Rat(finite[j].first[k])});
      }
      lp.AddConstraint(terms, Relation::kGreaterEqual, 0,
                       "nonneg" + std::to_string(k));
    }
  }
  const LpResult r = SolveLp(lp);
  RelaxationSolution sol;
  if (r.status != LpStatus::kOptimal) return sol;
  sol.feasible = true;
  sol.value = r.optimum;
  sol.mean.assign(n, Rat(0));
  sol.lottery.value = r.optimum;
  for (std::size_t j = 0; j < finite.size(); ++j) {
    if (r.primal[j].Sign() <= 0) continue;
    sol.lottery.support.emplace_back(finite[j].first, r.primal[j]);
    for (std::size_t k = 0; k < n; ++k) {
      sol.mean[k] += r.primal[j] * Rat(finite[j].first[k]);
    }
  }
  sol.lottery.target = sol.mean;
  return sol;
}

double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

EAInstance::EAInstance(Economy economy, std::optional<Polymatroid> constraint)
    : economy_(std::move(economy)),
      constraint_(std::move(constraint)),
      effective_(BoxOrConstraint(economy_, constraint_)) {
  if (constraint_ && !(constraint_->fn().ground() == graph().arc_index())) {
    throw ValidationError("constraint",
                          "ground set must list the arcs in arc order");
  }
}

void EAInstance::CheckSize(const SizeLimits& limits) const {
  if (graph().num_arcs() > limits.max_arcs) {
    throw SizeLimitError("instance has " + std::to_string(graph().num_arcs()) +
                         " arcs; the limit is " +
                         std::to_string(limits.max_arcs));
  }
  for (const Arc& a : graph().arcs()) {
    if (a.capacity > limits.max_capacity) {
      throw SizeLimitError("arc " + a.id + " has capacity " +
                           std::to_string(a.capacity) + "; the limit is " +
                           std::to_string(limits.max_capacity));
    }
  }
  for (int i = 0; i < graph().num_agents(); ++i) {
    if (economy_.valuation(i).entries().size() > limits.max_domain) {
      throw SizeLimitError("valuation of " + graph().agents()[i] +
                           " has more than " +
                           std::to_string(limits.max_domain) + " points");
    }
  }
}

std::vector<IntVec> EAInstance::BoxOutcomes() const {
  return BoxPoints(IntVec(graph().num_arcs(), 0), graph().Capacities());
}

std::vector<IntVec> EAInstance::FeasibleOutcomes() const {
  std::vector<IntVec> out;
  for (IntVec& x : BoxOutcomes()) {
    if (effective_.Contains(std::span<const std::int64_t>(x))) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

IntegralSolution SolveIntegral(const EAInstance& inst,
                               const SizeLimits& limits) {
  inst.CheckSize(limits);
  const IntVec lower(inst.graph().num_arcs(), 0);
  const IntVec upper = inst.graph().Capacities();
  const Polymatroid& p = inst.effective_constraint();
  const std::vector<ExtRat> values =
      parallel::EvaluateBox(lower, upper, [&](const IntVec& x) {
        if (!p.Contains(std::span<const std::int64_t>(x))) {
          return ExtRat::MinusInfinity();
        }
        return AggregateValue(inst.economy(), x);
      });
  const ArgmaxResult best = parallel::Argmax(values);
  IntegralSolution sol;
  if (best.indices.empty()) return sol;
  sol.feasible = true;
  sol.value = best.best;
  std::vector<IntVec> pts;
  for (std::size_t i : best.indices) {
    pts.push_back(internal::BoxPointAt(lower, upper, i));
  }
  sol.argmax = PointSet(std::move(pts));
  return sol;
}

RelaxationSolution SolveRelaxation(const EAInstance& inst,
                                   const SizeLimits& limits) {
  inst.CheckSize(limits);
  const IntVec lower(inst.graph().num_arcs(), 0);
  const IntVec upper = inst.graph().Capacities();
  const std::vector<ExtRat> values = parallel::EvaluateBox(
      lower, upper,
      [&](const IntVec& x) { return AggregateValue(inst.economy(), x); });
  std::vector<std::pair<IntVec, Rat>> finite;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].IsFinite()) {
      finite.emplace_back(internal::BoxPointAt(lower, upper, i),
                          values[i].value());
    }
  }
  if (finite.empty()) {
    throw NoFiniteOutcomeError("every outcome has value -inf");
  }
  return RelaxOver(finite, inst.effective_constraint(), inst.has_constraint(),
                   /*nonneg=*/false);
}

SolveReport DetectGap(const EAInstance& inst, const SizeLimits& limits) {
  SolveReport report;
  auto start = std::chrono::steady_clock::now();
  report.integral = SolveIntegral(inst, limits);
  report.integral_ms = MillisSince(start);
  start = std::chrono::steady_clock::now();
  report.fractional = SolveRelaxation(inst, limits);
  report.fractional_ms = MillisSince(start);
  if (report.fractional.feasible) {
    report.gap = !report.integral.feasible ||
                 report.fractional.value > report.integral.value.value();
  }
  if (report.integral.feasible &&
      (!report.fractional.feasible ||
       report.fractional.value < report.integral.value.value())) {
    throw std::logic_error("relaxation below the integral optimum");
  }
  return report;
}

std::string VerifyRelaxation(const EAInstance& inst,
                             const RelaxationSolution& sol) {
  if (!sol.feasible) return "";
  mpq_class total = 0, value = 0;
  std::vector<mpq_class> mean(inst.graph().num_arcs(), 0);
  for (const auto& [z, w] : sol.lottery.support) {
    if (w.Sign() <= 0) return "non-positive weight";
    const ExtRat g = AggregateValue(inst.economy(), z);
    if (!g.IsFinite()) return "support outcome " + Format(z) + " is -inf";
    total += w.mpq();
    value += w.mpq() * g.value().mpq();
    for (std::size_t k = 0; k < z.size(); ++k) {
      mean[k] += w.mpq() * static_cast<long>(z[k]);
    }
  }
  if (total != 1) return "weights do not sum to one";
  RatVec m;
  for (const mpq_class& c : mean) m.push_back(Rat(c));
  if (m != sol.mean) return "reported mean differs from the weighted mean";
  if (!inst.effective_constraint().Contains(m)) return "mean violates the constraint";
  if (Rat(value) != sol.value) return "weighted value differs from optimum";
  return "";
}

IntegerOptimalityCheck VerifyIntegerOptimality(const FiniteIntFunction& f,
                                               const Polymatroid& p) {
  if (f.dimension() != static_cast<std::size_t>(p.size())) {
    throw PreconditionError("function and polymatroid dimensions differ");
  }
  if (ConvexityCheck c = IsMSharpConcave(f); !c) {
    throw PreconditionError("function is not M-natural-concave: " + c.reason);
  }
  IntegerOptimalityCheck check;
  std::vector<std::pair<IntVec, Rat>> finite;
  for (const auto& [z, v] : f.entries()) {
    if (!v.IsFinite()) continue;
    finite.emplace_back(z, v.value());
    if (p.Contains(std::span<const std::int64_t>(z)) &&
        (!check.integral || v.value() > *check.integral)) {
      check.integral = v.value();
    }
  }
  const RelaxationSolution relax =
      RelaxOver(finite, p, /*caps=*/true, /*nonneg=*/true);
  if (relax.feasible) {
    check.fractional = relax.value;
    check.lottery = relax.lottery;
  }
  check.holds = check.integral == check.fractional;
  return check;
}

}  // namespace ctn
