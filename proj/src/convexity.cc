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

#include "ctn/convexity.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ctn/errors.h"

namespace ctn {
namespace {

ConvexityCheck FromViolation(const ExchangeTable& table,
                             const std::optional<ExchangeViolation>& v) {
  ConvexityCheck check;
  if (!v) return check;
  check.holds = false;
  check.counterexample = ExchangeCounterexample{
      table.points()[v->x], table.points()[v->y], v->u};
  check.reason = "exchange fails at x=" + Format(table.points()[v->x]) +
                 ", y=" + Format(table.points()[v->y]) +
                 ", u=" + std::to_string(v->u);
  return check;
}

ExchangeTable IndicatorTable(const PointSet& set) {
  std::vector<std::pair<IntVec, Rat>> entries;
  entries.reserve(set.size());
  for (const IntVec& z : set.points()) entries.emplace_back(z, Rat(0));
  return ExchangeTable(std::move(entries));
}

bool ConstantCoordinateSum(const ExchangeTable& table) {
  if (table.size() == 0) return true;
  const std::int64_t s = Sum(table.points()[0]);
  for (const IntVec& z : table.points()) {
    if (Sum(z) != s) return false;
  }
  return true;
}

}  // namespace

PointSet::PointSet(std::vector<IntVec> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  for (const IntVec& z : points_) {
    if (z.size() != points_.front().size()) {
      throw std::invalid_argument("point set mixes dimensions");
    }
  }
}

bool PointSet::Contains(const IntVec& z) const {
  return std::binary_search(points_.begin(), points_.end(), z);
}

std::string PointSet::ToString() const {
  std::string s = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) s += ",";
    s += Format(points_[i]);
  }
  return s + "}";
}

FiniteIntFunction::FiniteIntFunction(
    IndexSet index, std::vector<std::pair<IntVec, ExtRat>> entries)
    : index_(std::move(index)), entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty function table");
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first.size() != index_.size()) {
      throw std::invalid_argument("table point " + Format(entries_[i].first) +
                                  " has wrong dimension");
    }
    if (!position_.emplace(entries_[i].first, i).second) {
      throw std::invalid_argument("duplicate table point " +
                                  Format(entries_[i].first));
    }
  }
}

ExtRat FiniteIntFunction::operator()(const IntVec& z) const {
  auto it = position_.find(z);
  if (it == position_.end()) return ExtRat::MinusInfinity();
  return entries_[it->second].second;
}

PointSet FiniteIntFunction::EffectiveDomain() const {
  std::vector<IntVec> pts;
  for (const auto& [z, v] : entries_) {
    if (v.IsFinite()) pts.push_back(z);
  }
  return PointSet(std::move(pts));
}

ExchangeTable FiniteIntFunction::FiniteTable() const {
  std::vector<std::pair<IntVec, Rat>> finite;
  for (const auto& [z, v] : entries_) {
    if (v.IsFinite()) finite.emplace_back(z, v.value());
  }
  return ExchangeTable(std::move(finite));
}

FiniteIntFunction FiniteIntFunction::Negated() const {
  std::vector<std::pair<IntVec, ExtRat>> out;
  out.reserve(entries_.size());
  for (const auto& [z, v] : entries_) {
    out.emplace_back(z, v.IsFinite() ? ExtRat(-v.value()) : v);
  }
  return FiniteIntFunction(index_, std::move(out));
}

FiniteIntFunction FiniteIntFunction::PlusConstant(const Rat& c) const {
  std::vector<std::pair<IntVec, ExtRat>> out;
  out.reserve(entries_.size());
  for (const auto& [z, v] : entries_) out.emplace_back(z, v + ExtRat(c));
  return FiniteIntFunction(index_, std::move(out));
}

ConvexityCheck IsMConvexSet(const PointSet& set) {
  const ExchangeTable t = IndicatorTable(set);
  return FromViolation(t, parallel::FirstExchangeViolation(t, ExchangeKind::kM));
}

ConvexityCheck IsMSharpConvexSet(const PointSet& set) {
  const ExchangeTable t = IndicatorTable(set);
  return FromViolation(
      t, parallel::FirstExchangeViolation(t, ExchangeKind::kMSharp));
}

ConvexityCheck IsMSharpConcave(const FiniteIntFunction& f) {
  const ExchangeTable t = f.FiniteTable();
  return FromViolation(
      t, parallel::FirstExchangeViolation(t, ExchangeKind::kMSharp));
}

ConvexityCheck IsMConcave(const FiniteIntFunction& f) {
  const ExchangeTable t = f.FiniteTable();
  if (!ConstantCoordinateSum(t)) {
    ConvexityCheck check;
    check.holds = false;
    check.reason = "not M-concave (domain not a base set)";
    return check;
  }
  return FromViolation(t, parallel::FirstExchangeViolation(t, ExchangeKind::kM));
}

ConvexityCheck IsMSharpConvex(const FiniteIntFunction& f) {
  return IsMSharpConcave(f.Negated());
}

ConvexityCheck IsMConvex(const FiniteIntFunction& f) {
  ConvexityCheck check = IsMConcave(f.Negated());
  if (!check.holds && !check.counterexample) {
    check.reason = "not M-convex (domain not a base set)";
  }
  return check;
}

std::string LotteryWitness::Validate(const FiniteIntFunction& f) const {
  if (target.size() != f.dimension()) return "target has wrong dimension";
  mpq_class total = 0, val = 0;
  std::vector<mpq_class> mean(target.size(), 0);
  for (const auto& [z, w] : support) {
    if (w.Sign() <= 0) return "non-positive weight";
    const ExtRat fz = f(z);
    if (!fz.IsFinite()) return "support point outside the domain";
    total += w.mpq();
    val += w.mpq() * fz.value().mpq();
    for (std::size_t k = 0; k < z.size(); ++k) {
      mean[k] += w.mpq() * static_cast<long>(z[k]);
    }
  }
  if (total != 1) return "weights do not sum to one";
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (mean[k] != target[k].mpq()) return "mean differs from target";
  }
  if (val != value.mpq()) return "weighted value differs";
  return "";
}

LinearProgram LotteryProgram(const FiniteIntFunction& f, const RatVec& x) {
  if (x.size() != f.dimension()) {
    throw std::invalid_argument("point dimension does not match function");
  }
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  std::vector<int> vars;
  std::vector<const IntVec*> points;
  for (const auto& [z, v] : f.entries()) {
    if (!v.IsFinite()) continue;
    vars.push_back(lp.AddVariable("w" + Format(z), v.value()));
    points.push_back(&z);
  }
  std::vector<LpTerm> ones;
  for (int v : vars) ones.push_back({v, 1});
  lp.AddConstraint(ones, Relation::kEqual, 1, "weights");
  for (std::size_t k = 0; k < f.dimension(); ++k) {
    std::vector<LpTerm> terms;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      terms.push_back({vars[i], Rat((*points[i])[k])});
    }
    lp.AddConstraint(terms, Relation::kEqual, x[k],
                     "mean_" + f.index().name(k));
  }
  return lp;
}

ExtensionValue ConcaveExtension(const FiniteIntFunction& f, const RatVec& x) {
  LinearProgram lp = LotteryProgram(f, x);
  LpResult r = SolveLp(lp);
  if (r.status != LpStatus::kOptimal) {
    throw OutsideHullError(
        "point " + Format(x) + " lies outside the hull of the domain",
        std::move(lp), std::move(r));
  }
  ExtensionValue out;
  out.value = r.optimum;
  out.lottery.target = x;
  out.lottery.value = r.optimum;
  std::size_t var = 0;
  for (const auto& [z, v] : f.entries()) {
    if (!v.IsFinite()) continue;
    if (r.primal[var].Sign() > 0) out.lottery.support.emplace_back(z, r.primal[var]);
    ++var;
  }
  return out;
}

ExtensionValue ConvexExtension(const FiniteIntFunction& f, const RatVec& x) {
  ExtensionValue v = ConcaveExtension(f.Negated(), x);
  v.value = -v.value;
  v.lottery.value = -v.lottery.value;
  return v;
}

PointSet FacetSet(const FiniteIntFunction& f, const RatVec& x) {
  const ExtensionValue ext = ConcaveExtension(f, x);
  std::set<IntVec> in_support;
  for (const auto& [z, w] : ext.lottery.support) in_support.insert(z);

  LinearProgram base = LotteryProgram(f, x);
  std::vector<LpTerm> value_terms;
  std::unordered_map<IntVec, int, IntVecHash> var_of;
  int var = 0;
  for (const auto& [z, v] : f.entries()) {
    if (!v.IsFinite()) continue;
    value_terms.push_back({var, v.value()});
    var_of.emplace(z, var);
    ++var;
  }
  base.AddConstraint(value_terms, Relation::kEqual, ext.value, "optimal");
  for (int j = 0; j < base.num_variables(); ++j) base.set_objective(j, 0);

  std::vector<IntVec> facet;
  for (const IntVec& z : HypercubeCorners(x)) {
    auto it = var_of.find(z);
    if (it == var_of.end()) continue;
    if (in_support.contains(z)) {
      facet.push_back(z);
      continue;
    }
    LinearProgram lp = base;
    lp.set_objective(it->second, 1);
    const LpResult r = SolveLp(lp);
    if (r.status == LpStatus::kOptimal && r.optimum.Sign() > 0) {
      facet.push_back(z);
    }
  }
  return PointSet(std::move(facet));
}

ConvexityCheck FacetSetIsMConvex(const FiniteIntFunction& f, const RatVec& x) {
  if (ConvexityCheck c = IsMSharpConcave(f); !c) {
    throw PreconditionError("function is not M-natural-concave: " + c.reason);
  }
  return IsMConvexSet(FacetSet(f, x));
}

}  // namespace ctn
