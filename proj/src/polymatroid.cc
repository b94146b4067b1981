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

#include "ctn/polymatroid.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "ctn/errors.h"

namespace ctn {

SetFunction::SetFunction(IndexSet ground, std::vector<std::int64_t> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (ground_.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw SizeLimitError("ground set has " + std::to_string(ground_.size()) +
                         " elements; the limit is " +
                         std::to_string(kMaxGroundSize));
  }
  if (values_.size() != std::size_t{1} << ground_.size()) {
    throw ValidationError("", "set function table has " +
                                  std::to_string(values_.size()) +
                                  " entries, expected " +
                                  std::to_string(1u << ground_.size()));
  }
  if (values_[0] != 0) {
    throw ValidationError("", "set function must vanish on the empty set");
  }
}

SetFunction SetFunction::FromEntries(
    IndexSet ground,
    const std::vector<std::pair<std::vector<std::string>, std::int64_t>>&
        entries) {
  if (ground.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw SizeLimitError("ground set too large");
  }
  const std::size_t n = std::size_t{1} << ground.size();
  std::vector<std::int64_t> values(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = "[" + std::to_string(i) + "].subset";
    Subset s = 0;
    for (const std::string& name : entries[i].first) {
      if (!ground.Contains(name)) {
        throw ValidationError(path, "unknown element \"" + name + "\"");
      }
      const Subset bit = Subset{1} << ground.Position(name);
      if (s & bit) throw ValidationError(path, "repeated element " + name);
      s |= bit;
    }
    if (seen[s]) throw ValidationError(path, "duplicate subset");
    seen[s] = true;
    values[s] = entries[i].second;
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::string names;
    for (std::size_t k = 0; k < ground.size(); ++k) {
      if (s >> k & 1) names += (names.empty() ? "" : ",") + ground.name(k);
    }
    throw ValidationError("", "missing subset {" + names + "}");
  }
  return SetFunction(std::move(ground), std::move(values));
}

SetFunction SetFunction::Additive(IndexSet ground, const IntVec& caps) {
  if (caps.size() != ground.size()) {
    throw std::invalid_argument("caps do not match the ground set");
  }
  std::vector<std::int64_t> values(std::size_t{1} << ground.size());
  for (std::size_t s = 1; s < values.size(); ++s) {
    const int low = std::countr_zero(static_cast<Subset>(s));
    values[s] = values[s & (s - 1)] + caps[low];
  }
  return SetFunction(std::move(ground), std::move(values));
}

SetFunction SetFunction::CapacityCaps(
    IndexSet ground, const IntVec& caps,
    const std::vector<std::pair<Subset, std::int64_t>>& groups) {
  if (caps.size() != ground.size()) {
    throw std::invalid_argument("caps do not match the ground set");
  }
  if (ground.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw SizeLimitError("ground set too large");
  }
  const IntVec lower(caps.size(), 0);
  if (internal::BoxSize(lower, caps) > 2'000'000) {
    throw SizeLimitError("cap box too large to expand");
  }
  std::vector<std::int64_t> values(std::size_t{1} << ground.size(), 0);
  for (const IntVec& x : BoxPoints(lower, caps)) {
    bool ok = true;
    for (const auto& [g, cap] : groups) ok = ok && SubsetSum(x, g) <= cap;
    if (!ok) continue;
    for (std::size_t s = 1; s < values.size(); ++s) {
      values[s] = std::max(values[s], SubsetSum(x, static_cast<Subset>(s)));
    }
  }
  return SetFunction(std::move(ground), std::move(values));
}

Subset SetFunction::Mask(const std::vector<std::string>& names) const {
  Subset s = 0;
  for (const std::string& name : names) s |= Subset{1} << ground_.Position(name);
  return s;
}

std::vector<std::string> SetFunction::Names(Subset s) const {
  std::vector<std::string> out;
  for (int k = 0; k < size(); ++k) {
    if (s >> k & 1) out.push_back(ground_.name(k));
  }
  return out;
}

std::string SetFunction::SubsetToString(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (const std::string& name : Names(s)) {
    out += (first ? "" : ",") + name;
    first = false;
  }
  return out + "}";
}

std::optional<SubmodularityViolation> FindSubmodularityViolation(
    const SetFunction& f) {
  return parallel::FirstSubmodularityViolation(f.values(), f.size());
}

bool IsMonotone(const SetFunction& f) {
  for (Subset s = 0; s <= f.full(); ++s) {
    for (int k = 0; k < f.size(); ++k) {
      const Subset bit = Subset{1} << k;
      if (!(s & bit) && f(s | bit) < f(s)) return false;
    }
  }
  return true;
}

Rat SubsetSum(std::span<const Rat> x, Subset s) {
  mpq_class sum = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (s >> k & 1) sum += x[k].mpq();
  }
  return Rat(sum);
}

std::int64_t SubsetSum(std::span<const std::int64_t> x, Subset s) {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (s >> k & 1) sum += x[k];
  }
  return sum;
}

Polymatroid::Polymatroid(SetFunction f)
    : fn_(std::move(f)), closure_(fn_.values()) {
  for (int k = 0; k < fn_.size(); ++k) {
    const Subset bit = Subset{1} << k;
    for (Subset s = 0; s <= fn_.full(); ++s) {
      if (!(s & bit)) closure_[s] = std::min(closure_[s], closure_[s | bit]);
    }
  }
}

Polymatroid Polymatroid::Create(SetFunction f) {
  if (const auto v = FindSubmodularityViolation(f)) {
    throw PreconditionError(
        "set function is not submodular at S=" + f.SubsetToString(v->s) +
        ", T=" + f.SubsetToString(v->t));
  }
  return Polymatroid(std::move(f));
}

bool Polymatroid::Contains(std::span<const Rat> x) const {
  if (x.size() != static_cast<std::size_t>(size())) return false;
  for (const Rat& c : x) {
    if (c.Sign() < 0) return false;
  }
  for (Subset s = 1; s <= fn_.full(); ++s) {
    if (SubsetSum(x, s) > Rat(fn_(s))) return false;
  }
  return true;
}

bool Polymatroid::Contains(std::span<const std::int64_t> x) const {
  if (x.size() != static_cast<std::size_t>(size())) return false;
  for (std::int64_t c : x) {
    if (c < 0) return false;
  }
  for (Subset s = 1; s <= fn_.full(); ++s) {
    if (SubsetSum(x, s) > fn_(s)) return false;
  }
  return true;
}

IntVec Polymatroid::UpperBounds() const {
  IntVec ub(size());
  for (int k = 0; k < size(); ++k) ub[k] = closure_[Subset{1} << k];
  return ub;
}

PointSet Polymatroid::IntegerPoints(std::size_t max_points) const {
  if (closure_[0] < 0) return PointSet();
  const IntVec lower(size(), 0);
  const IntVec upper = UpperBounds();
  if (internal::BoxSize(lower, upper) > max_points) {
    throw SizeLimitError("polymatroid box has more than " +
                         std::to_string(max_points) + " points");
  }
  std::vector<IntVec> pts;
  for (IntVec& z : BoxPoints(lower, upper)) {
    if (Contains(std::span<const std::int64_t>(z))) pts.push_back(std::move(z));
  }
  return PointSet(std::move(pts));
}

IntVec Polymatroid::GreedyVertex(std::span<const Rat> w) const {
  if (w.size() != static_cast<std::size_t>(size())) {
    throw std::invalid_argument("weight vector has wrong dimension");
  }
  if (closure_[0] < 0) throw PreconditionError("polymatroid is empty");
  std::vector<int> order;
  for (int k = 0; k < size(); ++k) {
    if (w[k].Sign() > 0) order.push_back(k);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] > w[b]; });
  IntVec x(size(), 0);
  Subset prefix = 0;
  for (int k : order) {
    const Subset next = prefix | (Subset{1} << k);
    x[k] = closure_[next] - closure_[prefix];
    prefix = next;
  }
  return x;
}

TightFace Polymatroid::Tight(std::span<const Rat> x) const {
  if (!Contains(x)) {
    throw PreconditionError("point " + Format(x) +
                            " is not in the polymatroid");
  }
  TightFace face;
  face.x.assign(x.begin(), x.end());
  for (Subset s = 0; s <= fn_.full(); ++s) {
    if (SubsetSum(x, s) == Rat(fn_(s))) face.tight_sets.push_back(s);
  }
  return face;
}

std::vector<LinearConstraint> Polymatroid::Inequalities(
    const std::vector<int>& columns) const {
  std::vector<LinearConstraint> rows;
  for (Subset s = 1; s <= fn_.full(); ++s) {
    LinearConstraint row;
    for (int k = 0; k < size(); ++k) {
      if (s >> k & 1) row.terms.push_back({columns[k], Rat(1)});
    }
    row.relation = Relation::kLessEqual;
    row.rhs = Rat(fn_(s));
    row.name = "cap" + fn_.SubsetToString(s);
    rows.push_back(std::move(row));
  }
  return rows;
}

SetFunction SetFunctionFromMConvexSet(const PointSet& b,
                                      const IndexSet& ground) {
  if (b.empty()) throw PreconditionError("point set is empty");
  if (b.points().front().size() != ground.size()) {
    throw PreconditionError("point set dimension does not match ground set");
  }
  if (ConvexityCheck c = IsMConvexSet(b); !c) {
    throw PreconditionError("point set is not M-convex: " + c.reason);
  }
  std::vector<std::int64_t> values(std::size_t{1} << ground.size());
  for (Subset s = 1; s < values.size(); ++s) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (const IntVec& z : b.points()) best = std::max(best, SubsetSum(z, s));
    values[s] = best;
  }
  SetFunction f(ground, std::move(values));
  if (const auto v = FindSubmodularityViolation(f)) {
    throw std::logic_error("induced set function is not submodular at S=" +
                           f.SubsetToString(v->s) +
                           ", T=" + f.SubsetToString(v->t));
  }
  return f;
}

PolymatroidPoints PointsFromSetFunction(const SetFunction& f) {
  const Polymatroid p = Polymatroid::Create(f);
  PolymatroidPoints out;
  out.independent = p.IntegerPoints();
  std::vector<IntVec> base;
  for (const IntVec& z : out.independent.points()) {
    if (Sum(z) == f(f.full())) base.push_back(z);
  }
  if (base.empty()) {
    throw EmptyBaseError("no integer point of the polymatroid reaches f(E) = " +
                         std::to_string(f(f.full())));
  }
  out.base = PointSet(std::move(base));
  return out;
}

namespace {

// max c.x over hull(B1) & hull(B2), or nullopt when the hulls are disjoint.
std::optional<Rat> HullIntersectionMax(const PointSet& b1, const PointSet& b2,
                                       const IntVec& c) {
  const std::size_t n = c.size();
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  std::vector<LpTerm> sum1, sum2;
  std::vector<std::vector<LpTerm>> coord(n);
  for (const IntVec& z : b1.points()) {
    std::int64_t obj = 0;
    for (std::size_t k = 0; k < n; ++k) obj += c[k] * z[k];
    const int v = lp.AddVariable("a" + Format(z), Rat(obj));
    sum1.push_back({v, 1});
    for (std::size_t k = 0; k < n; ++k) coord[k].push_back({v, Rat(z[k])});
  }
  for (const IntVec& z : b2.points()) {
    const int v = lp.AddVariable("b" + Format(z));
    sum2.push_back({v, 1});
    for (std::size_t k = 0; k < n; ++k) coord[k].push_back({v, Rat(-z[k])});
  }
  lp.AddConstraint(sum1, Relation::kEqual, 1, "weights1");
  lp.AddConstraint(sum2, Relation::kEqual, 1, "weights2");
  for (std::size_t k = 0; k < n; ++k) {
    lp.AddConstraint(coord[k], Relation::kEqual, 0,
                     "mean" + std::to_string(k));
  }
  const LpResult r = SolveLp(lp);
  if (r.status == LpStatus::kInfeasible) return std::nullopt;
  return r.optimum;
}

}  // namespace

ClosureIntersectionCheck VerifyClosureIntersection(const PointSet& b1,
                                                   const PointSet& b2) {
  if (b1.empty() || b2.empty()) throw PreconditionError("empty point set");
  const std::size_t n = b1.points().front().size();
  if (b2.points().front().size() != n) {
    throw PreconditionError("point sets differ in dimension");
  }
  if (n > 6) throw SizeLimitError("objective battery limited to 6 coordinates");
  if (ConvexityCheck c = IsMConvexSet(b1); !c) {
    throw PreconditionError("first set is not M-convex: " + c.reason);
  }
  if (ConvexityCheck c = IsMConvexSet(b2); !c) {
    throw PreconditionError("second set is not M-convex: " + c.reason);
  }
  std::vector<IntVec> common;
  for (const IntVec& z : b1.points()) {
    if (b2.Contains(z)) common.push_back(z);
  }
  ClosureIntersectionCheck check;
  for (const IntVec& c : BoxPoints(IntVec(n, -1), IntVec(n, 1))) {
    ++check.objectives;
    const std::optional<Rat> hull = HullIntersectionMax(b1, b2, c);
    std::optional<Rat> integral;
    for (const IntVec& z : common) {
      std::int64_t v = 0;
      for (std::size_t k = 0; k < n; ++k) v += c[k] * z[k];
      if (!integral || Rat(v) > *integral) integral = Rat(v);
    }
    if (hull != integral) {
      check.holds = false;
      check.failing_objective = c;
      check.reason = "objective " + Format(c) + ": hull intersection gives " +
                     (hull ? hull->ToString() : "empty") +
                     ", common points give " +
                     (integral ? integral->ToString() : "empty");
      return check;
    }
  }
  return check;
}

}  // namespace ctn
