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

// M- and M-natural (written "MSharp" in identifiers) convexity of integer
// point sets and of functions given by finite tables, plus the concave
// closure of such functions.
//
// Tables are concave-oriented: a point missing from the table, or present
// with value -inf, lies outside the effective domain. The convex-oriented
// checks reinterpret the same table through negation, so the sentinel then
// stands for +inf.

#ifndef CTN_CONVEXITY_H_
#define CTN_CONVEXITY_H_

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ctn/kernels.h"
#include "ctn/lp.h"
#include "ctn/rational.h"
#include "ctn/vec.h"

namespace ctn {

// A finite set of integer points of one dimension, kept sorted and unique.
class PointSet {
 public:
  PointSet() = default;
  // Throws std::invalid_argument on mixed dimensions.
  explicit PointSet(std::vector<IntVec> points);

  const std::vector<IntVec>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool Contains(const IntVec& z) const;
  std::string ToString() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<IntVec> points_;
};

class FiniteIntFunction {
 public:
  // Throws std::invalid_argument for an empty table, wrong point dimension
  // or duplicate points.
  FiniteIntFunction(IndexSet index,
                    std::vector<std::pair<IntVec, ExtRat>> entries);

  const IndexSet& index() const { return index_; }
  std::size_t dimension() const { return index_.size(); }
  // Sorted by point.
  const std::vector<std::pair<IntVec, ExtRat>>& entries() const {
    return entries_;
  }
  ExtRat operator()(const IntVec& z) const;
  PointSet EffectiveDomain() const;
  // The finite part, ready for the exchange kernels.
  ExchangeTable FiniteTable() const;

  FiniteIntFunction Negated() const;
  FiniteIntFunction PlusConstant(const Rat& c) const;

 private:
  IndexSet index_;
  std::vector<std::pair<IntVec, ExtRat>> entries_;
  std::unordered_map<IntVec, std::size_t, IntVecHash> position_;
};

struct ExchangeCounterexample {
  IntVec x;
  IntVec y;
  std::size_t u;
};

struct ConvexityCheck {
  bool holds = true;
  std::optional<ExchangeCounterexample> counterexample;
  std::string reason;

  explicit operator bool() const { return holds; }
};

ConvexityCheck IsMConvexSet(const PointSet& set);
ConvexityCheck IsMSharpConvexSet(const PointSet& set);

ConvexityCheck IsMSharpConcave(const FiniteIntFunction& f);
// Also fails, without counterexample, when the domain has points with
// different coordinate sums.
ConvexityCheck IsMConcave(const FiniteIntFunction& f);
ConvexityCheck IsMSharpConvex(const FiniteIntFunction& f);
ConvexityCheck IsMConvex(const FiniteIntFunction& f);

// Probability weights over integer points certifying a closure value.
struct LotteryWitness {
  std::vector<std::pair<IntVec, Rat>> support;
  RatVec target;
  Rat value;

  // Empty when the weights are positive, sum to one, average to `target`
  // and the weighted values of `f` sum to `value`.
  std::string Validate(const FiniteIntFunction& f) const;
};

struct ExtensionValue {
  Rat value;
  LotteryWitness lottery;
};

// Thrown when the point is outside the convex hull of the effective domain.
// The Farkas multipliers of the lottery system separate the point.
class OutsideHullError : public std::domain_error {
 public:
  OutsideHullError(const std::string& what, LinearProgram lp, LpResult cert)
      : std::domain_error(what), lp_(std::move(lp)), cert_(std::move(cert)) {}
  const LinearProgram& program() const { return lp_; }
  const LpResult& certificate() const { return cert_; }

 private:
  LinearProgram lp_;
  LpResult cert_;
};

// Concave closure: the best lottery value over the whole effective domain
// among lotteries with mean x.
ExtensionValue ConcaveExtension(const FiniteIntFunction& f, const RatVec& x);
// Convex closure, reading the table convex-oriented.
ExtensionValue ConvexExtension(const FiniteIntFunction& f, const RatVec& x);

// Corners of the unit hypercube around x that carry positive weight in some
// optimal lottery of the concave closure at x.
PointSet FacetSet(const FiniteIntFunction& f, const RatVec& x);

// Whether FacetSet(f, x) is M-convex. Throws PreconditionError unless f is
// M-natural-concave.
ConvexityCheck FacetSetIsMConvex(const FiniteIntFunction& f, const RatVec& x);

// The lottery program behind the closure: one weight per finite point,
// rows "weights" (sum = 1) then one "mean" row per coordinate.
LinearProgram LotteryProgram(const FiniteIntFunction& f, const RatVec& x);

}  // namespace ctn

#endif  // CTN_CONVEXITY_H_
