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

// Integer set functions over a small ground set, the polymatroids
// {x >= 0 : x(S) <= f(S) for all S} they induce, and the correspondence
// between submodular functions and M-convex point sets.
//
// Subsets are bitmasks: bit k is coordinate k of the ground IndexSet.

#ifndef CTN_POLYMATROID_H_
#define CTN_POLYMATROID_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ctn/convexity.h"
#include "ctn/kernels.h"
#include "ctn/lp.h"
#include "ctn/vec.h"

namespace ctn {

using Subset = std::uint32_t;

inline constexpr int kMaxGroundSize = 12;

class SetFunction {
 public:
  // `values[S]` for every bitmask S. Throws ValidationError unless the table
  // has exactly 2^|ground| entries and f(empty) = 0; SizeLimitError above
  // kMaxGroundSize elements.
  SetFunction(IndexSet ground, std::vector<std::int64_t> values);

  // Builds from (subset names, value) records. Missing, duplicate or unknown
  // subsets raise ValidationError.
  static SetFunction FromEntries(
      IndexSet ground,
      const std::vector<std::pair<std::vector<std::string>, std::int64_t>>&
          entries);
  // f(S) = sum of caps over S.
  static SetFunction Additive(IndexSet ground, const IntVec& caps);
  // f(S) = max x(S) over integer 0 <= x <= caps with x(G) <= cap for every
  // (G, cap) group. Throws SizeLimitError if the cap box is too large.
  static SetFunction CapacityCaps(
      IndexSet ground, const IntVec& caps,
      const std::vector<std::pair<Subset, std::int64_t>>& groups);

  const IndexSet& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  Subset full() const { return (Subset{1} << size()) - 1; }
  std::int64_t operator()(Subset s) const { return values_[s]; }
  const std::vector<std::int64_t>& values() const { return values_; }

  // Throws std::out_of_range on unknown names.
  Subset Mask(const std::vector<std::string>& names) const;
  std::vector<std::string> Names(Subset s) const;
  std::string SubsetToString(Subset s) const;

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  IndexSet ground_;
  std::vector<std::int64_t> values_;
};

// First (S, T), S < T, with f(S) + f(T) < f(S | T) + f(S & T).
std::optional<SubmodularityViolation> FindSubmodularityViolation(
    const SetFunction& f);
bool IsMonotone(const SetFunction& f);

// Sum of x over the subset.
Rat SubsetSum(std::span<const Rat> x, Subset s);
std::int64_t SubsetSum(std::span<const std::int64_t> x, Subset s);

struct TightFace {
  RatVec x;
  // Every S with x(S) = f(S), ascending; always contains the empty set.
  std::vector<Subset> tight_sets;
};

class Polymatroid {
 public:
  // Throws PreconditionError if `f` is not submodular.
  static Polymatroid Create(SetFunction f);

  const SetFunction& fn() const { return fn_; }
  int size() const { return fn_.size(); }

  // x >= 0 and x(S) <= f(S) for every S.
  bool Contains(std::span<const Rat> x) const;
  bool Contains(std::span<const std::int64_t> x) const;

  // min over S containing e of f(S); every member has x_e <= this.
  IntVec UpperBounds() const;
  // All integer members, lexicographic. Throws SizeLimitError beyond
  // `max_points` box points.
  PointSet IntegerPoints(std::size_t max_points = 2'000'000) const;

  // Maximizer of w.x over the polymatroid by the greedy rule on the
  // monotone closure min over T containing S of f(T). Coordinates with
  // w_e <= 0 stay 0; ties go to the lower index. Throws PreconditionError if
  // the polymatroid is empty.
  IntVec GreedyVertex(std::span<const Rat> w) const;

  // Throws PreconditionError when x is not a member.
  TightFace Tight(std::span<const Rat> x) const;

  // Rows x(S) <= f(S) for every nonempty S, over LP columns
  // `columns[0..n)`, named "cap<S>". Nonnegativity is left to the caller.
  std::vector<LinearConstraint> Inequalities(
      const std::vector<int>& columns) const;

 private:
  explicit Polymatroid(SetFunction f);

  SetFunction fn_;
  std::vector<std::int64_t> closure_;  // min over supersets
};

// f(S) = max over B of x(S). Throws PreconditionError unless B is a
// nonempty M-convex set over `ground`; std::logic_error if the result is
// not submodular.
SetFunction SetFunctionFromMConvexSet(const PointSet& b, const IndexSet& ground);

class EmptyBaseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct PolymatroidPoints {
  PointSet base;         // members with x(E) = f(E)
  PointSet independent;  // all integer members
};

// Throws PreconditionError unless f is submodular, EmptyBaseError when no
// integer member reaches f(E).
PolymatroidPoints PointsFromSetFunction(const SetFunction& f);

struct ClosureIntersectionCheck {
  bool holds = true;
  int objectives = 0;
  std::optional<IntVec> failing_objective;
  std::string reason;

  explicit operator bool() const { return holds; }
};

// For every objective c in {-1, 0, 1}^n, max c.x over hull(B1) & hull(B2)
// equals max c.z over the common points B1 & B2 (both sides empty counts as
// agreement). Throws PreconditionError unless both sets are M-convex of the
// same dimension; SizeLimitError above 6 coordinates.
ClosureIntersectionCheck VerifyClosureIntersection(const PointSet& b1,
                                                   const PointSet& b2);

}  // namespace ctn

#endif  // CTN_POLYMATROID_H_
