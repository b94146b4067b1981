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

// Seeded random instances for the property suites.
//
// Every object is built from a recipe that is expected to have the target
// property and is then re-validated with the library's own checks; a
// candidate that fails is discarded and redrawn. The stream of draws depends
// only on the seed, so equal seeds give equal instances on every platform.

#ifndef CTN_GENERATORS_H_
#define CTN_GENERATORS_H_

#include <cstdint>
#include <random>
#include <utility>

#include "ctn/allocation.h"

namespace ctn {

// Which side of a two-sided market carries the M-natural-concave part; the
// other side is linear.
enum class Orientation { kOutgoingMSharp, kIncomingMSharp };
const char* ToString(Orientation o);

struct TwoSidedOptions {
  int max_sellers = 2;
  int max_buyers = 2;
  int min_arcs = 1;
  int max_arcs = 4;
  std::int64_t max_capacity = 2;
  Orientation orientation = Orientation::kOutgoingMSharp;
  bool constrained = true;
};

struct MultiSidedOptions {
  int max_agents = 3;
  int max_arcs = 4;
  std::int64_t max_capacity = 1;
  bool constrained = true;
};

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [lo, hi].
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);

  // An M-natural-concave table whose effective domain lies in the box
  // [lower, upper]. Mixes linear, separable concave, concave-of-sum and
  // weighted uniform-matroid recipes, optionally on a polymatroid-shaped
  // sub-domain.
  FiniteIntFunction MSharpConcave(const IndexSet& index, const IntVec& lower,
                                  const IntVec& upper);
  // c.z on the full box, c with half-integral entries.
  FiniteIntFunction Linear(const IndexSet& index, const IntVec& lower,
                           const IntVec& upper);

  // Monotone submodular coverage function with f({e}) <= max_singleton,
  // sometimes truncated at a random rank.
  SetFunction Coverage(const IndexSet& ground, std::int64_t max_singleton);
  // A coverage function or a capacity table with one global cap; always
  // submodular with f({e}) <= caps[e].
  Polymatroid RandomPolymatroid(const IndexSet& ground, const IntVec& caps);

  // Integer bases of a random coverage polymatroid.
  PointSet MConvexSet(const IndexSet& ground, std::int64_t max_singleton);
  // Bases of two coverage polymatroids truncated to a common rank.
  std::pair<PointSet, PointSet> MConvexPair(const IndexSet& ground,
                                            std::int64_t max_singleton);

  // A rational point in the convex hull of the effective domain.
  RatVec HullPoint(const FiniteIntFunction& f);

  // Sellers S<k> and buyers B<k>; ClassifyStructure reports the
  // integrality hypotheses on every result.
  EAInstance TwoSided(const TwoSidedOptions& options);
  // Agents N<k> with arcs in both directions so that at least one agent
  // buys and sells; valuations are M-natural-concave in net-flow space and
  // the no-trade outcome has finite value.
  EAInstance MultiSided(const MultiSidedOptions& options);

 private:
  Rat HalfInteger(std::int64_t lo, std::int64_t hi);
  FiniteIntFunction Candidate(const IndexSet& index, const IntVec& lower,
                              const IntVec& upper);

  std::mt19937_64 rng_;
};

}  // namespace ctn

#endif  // CTN_GENERATORS_H_
