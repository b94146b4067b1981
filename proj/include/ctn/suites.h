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

// Seeded property suites. Instance i of a suite is drawn from its own
// generator, seeded from (seed, i), so instances are evaluated in parallel
// and the result does not depend on the thread count.

#ifndef CTN_SUITES_H_
#define CTN_SUITES_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ctn {

struct SuiteOptions {
  std::uint64_t seed = 2026;
  int count = 200;
  int max_arcs = 4;
  std::int64_t max_capacity = 2;
};

struct SuiteResult {
  std::string name;
  std::string claim;
  int instances = 0;
  int passed = 0;
  // The first few failing instances, one line each.
  std::vector<std::string> failures;
  // Named tallies in a fixed order, such as "ce_found" or "welfare_ok".
  std::vector<std::pair<std::string, std::int64_t>> counters;
  double ms = 0;

  bool ok() const { return instances > 0 && passed == instances; }
  std::int64_t counter(const std::string& key) const;
};

// M-natural-concave f and integral polymatroid P: the lottery relaxation
// of max f over P has the same value as the integral maximum.
SuiteResult RunIntegerOptimumSuite(const SuiteOptions& options);
// Two-sided separable markets under a polymatroid constraint: no gap, and
// prices with constraint rents support an integral optimum.
SuiteResult RunTwoSidedSuite(const SuiteOptions& options);
// Facet sets B_f(x) of M-natural-concave f: tallied as M-convex and as
// M-natural-convex; every lottery on B_f(x) with mean x attains the
// concave extension.
SuiteResult RunFacetSuite(const SuiteOptions& options);
// M-convex sets to submodular functions and back.
SuiteResult RunRoundTripSuite(const SuiteOptions& options);
// Linear optima over the intersection of two M-convex hulls are attained
// at common integer points.
SuiteResult RunClosureIntersectionSuite(const SuiteOptions& options);
// Greedy vertex against the LP optimum over the polymatroid.
SuiteResult RunGreedySuite(const SuiteOptions& options);
// Unconstrained markets with M-natural-concave valuations: arc prices exist
// at an efficient outcome.
SuiteResult RunUnconstrainedExistenceSuite(const SuiteOptions& options);
// Constrained multi-sided markets: every gap comes with a complete
// non-existence certificate, and every equilibrium found is efficient.
SuiteResult RunGapSuite(const SuiteOptions& options);

std::vector<std::string> SuiteNames();
// Throws std::invalid_argument on unknown names.
SuiteResult RunSuite(const std::string& name, const SuiteOptions& options);

}  // namespace ctn

#endif  // CTN_SUITES_H_
