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

// JSON instance documents and report serialization.
//
// Instance document:
//
//   {
//     "agents": ["N1", "N2"],
//     "arcs": [{"id": "e", "seller": "N1", "buyer": "N2", "capacity": 1}],
//     "valuations": [
//       {"agent": "N1", "entries": [{"flows": {"e": 1}, "value": "-1/2"}]}
//     ],
//     "constraint": [{"subset": ["e"], "value": 1}, ...],
//     "tables": {"f": {"coordinates": ["a"], "entries":
//                      [{"point": [0], "value": 0}]}},
//     "point_sets": {"B": {"coordinates": ["a"], "points": [[0], [1]]}}
//   }
//
// Capacities default to 1 and omitted flows to 0. Values are integers or
// strings "p/q" or "-inf". The constraint may instead be the shorthand
// {"type": "cardinality-cap", "caps": {"e": 1}, "global": 1,
//  "groups": [{"arcs": ["e", "g"], "cap": 1}]}, expanded to a full table.
// The instance keys are optional as a group, so a document may carry only
// tables. Every violation raises ValidationError with a path into the
// document, such as "valuations[1].entries[0].flows.g".
//
// Reports use ordered keys and write every rational as a "p/q" string, so
// equal inputs give byte-identical output.

#ifndef CTN_INSTANCE_IO_H_
#define CTN_INSTANCE_IO_H_

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ctn/equilibrium.h"
#include "json.hpp"

namespace ctn {

using Json = nlohmann::ordered_json;

struct NamedPointSet {
  IndexSet coordinates;
  PointSet points;
};

struct InstanceDocument {
  std::optional<EAInstance> instance;
  std::map<std::string, FiniteIntFunction> tables;
  std::map<std::string, NamedPointSet> point_sets;
};

InstanceDocument ParseDocument(const Json& doc);
// Reads and parses a file; unreadable or malformed JSON is reported as a
// ValidationError with an empty path.
InstanceDocument LoadDocument(const std::string& path);
Json InstanceToJson(const EAInstance& inst);

// A table named in `tables`, an agent's valuation by agent id, or "w<k>" for
// the valuation of the k-th agent (1-based). Throws ValidationError.
FiniteIntFunction LookupTable(const InstanceDocument& doc,
                              const std::string& name);
// A point set from `point_sets`, or the effective domain of a table.
NamedPointSet LookupPointSet(const InstanceDocument& doc,
                             const std::string& name);

Json ToJson(const Rat& r);
Json ToJson(const ExtRat& r);
Json ToJson(const IntVec& v);
Json ToJson(const RatVec& v);
Json ToJson(const PointSet& s);
Json ToJson(const LotteryWitness& w);
Json ToJson(const ConvexityCheck& c);
Json ToJson(const LinearProgram& lp);
Json ToJson(const LpResult& r);
Json ToJson(const SolveReport& r);
Json ToJson(const StructureReport& r, const TradeGraph& g);
Json ToJson(const PriceSystem& ps, const EAInstance& inst);
Json ToJson(const CEReport& r, const EAInstance& inst);
Json ToJson(const PriceSearch& s, const EAInstance& inst);
Json ToJson(const NonexistenceResult& r, const EAInstance& inst);
Json ToJson(const WelfareCheck& w);

// Inverse of the LinearProgram / LpResult serializations.
LinearProgram ProgramFromJson(const Json& j);
LpResult LpResultFromJson(const Json& j);

// Re-verifies every serialized certificate in a price-search or
// non-existence report from its JSON alone. Empty when all check.
std::string RecheckCertificates(const Json& report);

}  // namespace ctn

#endif  // CTN_INSTANCE_IO_H_
