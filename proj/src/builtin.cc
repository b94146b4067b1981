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

#include "ctn/builtin.h"

namespace ctn {

SetFunction BuiltinSwapConstraint() {
  return SetFunction(IndexSet({"e", "g"}), {0, 1, 1, 1});
}

EAInstance BuiltinSwapInstance(bool constrained) {
  TradeGraph g({"N1", "N2"}, {{"e", "N1", "N2", 1}, {"g", "N2", "N1", 1}});
  const IndexSet local({"e", "g"});
  // N1 sells e and buys g; N2 is the mirror image.
  FiniteIntFunction w1(local, {{{0, 0}, Rat(-1, 2)},
                               {{1, -1}, Rat(0)},
                               {{1, 0}, Rat(-1)},
                               {{0, -1}, Rat(-1)}});
  FiniteIntFunction w2(local, {{{-1, 1}, Rat(0)},
                               {{0, 0}, Rat(-1, 2)},
                               {{-1, 0}, Rat(-1)},
                               {{0, 1}, Rat(-1)}});
  Economy econ(std::move(g), {std::move(w1), std::move(w2)});
  std::optional<Polymatroid> p;
  if (constrained) p = Polymatroid::Create(BuiltinSwapConstraint());
  return EAInstance(std::move(econ), std::move(p));
}

EAInstance BuiltinTwoSidedInstance() {
  TradeGraph g({"S", "B"}, {{"e", "S", "B", 1}, {"g", "S", "B", 1}});
  const IndexSet local({"e", "g"});
  FiniteIntFunction seller(local, {{{0, 0}, Rat(0)},
                                   {{0, 1}, Rat(-1)},
                                   {{1, 0}, Rat(-1)},
                                   {{1, 1}, Rat(-2)}});
  FiniteIntFunction buyer(local, {{{0, 0}, Rat(0)},
                                  {{-1, 0}, Rat(3)},
                                  {{0, -1}, Rat(2)},
                                  {{-1, -1}, Rat(3)}});
  Economy econ(std::move(g), {std::move(seller), std::move(buyer)});
  return EAInstance(std::move(econ),
                    Polymatroid::Create(BuiltinSwapConstraint()));
}

}  // namespace ctn
