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

// Instances shipped with the library.

#ifndef CTN_BUILTIN_H_
#define CTN_BUILTIN_H_

#include "ctn/allocation.h"

namespace ctn {

// Two agents N1, N2 trading two unit arcs in opposite directions,
// e: N1 -> N2 and g: N2 -> N1. Each agent values the swap at 0, doing
// nothing at -1/2 and a one-sided trade at -1. With `constrained`, at most
// one of the two arcs may execute (x_e + x_g <= 1).
EAInstance BuiltinSwapInstance(bool constrained = true);

// The constraint x_e <= 1, x_g <= 1, x_e + x_g <= 1 over arcs (e, g).
SetFunction BuiltinSwapConstraint();

// Seller S with unit cost 1 on two arcs e, g to buyer B, who values one
// unit at 3 (via e) or 2 (via g) and both together at 3. Same constraint.
EAInstance BuiltinTwoSidedInstance();

}  // namespace ctn

#endif  // CTN_BUILTIN_H_
