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

// The `ctn` command-line front end.
//
// Exit codes: 0 when the command succeeds with a positive verdict, 1 when it
// computes a negative verdict (gap found, no equilibrium, check failed), 2 on
// usage or validation errors. With --output json exactly one document is
// written to `out`; identical arguments give byte-identical documents.

#ifndef CTN_CLI_H_
#define CTN_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ctn {

inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ctn

#endif  // CTN_CLI_H_
