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

#ifndef CTN_ERRORS_H_
#define CTN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ctn {

// An operation's stated hypothesis does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input exceeds the exhaustive-enumeration limits.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A malformed instance document or table. `path` points into the document.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string path, const std::string& message)
      : std::invalid_argument(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// An outcome outside capacities, outside the constraint, or valued -inf by
// some agent.
class InfeasibleOutcomeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ctn

#endif  // CTN_ERRORS_H_
