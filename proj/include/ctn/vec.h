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

// Integer and rational vectors over a finite, ordered coordinate set.
//
// Vectors are positional: coordinate k of a vector belongs to name k of the
// IndexSet it was built against, so every coordinate is always explicit.

#ifndef CTN_VEC_H_
#define CTN_VEC_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ctn/rational.h"

namespace ctn {

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rat>;

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const;
};

class IndexSet {
 public:
  IndexSet() = default;
  // Throws std::invalid_argument on duplicate names.
  explicit IndexSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t pos) const { return names_.at(pos); }
  bool Contains(std::string_view name) const;
  // Throws std::out_of_range for unknown names.
  std::size_t Position(std::string_view name) const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> positions_;
};

// Coordinates with strictly positive / strictly negative entries, ascending.
std::vector<std::size_t> PositiveSupport(std::span<const std::int64_t> v);
std::vector<std::size_t> NegativeSupport(std::span<const std::int64_t> v);

IntVec UnitVector(std::size_t dimension, std::size_t pos);
// Throws std::out_of_range when `coordinate` is not in `index`.
IntVec UnitVector(const IndexSet& index, std::string_view coordinate);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);

RatVec ToRatVec(std::span<const std::int64_t> v);
bool IsIntegral(std::span<const Rat> x);
// Throws std::domain_error if some coordinate is fractional.
IntVec ToIntVec(std::span<const Rat> x);

Rat Dot(std::span<const Rat> a, std::span<const std::int64_t> b);
Rat Dot(std::span<const Rat> a, std::span<const Rat> b);
std::int64_t Sum(std::span<const std::int64_t> v);

// All integer points z with floor(x_i) <= z_i <= ceil(x_i), in lexicographic
// order. Yields 2^k points where k counts the fractional coordinates.
std::vector<IntVec> HypercubeCorners(std::span<const Rat> x);

// All integer points of the box lower <= z <= upper in lexicographic order.
std::vector<IntVec> BoxPoints(const IntVec& lower, const IntVec& upper);

std::string Format(std::span<const std::int64_t> v);
std::string Format(std::span<const Rat> v);

// Parses "1/2,0,-3" (parentheses optional). Throws std::invalid_argument.
RatVec ParseRatVec(std::string_view text);

}  // namespace ctn

#endif  // CTN_VEC_H_
