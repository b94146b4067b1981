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

// Data-parallel inner loops.
//
// Each kernel exists twice: ctn::serial holds the straightforward reference
// loop, ctn::parallel the OpenMP version. Both return identical results; in
// particular the exchange and submodularity scans report the
// lexicographically first violation regardless of thread schedule. The rest
// of the library calls the parallel versions; tests and the benchmark compare
// the two.

#ifndef CTN_KERNELS_H_
#define CTN_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ctn/rational.h"
#include "ctn/vec.h"

namespace ctn {

// Finite values of a function, keyed by point. Points are sorted
// lexicographically; positions index into both vectors.
class ExchangeTable {
 public:
  // Entries may come in any order; duplicate points throw.
  explicit ExchangeTable(std::vector<std::pair<IntVec, Rat>> entries);

  std::size_t size() const { return points_.size(); }
  const std::vector<IntVec>& points() const { return points_; }
  const std::vector<Rat>& values() const { return values_; }
  std::optional<std::size_t> Find(const IntVec& z) const;

 private:
  std::vector<IntVec> points_;
  std::vector<Rat> values_;
  std::unordered_map<IntVec, std::size_t, IntVecHash> position_;
};

// kM: every u needs a paired v. kMSharp: the single-element exchange
// (x - e_u, y + e_u) is also accepted.
enum class ExchangeKind { kM, kMSharp };

// Indices into ExchangeTable::points(), plus the offending coordinate.
struct ExchangeViolation {
  std::size_t x;
  std::size_t y;
  std::size_t u;
  friend bool operator==(const ExchangeViolation&,
                         const ExchangeViolation&) = default;
};

// Subset pair (as bitmasks) with f(S) + f(T) < f(S|T) + f(S&T).
struct SubmodularityViolation {
  std::uint32_t s;
  std::uint32_t t;
  friend bool operator==(const SubmodularityViolation&,
                         const SubmodularityViolation&) = default;
};

struct ArgmaxResult {
  ExtRat best = ExtRat::MinusInfinity();
  std::vector<std::size_t> indices;  // ascending; empty if all -inf
};

using PointEvaluator = std::function<ExtRat(const IntVec&)>;

namespace serial {

// First (x, y, u) in lexicographic order for which the concave exchange
// inequality f(x) + f(y) <= f(x') + f(y') fails for every admissible
// exchange. Off-table points count as -inf.
std::optional<ExchangeViolation> FirstExchangeViolation(
    const ExchangeTable& table, ExchangeKind kind);

// `table` is indexed by subset bitmask over `n` elements. Pairs are scanned
// with s < t.
std::optional<SubmodularityViolation> FirstSubmodularityViolation(
    std::span<const std::int64_t> table, int n);

// Values of `fn` on every point of the box, in lexicographic point order.
std::vector<ExtRat> EvaluateBox(const IntVec& lower, const IntVec& upper,
                                const PointEvaluator& fn);

ArgmaxResult Argmax(std::span<const ExtRat> values);

}  // namespace serial

namespace parallel {

std::optional<ExchangeViolation> FirstExchangeViolation(
    const ExchangeTable& table, ExchangeKind kind);
std::optional<SubmodularityViolation> FirstSubmodularityViolation(
    std::span<const std::int64_t> table, int n);
// `fn` is called concurrently and must be thread-safe.
std::vector<ExtRat> EvaluateBox(const IntVec& lower, const IntVec& upper,
                                const PointEvaluator& fn);
ArgmaxResult Argmax(std::span<const ExtRat> values);

}  // namespace parallel

namespace internal {

// Shared by both variants: the first failing (y, u) in row x.
std::optional<std::pair<std::size_t, std::size_t>> FirstViolationInRow(
    const ExchangeTable& table, ExchangeKind kind, std::size_t x);
std::optional<std::uint32_t> FirstSubmodularityViolationInRow(
    std::span<const std::int64_t> table, int n, std::uint32_t s);
IntVec BoxPointAt(const IntVec& lower, const IntVec& upper,
                  std::size_t index);
std::size_t BoxSize(const IntVec& lower, const IntVec& upper);

}  // namespace internal

}  // namespace ctn

#endif  // CTN_KERNELS_H_
