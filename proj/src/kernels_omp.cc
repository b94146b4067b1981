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

#include <omp.h>

#include <atomic>
#include <exception>

#include "ctn/kernels.h"

namespace ctn {
namespace parallel {
namespace {

// Lowers `target` to `value` if smaller.
void AtomicMin(std::atomic<std::size_t>& target, std::size_t value) {
  std::size_t cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

}  // namespace

// Rows are scanned concurrently. A row is skipped once some lower row is
// known to fail, and the smallest failing row wins, so the answer matches
// the serial scan.
std::optional<ExchangeViolation> FirstExchangeViolation(
    const ExchangeTable& table, ExchangeKind kind) {
  const std::size_t n = table.size();
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> rows(n);
  std::atomic<std::size_t> first{n};
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t x = 0; x < n; ++x) {
    if (x > first.load(std::memory_order_relaxed)) continue;
    rows[x] = internal::FirstViolationInRow(table, kind, x);
    if (rows[x]) AtomicMin(first, x);
  }
  const std::size_t x = first.load();
  if (x == n) return std::nullopt;
  return ExchangeViolation{x, rows[x]->first, rows[x]->second};
}

std::optional<SubmodularityViolation> FirstSubmodularityViolation(
    std::span<const std::int64_t> table, int n) {
  const std::size_t rows = (std::size_t{1} << n) - 1;
  std::vector<std::optional<std::uint32_t>> hits(rows);
  std::atomic<std::size_t> first{rows};
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t s = 0; s < rows; ++s) {
    if (s > first.load(std::memory_order_relaxed)) continue;
    hits[s] = internal::FirstSubmodularityViolationInRow(
        table, n, static_cast<std::uint32_t>(s));
    if (hits[s]) AtomicMin(first, s);
  }
  const std::size_t s = first.load();
  if (s == rows) return std::nullopt;
  return SubmodularityViolation{static_cast<std::uint32_t>(s), *hits[s]};
}

std::vector<ExtRat> EvaluateBox(const IntVec& lower, const IntVec& upper,
                                const PointEvaluator& fn) {
  const std::size_t n = internal::BoxSize(lower, upper);
  std::vector<ExtRat> out(n);
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      out[i] = fn(internal::BoxPointAt(lower, upper, i));
    } catch (...) {
#pragma omp critical(ctn_box_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

ArgmaxResult Argmax(std::span<const ExtRat> values) {
  const std::size_t n = values.size();
  ExtRat best = ExtRat::MinusInfinity();
#pragma omp parallel
  {
    ExtRat local = ExtRat::MinusInfinity();
#pragma omp for schedule(static) nowait
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i] > local) local = values[i];
    }
#pragma omp critical(ctn_argmax)
    if (local > best) best = local;
  }
  ArgmaxResult r;
  if (!best.IsFinite()) return r;
  r.best = best;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] == best) r.indices.push_back(i);
  }
  return r;
}

}  // namespace parallel
}  // namespace ctn
