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

#include <algorithm>
#include <stdexcept>

#include "ctn/kernels.h"

namespace ctn {

ExchangeTable::ExchangeTable(std::vector<std::pair<IntVec, Rat>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  points_.reserve(entries.size());
  values_.reserve(entries.size());
  for (auto& [point, value] : entries) {
    if (!position_.emplace(point, points_.size()).second) {
      throw std::invalid_argument("duplicate point " + Format(point));
    }
    points_.push_back(std::move(point));
    values_.push_back(std::move(value));
  }
}

std::optional<std::size_t> ExchangeTable::Find(const IntVec& z) const {
  auto it = position_.find(z);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

namespace internal {
namespace {

// True if both points are on the table and their values sum to >= lhs.
bool ExchangeHolds(const ExchangeTable& table, const IntVec& a,
                   const IntVec& b, const mpq_class& lhs) {
  const auto ia = table.Find(a);
  if (!ia) return false;
  const auto ib = table.Find(b);
  if (!ib) return false;
  return table.values()[*ia].mpq() + table.values()[*ib].mpq() >= lhs;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> FirstViolationInRow(
    const ExchangeTable& table, ExchangeKind kind, std::size_t xi) {
  const IntVec& x = table.points()[xi];
  const std::size_t dim = x.size();
  IntVec xa(dim), yb(dim);
  for (std::size_t yi = 0; yi < table.size(); ++yi) {
    if (yi == xi) continue;
    const IntVec& y = table.points()[yi];
    const IntVec d = x - y;
    const std::vector<std::size_t> plus = PositiveSupport(d);
    if (plus.empty()) continue;
    const std::vector<std::size_t> minus = NegativeSupport(d);
    const mpq_class lhs =
        table.values()[xi].mpq() + table.values()[yi].mpq();
    for (std::size_t u : plus) {
      bool ok = false;
      xa = x;
      yb = y;
      --xa[u];
      ++yb[u];
      if (kind == ExchangeKind::kMSharp) ok = ExchangeHolds(table, xa, yb, lhs);
      for (std::size_t k = 0; !ok && k < minus.size(); ++k) {
        const std::size_t v = minus[k];
        ++xa[v];
        --yb[v];
        ok = ExchangeHolds(table, xa, yb, lhs);
        --xa[v];
        ++yb[v];
      }
      if (!ok) return std::make_pair(yi, u);
    }
  }
  return std::nullopt;
}

std::optional<std::uint32_t> FirstSubmodularityViolationInRow(
    std::span<const std::int64_t> table, int n, std::uint32_t s) {
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t t = s + 1; t <= full; ++t) {
    // Comparable pairs satisfy the inequality with equality.
    if ((s & t) == s || (s & t) == t) continue;
    if (table[s] + table[t] < table[s | t] + table[s & t]) return t;
  }
  return std::nullopt;
}

std::size_t BoxSize(const IntVec& lower, const IntVec& upper) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (upper[i] < lower[i]) return 0;
    size *= static_cast<std::size_t>(upper[i] - lower[i] + 1);
  }
  return size;
}

IntVec BoxPointAt(const IntVec& lower, const IntVec& upper,
                  std::size_t index) {
  IntVec z(lower.size());
  for (std::size_t i = lower.size(); i-- > 0;) {
    const auto radix = static_cast<std::size_t>(upper[i] - lower[i] + 1);
    z[i] = lower[i] + static_cast<std::int64_t>(index % radix);
    index /= radix;
  }
  return z;
}

}  // namespace internal

namespace serial {

std::optional<ExchangeViolation> FirstExchangeViolation(
    const ExchangeTable& table, ExchangeKind kind) {
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (auto hit = internal::FirstViolationInRow(table, kind, x)) {
      return ExchangeViolation{x, hit->first, hit->second};
    }
  }
  return std::nullopt;
}

std::optional<SubmodularityViolation> FirstSubmodularityViolation(
    std::span<const std::int64_t> table, int n) {
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 0; s < full; ++s) {
    if (auto t = internal::FirstSubmodularityViolationInRow(table, n, s)) {
      return SubmodularityViolation{s, *t};
    }
  }
  return std::nullopt;
}

std::vector<ExtRat> EvaluateBox(const IntVec& lower, const IntVec& upper,
                                const PointEvaluator& fn) {
  std::vector<ExtRat> out;
  for (const IntVec& z : BoxPoints(lower, upper)) out.push_back(fn(z));
  return out;
}

ArgmaxResult Argmax(std::span<const ExtRat> values) {
  ArgmaxResult r;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].IsFinite()) continue;
    if (r.indices.empty() || values[i] > r.best) {
      r.best = values[i];
      r.indices = {i};
    } else if (values[i] == r.best) {
      r.indices.push_back(i);
    }
  }
  return r;
}

}  // namespace serial
}  // namespace ctn
