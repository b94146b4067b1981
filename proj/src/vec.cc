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

#include "ctn/vec.h"

#include <stdexcept>

namespace ctn {

std::size_t IntVecHash::operator()(const IntVec& v) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (std::int64_t c : v) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

IndexSet::IndexSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!positions_.emplace(names_[i], i).second) {
      throw std::invalid_argument("duplicate coordinate '" + names_[i] + "'");
    }
  }
}

bool IndexSet::Contains(std::string_view name) const {
  return positions_.contains(std::string(name));
}

std::size_t IndexSet::Position(std::string_view name) const {
  auto it = positions_.find(std::string(name));
  if (it == positions_.end()) {
    throw std::out_of_range("unknown coordinate '" + std::string(name) + "'");
  }
  return it->second;
}

std::vector<std::size_t> PositiveSupport(std::span<const std::int64_t> v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> NegativeSupport(std::span<const std::int64_t> v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) out.push_back(i);
  }
  return out;
}

IntVec UnitVector(std::size_t dimension, std::size_t pos) {
  if (pos >= dimension) throw std::out_of_range("unit vector position");
  IntVec e(dimension, 0);
  e[pos] = 1;
  return e;
}

IntVec UnitVector(const IndexSet& index, std::string_view coordinate) {
  return UnitVector(index.size(), index.Position(coordinate));
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec operator-(const IntVec& a) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

RatVec ToRatVec(std::span<const std::int64_t> v) {
  return RatVec(v.begin(), v.end());
}

bool IsIntegral(std::span<const Rat> x) {
  for (const Rat& r : x) {
    if (!r.IsInteger()) return false;
  }
  return true;
}

IntVec ToIntVec(std::span<const Rat> x) {
  IntVec out;
  out.reserve(x.size());
  for (const Rat& r : x) out.push_back(r.ToInt64());
  return out;
}

Rat Dot(std::span<const Rat> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) acc += a[i].mpq() * static_cast<long>(b[i]);
  }
  return Rat(acc);
}

Rat Dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].mpq() * b[i].mpq();
  return Rat(acc);
}

std::int64_t Sum(std::span<const std::int64_t> v) {
  std::int64_t s = 0;
  for (std::int64_t c : v) s += c;
  return s;
}

std::vector<IntVec> HypercubeCorners(std::span<const Rat> x) {
  IntVec lower(x.size()), upper(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    lower[i] = x[i].Floor();
    upper[i] = x[i].Ceil();
  }
  return BoxPoints(lower, upper);
}

std::vector<IntVec> BoxPoints(const IntVec& lower, const IntVec& upper) {
  if (lower.size() != upper.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) return {};
  }
  std::vector<IntVec> out;
  IntVec z = lower;
  while (true) {
    out.push_back(z);
    // Odometer increment, last coordinate fastest.
    std::size_t i = z.size();
    while (i > 0) {
      --i;
      if (z[i] < upper[i]) {
        ++z[i];
        break;
      }
      z[i] = lower[i];
      if (i == 0) return out;
    }
    if (z.empty()) return out;
  }
}

std::string Format(std::span<const std::int64_t> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string Format(std::span<const Rat> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].ToString();
  }
  return s + ")";
}

RatVec ParseRatVec(std::string_view text) {
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  RatVec out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string_view piece = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.push_back(Rat::Parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace ctn
