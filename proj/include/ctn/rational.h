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

// Exact rational scalars.
//
// Rat is an always-canonical rational number (lowest terms, positive
// denominator). ExtRat adds a single MinusInfinity sentinel used for
// infeasible bundles: it compares below every rational and absorbs any sum.

#ifndef CTN_RATIONAL_H_
#define CTN_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace ctn {

class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t numerator, std::int64_t denominator);
  explicit Rat(mpq_class value);

  // Accepts "p/q", "-p/q" or a bare integer. Throws std::invalid_argument.
  static Rat Parse(std::string_view text);

  // "p/q" in lowest terms, or a bare integer when the denominator is 1.
  std::string ToString() const;

  const mpq_class& mpq() const { return value_; }

  bool IsInteger() const;
  bool IsZero() const { return sgn(value_) == 0; }
  int Sign() const { return sgn(value_); }
  std::int64_t Floor() const;
  std::int64_t Ceil() const;
  // Throws std::domain_error when not an integer or out of range.
  std::int64_t ToInt64() const;
  double ToDouble() const { return value_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-value_)); }
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  // Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t Hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// A rational extended by MinusInfinity. Valuations use it for "infeasible".
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(Rat value) : value_(std::move(value)) {}  // NOLINT
  ExtRat(std::int64_t value) : value_(value) {}     // NOLINT

  static ExtRat MinusInfinity();
  // Accepts everything Rat::Parse does plus "-inf" (ASCII or U+2212 minus).
  static ExtRat Parse(std::string_view text);

  bool IsFinite() const { return finite_; }
  // Throws std::domain_error on MinusInfinity.
  const Rat& value() const;
  std::string ToString() const;

  // MinusInfinity absorbs.
  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  bool finite_ = true;
  Rat value_;
};

std::ostream& operator<<(std::ostream& os, const ExtRat& r);

}  // namespace ctn

template <>
struct std::hash<ctn::Rat> {
  std::size_t operator()(const ctn::Rat& r) const { return r.Hash(); }
};

#endif  // CTN_RATIONAL_H_
