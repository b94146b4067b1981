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

#include "ctn/rational.h"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace ctn {
namespace {

mpz_class ParseInteger(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) +
                                "'");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw std::invalid_argument("malformed rational: '" +
                                  std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

std::int64_t ToInt64Checked(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::domain_error("integer out of range");
  return z.get_si();
}

}  // namespace

Rat::Rat(std::int64_t value) : value_(static_cast<long>(value)) {}

Rat::Rat(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::Parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(mpq_class(ParseInteger(text, text)));
  }
  mpz_class num = ParseInteger(text.substr(0, slash), text);
  mpz_class den = ParseInteger(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" +
                                            std::string(text) + "'");
  return Rat(mpq_class(num, den));
}

std::string Rat::ToString() const { return value_.get_str(10); }

bool Rat::IsInteger() const { return value_.get_den() == 1; }

std::int64_t Rat::Floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return ToInt64Checked(q);
}

std::int64_t Rat::Ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return ToInt64Checked(q);
}

std::int64_t Rat::ToInt64() const {
  if (!IsInteger()) throw std::domain_error("not an integer: " + ToString());
  return ToInt64Checked(value_.get_num());
}

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.IsZero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rat::Hash() const {
  const std::size_t h1 = mpz_get_ui(value_.get_num_mpz_t());
  const std::size_t h2 = mpz_get_ui(value_.get_den_mpz_t());
  return h1 * 1000003u ^ (h2 + static_cast<std::size_t>(Sign() + 1));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.ToString();
}

ExtRat ExtRat::MinusInfinity() {
  ExtRat r;
  r.finite_ = false;
  return r;
}

ExtRat ExtRat::Parse(std::string_view text) {
  if (text == "-inf" || text == "−inf") return MinusInfinity();
  return ExtRat(Rat::Parse(text));
}

const Rat& ExtRat::value() const {
  if (!finite_) throw std::domain_error("value of -inf requested");
  return value_;
}

std::string ExtRat::ToString() const {
  return finite_ ? value_.ToString() : std::string("-inf");
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (!a.finite_ || !b.finite_) return ExtRat::MinusInfinity();
  return ExtRat(a.value_ + b.value_);
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
  if (!a.finite_) return std::strong_ordering::less;
  if (!b.finite_) return std::strong_ordering::greater;
  return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtRat& r) {
  return os << r.ToString();
}

}  // namespace ctn
