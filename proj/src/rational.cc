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

#include "polymat/rational.h"

#include <charconv>
#include <numeric>

#include "polymat/error.h"

namespace polymat {
namespace {

std::int64_t narrow(__int128 value) {
  if (value > INT64_MAX || value < INT64_MIN) {
    throw Error(ErrorCode::kInvalidArgument, "rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(value);
}

Rational make(__int128 num, __int128 den) {
  return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError,
                "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) {
    throw Error(ErrorCode::kParseError,
                "denominator must be positive: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& other) {
  if (den_ == 1 && other.den_ == 1) {
    num_ = narrow(static_cast<__int128>(num_) + other.num_);
    return *this;
  }
  *this = make(static_cast<__int128>(num_) * other.den_ +
                   static_cast<__int128>(other.num_) * den_,
               static_cast<__int128>(den_) * other.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  if (den_ == 1 && other.den_ == 1) {
    num_ = narrow(static_cast<__int128>(num_) - other.num_);
    return *this;
  }
  *this = make(static_cast<__int128>(num_) * other.den_ -
                   static_cast<__int128>(other.num_) * den_,
               static_cast<__int128>(den_) * other.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  *this = make(static_cast<__int128>(num_) * other.num_,
               static_cast<__int128>(den_) * other.den_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace polymat
