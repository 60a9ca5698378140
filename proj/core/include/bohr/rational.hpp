// Copyright 2026 The bohreq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOHR_RATIONAL_HPP
#define BOHR_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bohr {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value);
  // Throws Error{DivisionByZero} when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  // Accepts `[+-]digits` or `[+-]digits/digits` with a nonzero denominator.
  static std::optional<Rational> parse(std::string_view text);

  Integer numerator() const;
  Integer denominator() const;

  bool isZero() const;
  bool isInteger() const;
  int sign() const;

  double toDouble() const;
  // "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  explicit Rational(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {}

  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace bohr

#endif  // BOHR_RATIONAL_HPP
