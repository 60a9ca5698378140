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

#include "bohr/rational.hpp"

#include <cctype>
#include <ostream>

#include "bohr/error.hpp"

namespace bohr {

namespace mp = boost::multiprecision;

namespace {

bool isDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

const Integer kExactDoubleLimit = Integer(1) << 53;

}  // namespace

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = den < 0 ? mp::cpp_rational(-num, -den) : mp::cpp_rational(num, den);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!isDigits(den)) return std::nullopt;
  }
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!isDigits(num)) return std::nullopt;
  Integer n{std::string(num)};
  if (negative) n = -n;
  if (den.empty()) return Rational(n);
  Integer d{std::string(den)};
  if (d == 0) return std::nullopt;
  return Rational(n, d);
}

Integer Rational::numerator() const { return mp::numerator(value_); }

Integer Rational::denominator() const { return mp::denominator(value_); }

bool Rational::isZero() const { return value_.is_zero(); }

bool Rational::isInteger() const { return mp::denominator(value_) == 1; }

int Rational::sign() const { return value_.sign(); }

double Rational::toDouble() const {
  const Integer num = numerator();
  const Integer den = denominator();
  if (mp::abs(num) <= kExactDoubleLimit && den <= kExactDoubleLimit) {
    // Both operands are exact doubles, so the quotient is correctly rounded.
    return num.convert_to<double>() / den.convert_to<double>();
  }
  return value_.convert_to<double>();
}

std::string Rational::str() const {
  if (isInteger()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::operator-() const { return Rational(mp::cpp_rational(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.isZero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer gcd(const Integer& a, const Integer& b) { return mp::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return mp::abs(a / mp::gcd(a, b) * b);
}

}  // namespace bohr
