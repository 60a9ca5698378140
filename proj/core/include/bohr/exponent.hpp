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

#ifndef BOHR_EXPONENT_HPP
#define BOHR_EXPONENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bohr/rational.hpp"

namespace bohr {

struct Symbol {
  std::string name;
  double value = 0.0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Named real constants that exponents are built from. Their values are taken
// to be linearly independent over the rationals; that is the caller's promise
// and is never checked.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(std::initializer_list<Symbol> symbols);

  // Throws Error{BadSymbol} on a duplicate or malformed name, or on a value
  // that is zero or not finite.
  void add(const std::string& name, double value);

  std::optional<double> find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name).has_value(); }

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// A finite rational combination of symbols. Zero coordinates are never stored,
// so two vectors are equal exactly when their coordinate maps are equal.
class ExponentVector {
 public:
  using Coords = std::map<std::string, Rational>;

  ExponentVector() = default;
  explicit ExponentVector(Coords coords);
  ExponentVector(std::initializer_list<std::pair<const std::string, Rational>> coords);

  static ExponentVector unit(const std::string& symbol, const Rational& scale = 1);

  const Coords& coords() const { return coords_; }
  bool isZero() const { return coords_.empty(); }
  Rational coord(const std::string& symbol) const;

  ExponentVector& operator+=(const ExponentVector& rhs);
  ExponentVector& operator-=(const ExponentVector& rhs);
  ExponentVector& operator*=(const Rational& scale);

  friend ExponentVector operator+(ExponentVector lhs, const ExponentVector& rhs) { return lhs += rhs; }
  friend ExponentVector operator-(ExponentVector lhs, const ExponentVector& rhs) { return lhs -= rhs; }
  friend ExponentVector operator*(const Rational& scale, ExponentVector v) { return v *= scale; }
  friend ExponentVector operator*(ExponentVector v, const Rational& scale) { return v *= scale; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  // Lexicographic on coordinates; only meant for use as a map key.
  friend bool operator<(const ExponentVector& lhs, const ExponentVector& rhs) {
    return lhs.coords_ < rhs.coords_;
  }

  std::string str() const;

 private:
  void prune();

  Coords coords_;
};

// Σ coords[j]·value(j) in double precision. Throws Error{UnknownSymbol}.
double numericValue(const ExponentVector& e, const SymbolTable& syms);

}  // namespace bohr

#endif  // BOHR_EXPONENT_HPP
