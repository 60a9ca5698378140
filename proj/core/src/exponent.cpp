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

#include "bohr/exponent.hpp"

#include <cctype>
#include <cmath>

#include "bohr/error.hpp"

namespace bohr {

namespace {

bool validName(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

SymbolTable::SymbolTable(std::initializer_list<Symbol> symbols) {
  for (const auto& s : symbols) add(s.name, s.value);
}

void SymbolTable::add(const std::string& name, double value) {
  if (!validName(name)) throw Error(ErrorCode::BadSymbol, "invalid symbol name '" + name + "'");
  if (contains(name)) throw Error(ErrorCode::BadSymbol, "duplicate symbol '" + name + "'");
  if (!std::isfinite(value) || value == 0.0) {
    throw Error(ErrorCode::BadSymbol, "symbol '" + name + "' must have a finite nonzero value");
  }
  symbols_.push_back({name, value});
}

std::optional<double> SymbolTable::find(const std::string& name) const {
  for (const auto& s : symbols_) {
    if (s.name == name) return s.value;
  }
  return std::nullopt;
}

ExponentVector::ExponentVector(Coords coords) : coords_(std::move(coords)) { prune(); }

ExponentVector::ExponentVector(std::initializer_list<std::pair<const std::string, Rational>> coords)
    : coords_(coords) {
  prune();
}

ExponentVector ExponentVector::unit(const std::string& symbol, const Rational& scale) {
  return ExponentVector(Coords{{symbol, scale}});
}

Rational ExponentVector::coord(const std::string& symbol) const {
  auto it = coords_.find(symbol);
  return it == coords_.end() ? Rational(0) : it->second;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& rhs) {
  for (const auto& [name, q] : rhs.coords_) coords_[name] += q;
  prune();
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& rhs) {
  for (const auto& [name, q] : rhs.coords_) coords_[name] -= q;
  prune();
  return *this;
}

ExponentVector& ExponentVector::operator*=(const Rational& scale) {
  for (auto& [name, q] : coords_) q *= scale;
  prune();
  return *this;
}

std::string ExponentVector::str() const {
  if (coords_.empty()) return "0";
  std::string out;
  for (const auto& [name, q] : coords_) {
    if (!out.empty()) out += " + ";
    out += q.str() + "*" + name;
  }
  return out;
}

void ExponentVector::prune() {
  std::erase_if(coords_, [](const auto& kv) { return kv.second.isZero(); });
}

double numericValue(const ExponentVector& e, const SymbolTable& syms) {
  double total = 0.0;
  for (const auto& [name, q] : e.coords()) {
    auto value = syms.find(name);
    if (!value) throw Error(ErrorCode::UnknownSymbol, "undeclared symbol '" + name + "'");
    total += q.toDouble() * *value;
  }
  return total;
}

}  // namespace bohr
