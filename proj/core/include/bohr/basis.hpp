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

#ifndef BOHR_BASIS_HPP
#define BOHR_BASIS_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "bohr/exponent.hpp"
#include "bohr/rational.hpp"

namespace bohr {

// A rational basis of the span of an exponent list. Every element is one of
// the input exponents; sourceIndices[j] is the 0-based position it came from.
struct Basis {
  std::vector<ExponentVector> elements;
  std::vector<std::size_t> sourceIndices;

  std::size_t size() const { return elements.size(); }
  std::vector<double> values(const SymbolTable& syms) const;

  friend bool operator==(const Basis&, const Basis&) = default;
};

// Sparse exact rational matrix. Rows are indexed by term, columns by basis
// element (for R) or by term (for T).
struct BohrMatrix {
  using Row = std::map<std::size_t, Rational>;

  std::vector<Row> rows;
  std::size_t ncols = 0;

  std::size_t nrows() const { return rows.size(); }
  Rational at(std::size_t i, std::size_t j) const;
  // Rows with the given 0-based indices, in the given order.
  BohrMatrix restrictRows(std::span<const std::size_t> indices) const;

  friend bool operator==(const BohrMatrix&, const BohrMatrix&) = default;
};

struct BasisDecomposition {
  Basis basis;
  BohrMatrix R;  // Λ = R·B
  BohrMatrix T;  // B = T·Λ
};

// Earliest-exponent-first elimination over the rationals: an exponent enters
// the basis iff it is independent of the exponents already kept. Zero
// exponents get an all-zero row of R. Throws Error{EmptyInput}.
BasisDecomposition computeBasis(std::span<const ExponentVector> exponents);

// M·v in ExponentVector arithmetic. Throws Error{DimensionMismatch}.
std::vector<ExponentVector> apply(const BohrMatrix& m, std::span<const ExponentVector> v);

bool isIntegral(const BohrMatrix& r);

// lcm of the denominators over rows 1..h (1-based). Throws Error{IndexOutOfRange}.
Integer denominatorLcm(const BohrMatrix& r, std::size_t h);

// lcm of the denominators over every row; 1 for an empty matrix.
Integer denominatorLcm(const BohrMatrix& r);

struct IntegralTruncation {
  Basis basis;   // β'(j) = β(j) / scale
  BohrMatrix R;  // scale·R on rows 1..h, integral
  Integer scale;  // d_h
};

// Rescales the basis by d_h so that the first h rows of R become integral.
IntegralTruncation makeIntegralTruncated(const Basis& basis, const BohrMatrix& r, std::size_t h);

}  // namespace bohr

#endif  // BOHR_BASIS_HPP
