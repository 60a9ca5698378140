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

#ifndef BOHR_SERIES_HPP
#define BOHR_SERIES_HPP

#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "bohr/exponent.hpp"

namespace bohr {

using Complex = std::complex<double>;

// Geometric majorant for the omitted terms of a truncated series:
//   Σ_{omitted} |a(n)| exp(-λ(n)σ) ≤ coeffBound·exp(-λNext·σ) / (1 - exp(-minGap·σ)),
// valid when every omitted |a(n)| ≤ coeffBound and consecutive omitted
// exponents are at least minGap apart.
struct TailMajorant {
  ExponentVector lambdaNext;
  double coeffBound = 0.0;
  double minGap = 1.0;

  friend bool operator==(const TailMajorant&, const TailMajorant&) = default;
};

struct Term {
  ExponentVector exponent;
  Complex coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// A finite truncation of f(s) = Σ a(n) exp(-λ(n) s).
struct SeriesSpec {
  SymbolTable symbols;
  std::vector<Term> terms;
  // Declared abscissa of absolute convergence of the intended infinite series.
  double abscissa = -std::numeric_limits<double>::infinity();
  std::optional<TailMajorant> tail;

  std::size_t size() const { return terms.size(); }
  std::vector<ExponentVector> exponents() const;
  std::vector<Complex> coefficients() const;
  // Numeric λ(n) for every term.
  std::vector<double> exponentValues() const;
  // The first n terms; the tail majorant is dropped.
  SeriesSpec truncated(std::size_t n) const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

// Checks strictly increasing numeric exponents and distinct exponent vectors.
// Throws Error{NonIncreasingExponents | DuplicateExponent | UnknownSymbol}
// carrying the 1-based index of the offending term.
const SeriesSpec& validateSeries(const SeriesSpec& spec);

// Throws Error{NonpositiveSigma} for sigma <= 0.
double tailBound(const TailMajorant& tail, const SymbolTable& syms, double sigma);

}  // namespace bohr

#endif  // BOHR_SERIES_HPP
