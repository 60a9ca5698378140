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

#ifndef BOHR_SCENARIOS_HPP
#define BOHR_SCENARIOS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

inline constexpr const char* kUnitSymbol = "ONE";

// λ(n) = 2n − 1 + 1/(2(2n − 1)), exactly.
Rational bohrExponent(std::size_t n);

// Σ_{n≤N} exp(−λ(n)s) over the single symbol ONE = 1, with abscissa 0 and a
// geometric tail majorant (coefficients 1, gaps ≥ 5/3).
SeriesSpec bohrExample(std::size_t n);

struct ShiftTime {
  double value;            // τ_m as a double
  Integer multipleOf2Pi;   // ∏_{n≤m} (2n − 1)

  Rational overPi() const { return Rational(multipleOf2Pi * 2); }
};

// τ_m = 2π ∏_{n≤m} (2n − 1). Throws Error{BadIndex} for m = 0.
ShiftTime tau(std::size_t m);

SeriesSpec negate(const SeriesSpec& spec);

// Σ a(n) n^{-s}: exponents are Σ e_p·Lp over the factorisation n = ∏ p^{e_p}
// with symbols Lp = log p. Throws Error{BadIndex} for n < 1 or repeated n.
SeriesSpec ordinarySeries(std::vector<std::pair<std::int64_t, Complex>> coeffs);

}  // namespace bohr

#endif  // BOHR_SCENARIOS_HPP
