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

#include "bohr/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include "bohr/error.hpp"

namespace bohr {

namespace {

std::map<std::int64_t, std::int64_t> factorize(std::int64_t n) {
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace

Rational bohrExponent(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadIndex, "terms are numbered from 1");
  const auto odd = static_cast<std::int64_t>(2 * n - 1);
  return Rational(odd) + Rational(1) / Rational(2 * odd);
}

SeriesSpec bohrExample(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadIndex, "the example needs at least one term");
  SeriesSpec spec;
  spec.symbols.add(kUnitSymbol, 1.0);
  spec.abscissa = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    spec.terms.push_back({ExponentVector::unit(kUnitSymbol, bohrExponent(k)), Complex(1.0, 0.0)});
  }
  spec.tail = TailMajorant{ExponentVector::unit(kUnitSymbol, bohrExponent(n + 1)), 1.0, 5.0 / 3.0};
  return spec;
}

ShiftTime tau(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::BadIndex, "shift times are numbered from 1");
  Integer product = 1;
  for (std::size_t n = 1; n <= m; ++n) product *= static_cast<std::int64_t>(2 * n - 1);
  return {2.0 * std::numbers::pi * product.convert_to<double>(), product};
}

SeriesSpec negate(const SeriesSpec& spec) {
  SeriesSpec out = spec;
  for (auto& t : out.terms) t.coeff = -t.coeff;
  return out;
}

SeriesSpec ordinarySeries(std::vector<std::pair<std::int64_t, Complex>> coeffs) {
  std::set<std::int64_t> seen;
  std::set<std::int64_t> primes;
  for (const auto& [n, a] : coeffs) {
    if (n < 1) throw Error(ErrorCode::BadIndex, "index " + std::to_string(n) + " is not positive");
    if (!seen.insert(n).second) throw Error(ErrorCode::BadIndex, "index " + std::to_string(n) + " repeated");
    for (const auto& [p, e] : factorize(n)) primes.insert(p);
  }
  std::sort(coeffs.begin(), coeffs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  SeriesSpec spec;
  for (std::int64_t p : primes) spec.symbols.add("L" + std::to_string(p), std::log(static_cast<double>(p)));
  for (const auto& [n, a] : coeffs) {
    ExponentVector e;
    for (const auto& [p, k] : factorize(n)) e += ExponentVector::unit("L" + std::to_string(p), Rational(k));
    spec.terms.push_back({std::move(e), a});
  }
  spec.abscissa = -std::numeric_limits<double>::infinity();
  return spec;
}

}  // namespace bohr
