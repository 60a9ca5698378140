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

#include "bohr/series.hpp"

#include <cmath>
#include <map>
#include <string>

#include "bohr/error.hpp"

namespace bohr {

std::vector<ExponentVector> SeriesSpec::exponents() const {
  std::vector<ExponentVector> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.exponent);
  return out;
}

std::vector<Complex> SeriesSpec::coefficients() const {
  std::vector<Complex> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.coeff);
  return out;
}

std::vector<double> SeriesSpec::exponentValues() const {
  std::vector<double> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(numericValue(t.exponent, symbols));
  return out;
}

SeriesSpec SeriesSpec::truncated(std::size_t n) const {
  if (n > terms.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "cannot truncate " + std::to_string(terms.size()) + " terms to " + std::to_string(n));
  }
  SeriesSpec out{symbols, {terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(n)}, abscissa,
                 std::nullopt};
  return out;
}

const SeriesSpec& validateSeries(const SeriesSpec& spec) {
  std::map<ExponentVector, std::size_t> seen;
  double previous = 0.0;
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    const auto& e = spec.terms[i].exponent;
    if (auto [it, inserted] = seen.emplace(e, i); !inserted) {
      throw Error(ErrorCode::DuplicateExponent,
                  "terms " + std::to_string(it->second + 1) + " and " + std::to_string(i + 1) +
                      " share exponent " + e.str(),
                  i + 1);
    }
    const double value = numericValue(e, spec.symbols);
    if (i > 0 && !(value > previous)) {
      throw Error(ErrorCode::NonIncreasingExponents,
                  "exponent of term " + std::to_string(i + 1) + " does not exceed its predecessor",
                  i + 1);
    }
    previous = value;
  }
  if (spec.tail) {
    if (!(spec.tail->coeffBound >= 0.0) || !std::isfinite(spec.tail->coeffBound) ||
        !(spec.tail->minGap > 0.0) || !std::isfinite(spec.tail->minGap)) {
      throw Error(ErrorCode::BadRange, "tail majorant needs coeffBound >= 0 and minGap > 0");
    }
    const double next = numericValue(spec.tail->lambdaNext, spec.symbols);
    if (!spec.terms.empty() && !(next > previous)) {
      throw Error(ErrorCode::NonIncreasingExponents,
                  "tail exponent does not exceed the last term", spec.terms.size() + 1);
    }
  }
  return spec;
}

double tailBound(const TailMajorant& tail, const SymbolTable& syms, double sigma) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::NonpositiveSigma, "tail bound needs sigma > 0");
  if (tail.coeffBound == 0.0) return 0.0;
  const double lambda = numericValue(tail.lambdaNext, syms);
  return tail.coeffBound * std::exp(-lambda * sigma) / -std::expm1(-tail.minGap * sigma);
}

}  // namespace bohr
