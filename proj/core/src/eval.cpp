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

#include "bohr/eval.hpp"

#include <algorithm>
#include <cmath>

#include "bohr/error.hpp"
#include "bohr/scenarios.hpp"

namespace bohr {

namespace {

Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

CompiledSeries::CompiledSeries(const SeriesSpec& spec)
    : lambda_(spec.exponentValues()), coeff_(spec.coefficients()) {}

Complex CompiledSeries::operator()(double sigma, double t) const {
  Complex sum(0.0, 0.0);
  for (std::size_t n = 0; n < lambda_.size(); ++n) {
    const double l = lambda_[n];
    sum += coeff_[n] * std::polar(std::exp(-l * sigma), -l * t);
  }
  return sum;
}

double CompiledSeries::modulusBound(double sigma) const {
  double total = 0.0;
  for (std::size_t n = 0; n < lambda_.size(); ++n) total += std::abs(coeff_[n]) * std::exp(-lambda_[n] * sigma);
  return total;
}

Complex evaluate(const SeriesSpec& spec, const EvalPoint& p) { return CompiledSeries(spec)(p); }

SeriesSpec shiftSeries(const SeriesSpec& spec, double tau) {
  SeriesSpec out = spec;
  const auto lambdas = spec.exponentValues();
  for (std::size_t n = 0; n < out.size(); ++n) out.terms[n].coeff *= std::polar(1.0, -lambdas[n] * tau);
  return out;
}

double uniformDistance(const SeriesSpec& a, const SeriesSpec& b, const GridBox& box) {
  if (!(box.sigmaMin <= box.sigmaMax) || !(box.tMin <= box.tMax) || box.sigmaSteps == 0 || box.tSteps == 0) {
    throw Error(ErrorCode::BadRange, "grid box needs ordered ranges and positive step counts");
  }
  const CompiledSeries fa(a);
  const CompiledSeries fb(b);
  const double ds = (box.sigmaMax - box.sigmaMin) / static_cast<double>(box.sigmaSteps);
  const double dt = (box.tMax - box.tMin) / static_cast<double>(box.tSteps);
  double worst = 0.0;
  for (std::size_t i = 0; i <= box.sigmaSteps; ++i) {
    const double sigma = box.sigmaMin + static_cast<double>(i) * ds;
    for (std::size_t j = 0; j <= box.tSteps; ++j) {
      const double t = box.tMin + static_cast<double>(j) * dt;
      worst = std::max(worst, std::abs(fa(sigma, t) - fb(sigma, t)));
    }
  }
  return worst;
}

ShiftPhase shiftPhaseExact(const Rational& lambda, const Rational& tauOverPi) {
  const Rational phase = lambda * tauOverPi;
  // Nearest odd integer 2k+1 to phase: k = floor((phase - 1)/2 + 1/2) = floor(phase/2).
  const Rational half = phase / Rational(2);
  const Integer k = floorDiv(half.numerator(), half.denominator());
  const Rational odd(2 * k + 1);
  const Rational residual = phase - odd;
  return {residual.isZero(), phase, residual};
}

ShiftPhase shiftPhaseExact(std::size_t n, std::size_t m) {
  return shiftPhaseExact(bohrExponent(n), tau(m).overPi());
}

}  // namespace bohr
