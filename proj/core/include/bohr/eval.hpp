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

#ifndef BOHR_EVAL_HPP
#define BOHR_EVAL_HPP

#include <cstddef>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

struct EvalPoint {
  double sigma = 0.0;
  double t = 0.0;
};

// Closed box [sigmaMin, sigmaMax] × [tMin, tMax] sampled on a
// (sigmaSteps + 1) × (tSteps + 1) grid.
struct GridBox {
  double sigmaMin = 0.0;
  double sigmaMax = 0.0;
  double tMin = 0.0;
  double tMax = 0.0;
  std::size_t sigmaSteps = 1;
  std::size_t tSteps = 1;
};

// Exponent values resolved to doubles once, for repeated evaluation.
class CompiledSeries {
 public:
  explicit CompiledSeries(const SeriesSpec& spec);

  Complex operator()(double sigma, double t) const;
  Complex operator()(const EvalPoint& p) const { return (*this)(p.sigma, p.t); }

  // Σ |a(n)| exp(−λ(n)σ), the triangle-inequality bound on |f| along Re s = σ.
  double modulusBound(double sigma) const;

  const std::vector<double>& lambdas() const { return lambda_; }
  const std::vector<Complex>& coeffs() const { return coeff_; }

 private:
  std::vector<double> lambda_;
  std::vector<Complex> coeff_;
};

// Σ a(n) exp(−λ(n)(σ + it)) in term order.
Complex evaluate(const SeriesSpec& spec, const EvalPoint& p);

// Coefficients multiplied by exp(−iλ(n)τ), i.e. s ↦ s + iτ.
SeriesSpec shiftSeries(const SeriesSpec& spec, double tau);

// max over the grid of |a(p) − b(p)|. Throws Error{BadRange} for an empty box.
double uniformDistance(const SeriesSpec& a, const SeriesSpec& b, const GridBox& box);

struct ShiftPhase {
  bool isMinusOne;
  Rational phaseOverPi;  // λ·τ/π
  Rational residual;     // phaseOverPi minus the nearest odd integer
};

// Whether exp(−iλτ) = −1 exactly, given λ and τ/π as rationals.
ShiftPhase shiftPhaseExact(const Rational& lambda, const Rational& tauOverPi);

// The same for the n-th exponent of the counterexample series and τ_m.
ShiftPhase shiftPhaseExact(std::size_t n, std::size_t m);

}  // namespace bohr

#endif  // BOHR_EVAL_HPP
