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

#ifndef BOHR_ZEROS_HPP
#define BOHR_ZEROS_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

struct Rectangle {
  double sigmaMin = 0.0;
  double sigmaMax = 0.0;
  double tMin = 0.0;
  double tMax = 0.0;
};

struct TWindow {
  double min = 0.0;
  double max = 0.0;
};

struct ContourOptions {
  std::size_t stepsPerSide = 256;
  // Minimum |f − v| allowed on the contour; unset means 1e-8·(1 + |v|).
  std::optional<double> boundaryMargin;
  std::size_t maxPointsPerSide = std::size_t{1} << 14;
};

struct WindingResult {
  int count = 0;
  double turns = 0.0;   // accumulated argument / 2π before rounding
  double defect = 0.0;  // |turns − count|
  std::size_t samples = 0;
};

// Winding number of f − v along the counterclockwise boundary of the
// rectangle, accumulated from argument increments kept below π/4 by adaptive
// bisection (π/2 tolerated at the resolution cap). Throws
// Error{BadRange | BoundaryTooClose | NonconvergentSubdivision | DegenerateTarget}.
WindingResult windingNumber(const SeriesSpec& spec, Complex v, const Rectangle& rect,
                            const ContourOptions& options = {});

// Number of zeros of f − v inside the rectangle, with multiplicity.
int countZeros(const SeriesSpec& spec, Complex v, const Rectangle& rect, std::size_t steps = 256);

inline constexpr double kMinusInfinity = -std::numeric_limits<double>::infinity();

// Abscissa of the maximal right half-plane (restricted to the t-window) on
// which f − v has no zeros, to within ±tol; kMinusInfinity when no zero lies
// in [sigmaFloor, σtop] × window. σtop is where the lowest-exponent term of
// f − v dominates the rest by a factor two.
double sigmaStar(const SeriesSpec& spec, Complex v, TWindow window, double sigmaFloor, double tol,
                 const ContourOptions& options = {});

// countZeros(f, v, [σ1, σ2] × window) ≥ 1.
bool attainsValue(const SeriesSpec& spec, Complex v, double sigma1, double sigma2, TWindow window);

// σ*(f(m)) for m = 1..mMax.
std::vector<double> sigmaSequence(const SeriesSpec& spec, std::size_t mMax, TWindow window, double tol,
                                  double sigmaFloor = -10.0);

}  // namespace bohr

#endif  // BOHR_ZEROS_HPP
