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

#ifndef BOHR_VALUESETS_HPP
#define BOHR_VALUESETS_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "bohr/equivalence.hpp"
#include "bohr/series.hpp"

namespace bohr {

enum class CloudRoute { DirectStrip, DirectLine, EquivalenceClass };

std::string_view routeName(CloudRoute route);

struct CloudMeta {
  double sigma1 = 0.0;
  double sigma2 = 0.0;  // equal to sigma1 for line samples
  double tMax = 0.0;    // zero for equivalence-class samples
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

struct ValueCloud {
  std::vector<Complex> points;
  CloudRoute route = CloudRoute::DirectStrip;
  CloudMeta meta;
};

// f(σ + it) at `count` points with t uniform in [−tMax, tMax] and σ drawn from
// (σ1, σ2) with density ∝ (σ − σ1)^(−1/2). Throws Error{BadRange}.
ValueCloud sampleStripDirect(const SeriesSpec& spec, double sigma1, double sigma2, double tMax,
                             std::size_t count, std::uint64_t seed);

// g(σ) for random equivalent series g = twist(f, Y), σ drawn as in
// sampleStripDirect. Each y_j is uniform on [0, 2π·d), d the denominator lcm of R.
// Throws Error{BadRange}.
ValueCloud sampleStripViaEquivalence(const SeriesSpec& spec, double sigma1, double sigma2,
                                     std::size_t count, std::uint64_t seed);

// As above with σ fixed: the closure of the values on the line Re s = σ0 when
// the exponents have an integral basis.
ValueCloud sampleLineViaEquivalence(const SeriesSpec& spec, double sigma0, std::size_t count,
                                    std::uint64_t seed);

// f(σ0 + it) with t uniform in [−tMax, tMax]. Throws Error{BadRange}.
ValueCloud sampleLine(const SeriesSpec& spec, double sigma0, double tMax, std::size_t count,
                      std::uint64_t seed);

// max_{a∈A} min_{b∈B} |a − b|. Throws Error{EmptyCloud}.
double directedHausdorff(std::span<const Complex> from, std::span<const Complex> to);

double hausdorff(std::span<const Complex> a, std::span<const Complex> b);
double hausdorff(const ValueCloud& a, const ValueCloud& b);

struct KroneckerHit {
  bool found = false;
  double t = 0.0;
  double residual = 0.0;  // max_j dist(−tβ_j − y_j, 2πℤ)
};

// Smallest grid-located t in [0, tMaxSearch] with −tβ_j ≡ y_j (mod 2π) for
// every j within tol, refined locally. Throws Error{DimensionMismatch} or
// Error{BadRange} on malformed input.
KroneckerHit kroneckerFindT(std::span<const double> basisValues, const PhaseVector& target, double tol,
                            double tMaxSearch);

}  // namespace bohr

#endif  // BOHR_VALUESETS_HPP
