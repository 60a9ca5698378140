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

#include "bohr/valuesets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point.hpp>
#include <boost/geometry/index/rtree.hpp>

#include "bohr/basis.hpp"
#include "bohr/error.hpp"
#include "bohr/eval.hpp"

namespace bohr {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxKroneckerGrid = 2e7;

// Uniform on the open interval (0, 1), identical on every platform.
double uniformOpen(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// σ in (σ1, σ2) with density ∝ (σ − σ1)^(−1/2). For positive exponents the
// value region is widest at the left edge and is reached only there.
double stripSigma(std::mt19937_64& rng, double sigma1, double sigma2) {
  const double u = uniformOpen(rng);
  return sigma1 + (sigma2 - sigma1) * u * u;
}

void checkStrip(double sigma1, double sigma2, std::size_t count) {
  if (!(sigma1 < sigma2) || !std::isfinite(sigma1) || !std::isfinite(sigma2)) {
    throw Error(ErrorCode::BadRange, "strip needs finite sigma1 < sigma2");
  }
  if (count == 0) throw Error(ErrorCode::BadRange, "count must be positive");
}

void checkWindow(double tMax, std::size_t count) {
  if (!(tMax > 0.0) || !std::isfinite(tMax)) throw Error(ErrorCode::BadRange, "tMax must be positive");
  if (count == 0) throw Error(ErrorCode::BadRange, "count must be positive");
}

ValueCloud sampleEquivalence(const SeriesSpec& spec, double sigma1, double sigma2, std::size_t count,
                             std::uint64_t seed) {
  ValueCloud cloud;
  cloud.route = CloudRoute::EquivalenceClass;
  cloud.meta = {sigma1, sigma2, 0.0, count, seed};
  cloud.points.reserve(count);

  const CompiledSeries f(spec);
  const auto& lambdas = f.lambdas();
  const auto& coeffs = f.coeffs();
  std::vector<std::vector<std::pair<std::size_t, double>>> rows;
  std::size_t k = 0;
  double period = kTwoPi;
  if (spec.size() > 0) {
    const auto exps = spec.exponents();
    const BasisDecomposition dec = computeBasis(exps);
    k = dec.basis.size();
    period = kTwoPi * denominatorLcm(dec.R).convert_to<double>();
    for (const auto& row : dec.R.rows) {
      auto& dense = rows.emplace_back();
      for (const auto& [j, q] : row) dense.emplace_back(j, q.toDouble());
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<double> y(k);
  for (std::size_t i = 0; i < count; ++i) {
    for (auto& yj : y) yj = period * uniformOpen(rng);
    const double sigma = sigma1 == sigma2 ? sigma1 : stripSigma(rng, sigma1, sigma2);
    Complex sum(0.0, 0.0);
    for (std::size_t n = 0; n < lambdas.size(); ++n) {
      double phase = 0.0;
      for (const auto& [j, q] : rows[n]) phase += q * y[j];
      sum += coeffs[n] * std::polar(std::exp(-lambdas[n] * sigma), phase);
    }
    cloud.points.push_back(sum);
  }
  return cloud;
}

using Point = bg::model::point<double, 2, bg::cs::cartesian>;
using Tree = bgi::rtree<Point, bgi::quadratic<16>>;

}  // namespace

std::string_view routeName(CloudRoute route) {
  switch (route) {
    case CloudRoute::DirectStrip: return "directStrip";
    case CloudRoute::DirectLine: return "directLine";
    case CloudRoute::EquivalenceClass: return "equivalenceClass";
  }
  return "unknown";
}

ValueCloud sampleStripDirect(const SeriesSpec& spec, double sigma1, double sigma2, double tMax,
                             std::size_t count, std::uint64_t seed) {
  checkStrip(sigma1, sigma2, count);
  checkWindow(tMax, count);
  ValueCloud cloud;
  cloud.route = CloudRoute::DirectStrip;
  cloud.meta = {sigma1, sigma2, tMax, count, seed};
  cloud.points.reserve(count);
  const CompiledSeries f(spec);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const double sigma = stripSigma(rng, sigma1, sigma2);
    const double t = tMax * (2.0 * uniformOpen(rng) - 1.0);
    cloud.points.push_back(f(sigma, t));
  }
  return cloud;
}

ValueCloud sampleStripViaEquivalence(const SeriesSpec& spec, double sigma1, double sigma2,
                                     std::size_t count, std::uint64_t seed) {
  checkStrip(sigma1, sigma2, count);
  return sampleEquivalence(spec, sigma1, sigma2, count, seed);
}

ValueCloud sampleLineViaEquivalence(const SeriesSpec& spec, double sigma0, std::size_t count,
                                    std::uint64_t seed) {
  if (!std::isfinite(sigma0)) throw Error(ErrorCode::BadRange, "sigma0 must be finite");
  if (count == 0) throw Error(ErrorCode::BadRange, "count must be positive");
  return sampleEquivalence(spec, sigma0, sigma0, count, seed);
}

ValueCloud sampleLine(const SeriesSpec& spec, double sigma0, double tMax, std::size_t count,
                      std::uint64_t seed) {
  checkWindow(tMax, count);
  ValueCloud cloud;
  cloud.route = CloudRoute::DirectLine;
  cloud.meta = {sigma0, sigma0, tMax, count, seed};
  cloud.points.reserve(count);
  const CompiledSeries f(spec);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    cloud.points.push_back(f(sigma0, tMax * (2.0 * uniformOpen(rng) - 1.0)));
  }
  return cloud;
}

double directedHausdorff(std::span<const Complex> from, std::span<const Complex> to) {
  if (from.empty() || to.empty()) throw Error(ErrorCode::EmptyCloud, "Hausdorff distance of an empty cloud");
  std::vector<Point> points;
  points.reserve(to.size());
  for (const auto& z : to) points.emplace_back(z.real(), z.imag());
  const Tree tree(points.begin(), points.end());

  double worst = 0.0;
  std::vector<Point> nearest;
  for (const auto& z : from) {
    nearest.clear();
    const Point query(z.real(), z.imag());
    tree.query(bgi::nearest(query, 1), std::back_inserter(nearest));
    worst = std::max(worst, bg::distance(query, nearest.front()));
  }
  return worst;
}

double hausdorff(std::span<const Complex> a, std::span<const Complex> b) {
  return std::max(directedHausdorff(a, b), directedHausdorff(b, a));
}

double hausdorff(const ValueCloud& a, const ValueCloud& b) { return hausdorff(a.points, b.points); }

KroneckerHit kroneckerFindT(std::span<const double> basisValues, const PhaseVector& target, double tol,
                            double tMaxSearch) {
  if (basisValues.size() != target.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one target phase per basis value is required");
  }
  if (!(tol > 0.0) || !(tMaxSearch >= 0.0) || !std::isfinite(tMaxSearch)) {
    throw Error(ErrorCode::BadRange, "kronecker search needs tol > 0 and a finite tMaxSearch >= 0");
  }
  if (basisValues.empty()) return {true, 0.0, 0.0};

  auto worst = [&](double t) {
    double r = 0.0;
    for (std::size_t j = 0; j < basisValues.size(); ++j) {
      r = std::max(r, std::abs(std::remainder(-t * basisValues[j] - target.values[j], kTwoPi)));
    }
    return r;
  };

  double lipschitz = 0.0;
  for (double b : basisValues) lipschitz = std::max(lipschitz, std::abs(b));
  if (lipschitz == 0.0) {
    const double r = worst(0.0);
    return {r <= tol, 0.0, r};
  }

  const double step = std::max(tol / lipschitz, tMaxSearch / kMaxKroneckerGrid);
  const double slack = tol + lipschitz * step;
  const auto cells = static_cast<long long>(std::ceil(tMaxSearch / step));
  for (long long i = 0; i <= cells; ++i) {
    const double t = std::min(static_cast<double>(i) * step, tMaxSearch);
    if (worst(t) > slack) continue;
    // Near a candidate every wrapped difference is small, so the max of their
    // absolute values is convex on the bracket.
    double lo = std::max(0.0, t - step);
    double hi = std::min(tMaxSearch, t + step);
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (worst(m1) <= worst(m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    const double best = 0.5 * (lo + hi);
    const double residual = worst(best);
    if (residual <= tol) return {true, best, residual};
  }
  return {false, 0.0, 0.0};
}

}  // namespace bohr
