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

#include "bohr/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "bohr/error.hpp"
#include "bohr/eval.hpp"

namespace bohr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSubdivideAbove = std::numbers::pi / 4.0;
constexpr double kAcceptAtCap = std::numbers::pi / 2.0;
constexpr double kIntegralityTolerance = 1e-6;
constexpr int kNudgeAttempts = 6;
constexpr double kMinSegmentFraction = 0x1.0p-40;

struct ExponentTerm {
  double lambda;
  Complex coeff;
};

// Terms of f − v with nonzero coefficients, the constant merged, sorted by λ.
std::vector<ExponentTerm> shiftedTerms(const SeriesSpec& spec, Complex v) {
  Complex constant = -v;
  std::vector<ExponentTerm> out;
  for (const auto& term : spec.terms) {
    if (term.exponent.isZero()) {
      constant += term.coeff;
    } else if (term.coeff != Complex(0.0, 0.0)) {
      out.push_back({numericValue(term.exponent, spec.symbols), term.coeff});
    }
  }
  if (std::abs(constant) > 1e-15 * (1.0 + std::abs(v))) out.push_back({0.0, constant});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  return out;
}

class Contour {
 public:
  Contour(const CompiledSeries& f, Complex v, double margin, std::size_t maxPoints)
      : f_(f), v_(v), margin_(margin), maxPoints_(maxPoints) {}

  // Accumulated argument of f − v along the straight segment a → b.
  double side(Complex a, Complex b, std::size_t steps) {
    points_ = 0;
    minLength_ = std::abs(b - a) * kMinSegmentFraction;
    double total = 0.0;
    Complex prev = a;
    Complex fprev = at(a);
    for (std::size_t k = 1; k <= steps; ++k) {
      const Complex s = a + (b - a) * (static_cast<double>(k) / static_cast<double>(steps));
      const Complex fs = at(s);
      total += segment(prev, fprev, s, fs);
      prev = s;
      fprev = fs;
    }
    return total;
  }

  std::size_t samples() const { return samples_; }

 private:
  Complex at(Complex s) {
    ++samples_;
    if (++points_ > maxPoints_ + 1) {
      throw Error(ErrorCode::NonconvergentSubdivision, "contour side exceeds the subdivision cap");
    }
    const Complex value = f_(s.real(), s.imag()) - v_;
    if (std::abs(value) < margin_) {
      throw Error(ErrorCode::BoundaryTooClose, "f - v nearly vanishes on the contour at " +
                                                   std::to_string(s.real()) + " + " +
                                                   std::to_string(s.imag()) + "i");
    }
    return value;
  }

  double segment(Complex a, Complex fa, Complex b, Complex fb) {
    const double delta = std::arg(fb * std::conj(fa));
    if (std::abs(delta) <= kSubdivideAbove) return delta;
    if (std::abs(b - a) <= minLength_) {
      if (std::abs(delta) < kAcceptAtCap) return delta;
      throw Error(ErrorCode::BoundaryTooClose, "argument jumps by nearly pi across a minimal segment near " +
                                                   std::to_string(a.real()) + " + " + std::to_string(a.imag()) + "i");
    }
    const Complex mid = 0.5 * (a + b);
    const Complex fm = at(mid);
    return segment(a, fa, mid, fm) + segment(mid, fm, b, fb);
  }

  const CompiledSeries& f_;
  Complex v_;
  double margin_;
  std::size_t maxPoints_;
  double minLength_ = 0.0;
  std::size_t points_ = 0;
  std::size_t samples_ = 0;
};

// Contour counts with small outward nudges when a zero sits on the boundary.
int robustCount(const SeriesSpec& spec, Complex v, Rectangle rect, double sigmaNudge,
                const ContourOptions& options) {
  const double tNudge = 1e-6 * (1.0 + rect.tMax - rect.tMin);
  for (int attempt = 0;; ++attempt) {
    try {
      return windingNumber(spec, v, rect, options).count;
    } catch (const Error& err) {
      const bool boundary =
          err.code() == ErrorCode::BoundaryTooClose || err.code() == ErrorCode::NonconvergentSubdivision;
      if (!boundary || attempt + 1 >= kNudgeAttempts) throw;
    }
    rect.sigmaMin -= sigmaNudge * 0.37;
    rect.tMin -= tNudge;
    rect.tMax += tNudge;
  }
}

}  // namespace

WindingResult windingNumber(const SeriesSpec& spec, Complex v, const Rectangle& rect,
                            const ContourOptions& options) {
  if (!(rect.sigmaMin < rect.sigmaMax) || !(rect.tMin < rect.tMax) || !std::isfinite(rect.sigmaMin) ||
      !std::isfinite(rect.sigmaMax) || !std::isfinite(rect.tMin) || !std::isfinite(rect.tMax)) {
    throw Error(ErrorCode::BadRange, "rectangle must be finite and nondegenerate");
  }
  if (options.stepsPerSide == 0 || options.maxPointsPerSide < options.stepsPerSide) {
    throw Error(ErrorCode::BadRange, "contour needs 0 < stepsPerSide <= maxPointsPerSide");
  }
  if (shiftedTerms(spec, v).empty()) {
    throw Error(ErrorCode::DegenerateTarget, "f - v vanishes identically");
  }

  const double margin = options.boundaryMargin.value_or(1e-8 * (1.0 + std::abs(v)));
  const CompiledSeries f(spec);
  Contour contour(f, v, margin, options.maxPointsPerSide);

  const Complex corners[4] = {{rect.sigmaMin, rect.tMin},
                              {rect.sigmaMax, rect.tMin},
                              {rect.sigmaMax, rect.tMax},
                              {rect.sigmaMin, rect.tMax}};
  double total = 0.0;
  for (int side = 0; side < 4; ++side) {
    total += contour.side(corners[side], corners[(side + 1) % 4], options.stepsPerSide);
  }

  WindingResult out;
  out.turns = total / kTwoPi;
  out.count = static_cast<int>(std::lround(out.turns));
  out.defect = std::abs(out.turns - out.count);
  out.samples = contour.samples();
  if (out.defect > kIntegralityTolerance) {
    throw Error(ErrorCode::NonconvergentSubdivision,
                "winding number " + std::to_string(out.turns) + " is not an integer");
  }
  return out;
}

int countZeros(const SeriesSpec& spec, Complex v, const Rectangle& rect, std::size_t steps) {
  ContourOptions options;
  options.stepsPerSide = steps;
  options.maxPointsPerSide = std::max(options.maxPointsPerSide, steps);
  return windingNumber(spec, v, rect, options).count;
}

double sigmaStar(const SeriesSpec& spec, Complex v, TWindow window, double sigmaFloor, double tol,
                 const ContourOptions& options) {
  if (!(tol > 0.0)) throw Error(ErrorCode::BadRange, "tol must be positive");
  if (!(window.min < window.max)) throw Error(ErrorCode::BadRange, "t-window must be nondegenerate");
  const auto terms = shiftedTerms(spec, v);
  if (terms.empty()) throw Error(ErrorCode::DegenerateTarget, "f - v vanishes identically");
  if (terms.size() == 1) return kMinusInfinity;

  // Right of σtop the lowest-exponent term outweighs the rest twice over.
  const double lead = std::abs(terms.front().coeff);
  auto rest = [&](double sigma) {
    double total = 0.0;
    for (std::size_t n = 1; n < terms.size(); ++n) {
      total += std::abs(terms[n].coeff) * std::exp(-(terms[n].lambda - terms.front().lambda) * sigma);
    }
    return total;
  };
  double top = std::max(sigmaFloor, 0.0) + 1.0;
  for (double step = 1.0; rest(top) > 0.5 * lead; step *= 2.0) top += step;

  auto zerosRightOf = [&](double sigma) {
    return robustCount(spec, v, {sigma, top, window.min, window.max}, tol, options);
  };

  if (!(sigmaFloor < top) || zerosRightOf(sigmaFloor) == 0) return kMinusInfinity;
  double lo = sigmaFloor;
  double hi = top;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (zerosRightOf(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool attainsValue(const SeriesSpec& spec, Complex v, double sigma1, double sigma2, TWindow window) {
  if (!(sigma1 < sigma2)) throw Error(ErrorCode::BadRange, "strip needs sigma1 < sigma2");
  return countZeros(spec, v, {sigma1, sigma2, window.min, window.max}) >= 1;
}

std::vector<double> sigmaSequence(const SeriesSpec& spec, std::size_t mMax, TWindow window, double tol,
                                  double sigmaFloor) {
  const CompiledSeries f(spec);
  std::vector<double> out;
  out.reserve(mMax);
  for (std::size_t m = 1; m <= mMax; ++m) {
    out.push_back(sigmaStar(spec, f(static_cast<double>(m), 0.0), window, sigmaFloor, tol));
  }
  return out;
}

}  // namespace bohr
