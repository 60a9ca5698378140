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

#include "bohr/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bohr/error.hpp"

namespace bohr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr long long kEnumerationBudget = 5'000'000;

Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// q mod m in [0, m) for a positive integer m.
Rational modulo(const Rational& q, const Integer& m) {
  const Integer k = floorDiv(q.numerator(), q.denominator() * m);
  return q - Rational(k * m);
}

double toDouble(const Integer& x) { return x.convert_to<double>(); }

IntMatrix scaledIntegerRows(const BohrMatrix& r, const Integer& d) {
  IntMatrix a(r.nrows(), IntVector(r.ncols, 0));
  for (std::size_t i = 0; i < r.nrows(); ++i) {
    for (const auto& [j, q] : r.rows[i]) a[i][j] = q.numerator() * (d / q.denominator());
  }
  return a;
}

// Earliest independent rows of r and, for each, its pivot column.
struct PivotSelection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

PivotSelection selectPivots(const BohrMatrix& r) {
  PivotSelection out;
  std::vector<std::vector<Rational>> echelon;
  for (std::size_t i = 0; i < r.nrows(); ++i) {
    std::vector<Rational> residue(r.ncols, Rational(0));
    for (const auto& [j, q] : r.rows[i]) residue[j] = q;
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const std::size_t p = out.cols[k];
      if (residue[p].isZero()) continue;
      const Rational alpha = residue[p] / echelon[k][p];
      for (std::size_t c = 0; c < r.ncols; ++c) residue[c] -= alpha * echelon[k][c];
    }
    std::size_t pivot = 0;
    while (pivot < r.ncols && residue[pivot].isZero()) ++pivot;
    if (pivot == r.ncols) continue;
    out.rows.push_back(i);
    out.cols.push_back(pivot);
    echelon.push_back(std::move(residue));
  }
  return out;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col].isZero()) ++p;
    if (p == n) throw Error(ErrorCode::InvariantViolation, "singular pivot block");
    std::swap(m[p], m[col]);
    std::swap(inv[p], inv[col]);
    const Rational scale = Rational(1) / m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].isZero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

double distanceToLattice(double x) { return std::abs(x - kTwoPi * std::round(x / kTwoPi)); }

double normalizeAngle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

SeriesSpec twist(const SeriesSpec& spec, const Basis& basis, const BohrMatrix& r, const PhaseVector& y) {
  if (r.nrows() != spec.size() || r.ncols != basis.size() || y.size() != basis.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "twist needs R with one row per term and Y with one phase per basis element");
  }
  SeriesSpec out = spec;
  for (std::size_t n = 0; n < spec.size(); ++n) {
    double phase = 0.0;
    for (const auto& [j, q] : r.rows[n]) phase += q.toDouble() * y.values[j];
    out.terms[n].coeff = spec.terms[n].coeff * std::polar(1.0, phase);
  }
  return out;
}

PhaseTargets extractPhaseTargets(const SeriesSpec& a, const SeriesSpec& b, double tol) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::ExponentMismatch, "series have different term counts");
  }
  PhaseTargets out;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a.terms[n].exponent != b.terms[n].exponent) {
      throw Error(ErrorCode::ExponentMismatch, "exponents differ at term " + std::to_string(n + 1), n + 1);
    }
    const Complex an = a.terms[n].coeff;
    const Complex bn = b.terms[n].coeff;
    const double ma = std::abs(an);
    const double mb = std::abs(bn);
    const bool aZero = ma <= tol;
    const bool bZero = mb <= tol;
    if (aZero && bZero) {
      out.skipped.push_back(n);
      continue;
    }
    if (aZero != bZero) {
      throw Error(ErrorCode::SupportMismatch,
                  "exactly one coefficient vanishes at term " + std::to_string(n + 1), n + 1);
    }
    if (std::abs(ma - mb) > tol * std::max(1.0, ma)) {
      throw Error(ErrorCode::ModulusMismatch,
                  "coefficient moduli differ at term " + std::to_string(n + 1), n + 1);
    }
    out.entries.push_back({n, normalizeAngle(std::arg(bn * std::conj(an)))});
  }
  return out;
}

std::vector<IntVector> integerKernel(const BohrMatrix& r, std::span<const std::size_t> rows) {
  if (rows.empty()) return {};
  const BohrMatrix sub = r.restrictRows(rows);
  const RowEchelon e = unimodularEchelon(scaledIntegerRows(sub, denominatorLcm(sub)), sub.ncols);
  IntMatrix kernel(e.U.begin() + static_cast<std::ptrdiff_t>(e.rank), e.U.end());
  return hermiteNormalForm(kernel, rows.size());
}

double CongruenceSystem::residualBound() const {
  double widest = 1.0;
  for (const auto& m : kernel_) widest = std::max(widest, toDouble(l1Norm(m)));
  return tol_ * widest;
}

double CongruenceSystem::residual(const PhaseVector& y) const {
  if (y.size() != r_.ncols) throw Error(ErrorCode::DimensionMismatch, "phase vector size");
  double worst = 0.0;
  for (std::size_t i = 0; i < r_.nrows(); ++i) {
    double phase = 0.0;
    for (const auto& [j, q] : r_.rows[i]) phase += q.toDouble() * y.values[j];
    worst = std::max(worst, distanceToLattice(phase - targets_.entries[i].theta));
  }
  return worst;
}

void CongruenceSystem::setFeasible(PhaseVector y) {
  const double res = residual(y);
  if (!(res <= residualBound())) {
    throw Error(ErrorCode::InvariantViolation,
                "constructed phase vector leaves residual " + std::to_string(res));
  }
  verdict_ = FeasibleVerdict{std::move(y), res};
}

void CongruenceSystem::setInfeasible(IntVector witness, double defect) {
  if (!(defect > tol_)) throw Error(ErrorCode::InvariantViolation, "witness defect within tolerance");
  std::vector<Rational> sum(r_.ncols, Rational(0));
  for (std::size_t i = 0; i < witness.size(); ++i) {
    for (const auto& [j, q] : r_.rows[i]) sum[j] += Rational(witness[i]) * q;
  }
  for (const auto& s : sum) {
    if (!s.isZero()) throw Error(ErrorCode::InvariantViolation, "witness does not annihilate R");
  }
  verdict_ = InfeasibleVerdict{std::move(witness), defect};
}

CongruenceSystem solvePhaseSystem(const BohrMatrix& r, const PhaseTargets& targets, double tol) {
  std::vector<std::size_t> rows;
  rows.reserve(targets.entries.size());
  for (const auto& t : targets.entries) {
    if (t.termIndex >= r.nrows()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "target for term " + std::to_string(t.termIndex + 1) + " has no row in R");
    }
    rows.push_back(t.termIndex);
  }
  BohrMatrix sub = r.restrictRows(rows);
  const std::size_t m = rows.size();
  const std::size_t k = r.ncols;

  const Integer d = denominatorLcm(sub);
  const RowEchelon e = unimodularEchelon(scaledIntegerRows(sub, d), k);
  IntMatrix kernelRows(e.U.begin() + static_cast<std::ptrdiff_t>(e.rank), e.U.end());
  CongruenceSystem system(std::move(sub), targets, hermiteNormalForm(kernelRows, m), tol);

  std::vector<double> theta(m);
  for (std::size_t i = 0; i < m; ++i) theta[i] = targets.entries[i].theta;

  for (const auto& g : system.kernel()) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += toDouble(g[i]) * theta[i];
    const double defect = distanceToLattice(s);
    if (defect > tol * toDouble(l1Norm(g))) {
      system.setInfeasible(g, defect);
      return system;
    }
  }

  // Lift θ to θ + 2πz inside the column space of R: z solves U_ker·z = c,
  // where c rounds -U_ker·θ/2π. U is unimodular so z = U^{-1}(0, c).
  IntVector w(m, 0);
  for (std::size_t i = e.rank; i < m; ++i) {
    double s = 0.0;
    for (std::size_t n = 0; n < m; ++n) s += toDouble(e.U[i][n]) * theta[n];
    w[i] = Integer(static_cast<long long>(std::llround(-s / kTwoPi)));
  }
  IntVector z(m, 0);
  for (std::size_t n = 0; n < m; ++n) {
    for (std::size_t i = e.rank; i < m; ++i) z[n] += e.Uinv[n][i] * w[i];
  }

  const PivotSelection piv = selectPivots(system.R());
  const std::size_t rank = piv.rows.size();
  std::vector<std::vector<Rational>> block(rank, std::vector<Rational>(rank, Rational(0)));
  for (std::size_t a = 0; a < rank; ++a) {
    for (std::size_t b = 0; b < rank; ++b) block[a][b] = system.R().at(piv.rows[a], piv.cols[b]);
  }
  const auto inv = invert(std::move(block));

  // Y = S^{-1}θ_P + 2π·(S^{-1}z_P mod d); shifting a coordinate by 2πd is a
  // period of the system because d·R is integral.
  PhaseVector y{std::vector<double>(k, 0.0)};
  const double period = kTwoPi * toDouble(d);
  for (std::size_t a = 0; a < rank; ++a) {
    double fromTheta = 0.0;
    Rational fromLift(0);
    for (std::size_t b = 0; b < rank; ++b) {
      fromTheta += inv[a][b].toDouble() * theta[piv.rows[b]];
      fromLift += inv[a][b] * Rational(z[piv.rows[b]]);
    }
    double value = fromTheta + kTwoPi * modulo(fromLift, d).toDouble();
    value -= period * std::floor(value / period);
    y.values[piv.cols[a]] = value;
  }
  system.setFeasible(std::move(y));
  return system;
}

EquivalenceResult isEquivalentTruncated(const SeriesSpec& a, const SeriesSpec& b, double tol) {
  if (a.size() != b.size()) throw Error(ErrorCode::ExponentMismatch, "series have different term counts");
  if (a.size() == 0) throw Error(ErrorCode::EmptyInput, "no terms");
  const auto exps = a.exponents();
  BasisDecomposition dec = computeBasis(exps);
  PhaseTargets targets;
  try {
    targets = extractPhaseTargets(a, b, tol);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::ModulusMismatch) {
      return NotEquivalent{InequivalenceReason::ModulusMismatch, err.index(), {}, 0.0};
    }
    if (err.code() == ErrorCode::SupportMismatch) {
      return NotEquivalent{InequivalenceReason::SupportMismatch, err.index(), {}, 0.0};
    }
    throw;
  }
  const CongruenceSystem system = solvePhaseSystem(dec.R, targets, tol);
  if (!system.feasible()) {
    const auto& ob = system.obstruction();
    return NotEquivalent{InequivalenceReason::PhaseInconsistent, std::nullopt, ob.witness, ob.defect};
  }
  const auto& sol = system.solution();
  return Equivalent{sol.y, std::move(dec.basis), std::move(dec.R), sol.maxResidual};
}

std::optional<double> minimalSolutionNorm(const CongruenceSystem& system, long long searchBound) {
  if (!system.feasible()) return std::nullopt;
  const BohrMatrix& r = system.R();
  const std::vector<double>& y = system.solution().y.values;
  const std::size_t k = r.ncols;
  if (k == 0) return 0.0;

  if (k == 1) {
    // Periods v satisfy (p_i/q_i)·v ∈ 2πℤ for every row: v ∈ 2π·lcm(q)/gcd(|p|)·ℤ.
    Integer l = 1;
    Integer g = 0;
    for (const auto& row : r.rows) {
      auto it = row.find(0);
      if (it == row.end()) continue;
      l = lcm(l, it->second.denominator());
      g = gcd(g, abs(it->second.numerator()));
    }
    if (g == 0) return 0.0;
    const double period = kTwoPi * Rational(l, g).toDouble();
    return std::abs(y[0] - period * std::round(y[0] / period));
  }

  // Integer periods x (Y ↦ Y + 2πx) with d·R·x ≡ 0 (mod d), searched in
  // growing sup-norm shells around -Y/2π.
  const Integer d = denominatorLcm(r);
  const IntMatrix a = scaledIntegerRows(r, d);
  std::vector<long long> centre(k);
  for (std::size_t j = 0; j < k; ++j) centre[j] = std::llround(-y[j] / kTwoPi);

  auto isPeriod = [&](const std::vector<long long>& x) {
    for (const auto& row : a) {
      Integer s = 0;
      for (std::size_t j = 0; j < k; ++j) s += row[j] * x[j];
      if (s % d != 0) return false;
    }
    return true;
  };

  std::optional<double> best;
  long long visited = 0;
  std::vector<long long> delta(k);
  std::vector<long long> x(k);
  for (long long radius = 0; radius <= searchBound; ++radius) {
    if (best && kTwoPi * (static_cast<double>(radius) - 0.5) > *best) return best;
    std::fill(delta.begin(), delta.end(), -radius);
    while (true) {
      long long sup = 0;
      for (auto v : delta) sup = std::max(sup, std::abs(v));
      if (sup == radius) {
        if (++visited > kEnumerationBudget) return best;
        for (std::size_t j = 0; j < k; ++j) x[j] = centre[j] + delta[j];
        if (isPeriod(x)) {
          double norm2 = 0.0;
          for (std::size_t j = 0; j < k; ++j) {
            const double c = y[j] + kTwoPi * static_cast<double>(x[j]);
            norm2 += c * c;
          }
          const double norm = std::sqrt(norm2);
          if (!best || norm < *best) best = norm;
        }
      }
      std::size_t j = 0;
      while (j < k && delta[j] == radius) delta[j++] = -radius;
      if (j == k) break;
      ++delta[j];
    }
  }
  return best;
}

std::vector<ClosureStep> closureDemo(const SeriesSpec& a, const SeriesSpec& b, std::size_t nmax,
                                     long long searchBound, double tol) {
  if (a.size() != b.size()) throw Error(ErrorCode::ExponentMismatch, "series have different term counts");
  if (nmax > a.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "nmax exceeds the term count " + std::to_string(a.size()));
  }
  std::vector<ClosureStep> steps;
  for (std::size_t n = 1; n <= nmax; ++n) {
    const SeriesSpec an = a.truncated(n);
    const SeriesSpec bn = b.truncated(n);
    const auto exps = an.exponents();
    const BasisDecomposition dec = computeBasis(exps);
    ClosureStep step{n, false, std::nullopt, dec.basis.size(), std::nullopt};
    PhaseTargets targets;
    try {
      targets = extractPhaseTargets(an, bn, tol);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::ModulusMismatch) {
        step.reason = InequivalenceReason::ModulusMismatch;
      } else if (err.code() == ErrorCode::SupportMismatch) {
        step.reason = InequivalenceReason::SupportMismatch;
      } else {
        throw;
      }
      steps.push_back(step);
      continue;
    }
    const CongruenceSystem system = solvePhaseSystem(dec.R, targets, tol);
    step.feasible = system.feasible();
    if (step.feasible) {
      step.minNorm = minimalSolutionNorm(system, searchBound);
    } else {
      step.reason = InequivalenceReason::PhaseInconsistent;
    }
    steps.push_back(step);
  }
  return steps;
}

}  // namespace bohr
