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

#ifndef BOHR_EQUIVALENCE_HPP
#define BOHR_EQUIVALENCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bohr/basis.hpp"
#include "bohr/lattice.hpp"
#include "bohr/series.hpp"

namespace bohr {

inline constexpr double kDefaultPhaseTolerance = 1e-9;
inline constexpr long long kDefaultSearchBound = 1'000'000;

// Real phases indexed parallel to the basis elements.
struct PhaseVector {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  friend bool operator==(const PhaseVector&, const PhaseVector&) = default;
};

// Distance from x to the nearest multiple of 2π.
double distanceToLattice(double x);
// x mod 2π in [0, 2π).
double normalizeAngle(double x);

struct PhaseTarget {
  std::size_t termIndex;  // 0-based
  double theta;           // in [0, 2π)
};

struct PhaseTargets {
  std::vector<PhaseTarget> entries;
  std::vector<std::size_t> skipped;  // terms with a(n) = b(n) = 0
};

// b(n) = a(n)·exp(i(RY)_n). Throws Error{DimensionMismatch}.
SeriesSpec twist(const SeriesSpec& spec, const Basis& basis, const BohrMatrix& r, const PhaseVector& y);

// θ(n) = arg(b(n)/a(n)). Requires identical exponent lists (Error{ExponentMismatch}).
// Throws Error{ModulusMismatch} or Error{SupportMismatch} with the 1-based term.
PhaseTargets extractPhaseTargets(const SeriesSpec& a, const SeriesSpec& b, double tol);

// Generators, in Hermite normal form, of {m ∈ ℤ^rows : Σ_n m_n·R[rows[n]] = 0}.
// Empty iff the selected rows are independent over ℚ.
std::vector<IntVector> integerKernel(const BohrMatrix& r, std::span<const std::size_t> rows);

struct FeasibleVerdict {
  PhaseVector y;
  double maxResidual;
};

struct InfeasibleVerdict {
  IntVector witness;  // indexed parallel to the target entries
  double defect;
};

// The truncated system R·Y ≡ θ (mod 2π).
class CongruenceSystem {
 public:
  const BohrMatrix& R() const { return r_; }
  const PhaseTargets& targets() const { return targets_; }
  const std::vector<IntVector>& kernel() const { return kernel_; }
  double tolerance() const { return tol_; }
  // Largest residual a feasible Y may leave: tol·max(1, max ‖m‖₁ over the kernel).
  double residualBound() const;

  bool feasible() const { return std::holds_alternative<FeasibleVerdict>(verdict_); }
  const std::variant<FeasibleVerdict, InfeasibleVerdict>& verdict() const { return verdict_; }
  const FeasibleVerdict& solution() const { return std::get<FeasibleVerdict>(verdict_); }
  const InfeasibleVerdict& obstruction() const { return std::get<InfeasibleVerdict>(verdict_); }

  // max_n |((RY)_n − θ_n) mod 2π| over the constrained rows.
  double residual(const PhaseVector& y) const;

 private:
  friend CongruenceSystem solvePhaseSystem(const BohrMatrix&, const PhaseTargets&, double);

  CongruenceSystem(BohrMatrix r, PhaseTargets targets, std::vector<IntVector> kernel, double tol)
      : r_(std::move(r)), targets_(std::move(targets)), kernel_(std::move(kernel)), tol_(tol) {}

  // Both setters check the verdict invariants and throw Error{InvariantViolation}.
  void setFeasible(PhaseVector y);
  void setInfeasible(IntVector witness, double defect);

  BohrMatrix r_;  // rows restricted to the constrained terms
  PhaseTargets targets_;
  std::vector<IntVector> kernel_;
  double tol_;
  std::variant<FeasibleVerdict, InfeasibleVerdict> verdict_;
};

// Decides R·Y ≡ θ (mod 2π) exactly up to the phase tolerance and, when
// feasible, constructs Y. Throws Error{DimensionMismatch}.
CongruenceSystem solvePhaseSystem(const BohrMatrix& r, const PhaseTargets& targets, double tol);

enum class InequivalenceReason { ModulusMismatch, SupportMismatch, PhaseInconsistent };

struct Equivalent {
  PhaseVector y;
  Basis basis;
  BohrMatrix R;
  double maxResidual;
};

struct NotEquivalent {
  InequivalenceReason reason;
  std::optional<std::size_t> term;  // 1-based, for the mismatch reasons
  IntVector witness;                // for PhaseInconsistent
  double defect = 0.0;
};

using EquivalenceResult = std::variant<Equivalent, NotEquivalent>;

EquivalenceResult isEquivalentTruncated(const SeriesSpec& a, const SeriesSpec& b,
                                        double tol = kDefaultPhaseTolerance);

struct ClosureStep {
  std::size_t n;
  bool feasible;
  std::optional<double> minNorm;
  std::size_t basisSize;
  std::optional<InequivalenceReason> reason;
};

// Per-truncation feasibility of the first-N systems for N = 1..nmax, with the
// minimal Euclidean norm of a solution Y when feasible. The norm is exact for
// one-dimensional bases and found by bounded lattice enumeration otherwise.
std::vector<ClosureStep> closureDemo(const SeriesSpec& a, const SeriesSpec& b, std::size_t nmax,
                                     long long searchBound = kDefaultSearchBound,
                                     double tol = kDefaultPhaseTolerance);

// Smallest |Y'| over Y' ≡ Y modulo the period lattice of the system, or
// nullopt if the enumeration budget runs out first.
std::optional<double> minimalSolutionNorm(const CongruenceSystem& system, long long searchBound);

}  // namespace bohr

#endif  // BOHR_EQUIVALENCE_HPP
