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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "bohr/error.hpp"
#include "bohr/eval.hpp"
#include "bohr/scenarios.hpp"
#include "oracles.hpp"

namespace bohr {
namespace {

constexpr double kPi = std::numbers::pi;

Rational q(long long p, long long d = 1) { return Rational(Integer(p), Integer(d)); }

const GridBox kStandardBox{1.0, 1.5, -1.0, 1.0, 20, 40};

TEST(EvaluateTest, TwoPrimesAtOne) {
  const auto f = ordinarySeries({{2, 1}, {3, 1}});
  const Complex v = evaluate(f, {1.0, 0.0});
  EXPECT_NEAR(v.real(), 0.8333333333333333, 1e-15);
  EXPECT_EQ(v.imag(), 0.0);
}

TEST(EvaluateTest, TwoPrimesOffAxis) {
  // 40-digit reference: −0.41208019464130646 + 0.32152949932595696i.
  const auto f = ordinarySeries({{2, 1}, {3, 1}});
  const Complex v = evaluate(f, {1.0, kPi / std::log(2.0)});
  EXPECT_NEAR(v.real(), -0.41208019464130646, 1e-14);
  EXPECT_NEAR(v.imag(), 0.32152949932595696, 1e-14);
}

TEST(EvaluateTest, BohrExampleAtTwo) {
  const Complex v = evaluate(bohrExample(3), {2.0, 0.0});
  EXPECT_NEAR(v.real(), 0.05160034223228245, 1e-15);
  EXPECT_EQ(v.imag(), 0.0);
}

TEST(EvaluateTest, TruncationMonotonicity) {
  const auto full = bohrExample(12);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> tDist(-30.0, 30.0);
  for (double sigma : {1.0, 2.0}) {
    for (std::size_t n = 1; n < 12; ++n) {
      for (std::size_t m = n + 1; m <= 12; ++m) {
        double bound = 0.0;
        for (std::size_t k = n + 1; k <= m; ++k) bound += std::exp(-bohrExponent(k).toDouble() * sigma);
        const double t = tDist(rng);
        const Complex diff = evaluate(full.truncated(n), {sigma, t}) - evaluate(full.truncated(m), {sigma, t});
        EXPECT_LE(std::abs(diff), bound + 1e-15 * CompiledSeries(full).modulusBound(sigma));
      }
    }
  }
}

TEST(ShiftSeriesTest, Examples) {
  const auto f = bohrExample(3);
  EXPECT_EQ(shiftSeries(f, 0.0), f);

  const auto shifted = shiftSeries(f, 2 * kPi);
  EXPECT_NEAR(shifted.terms[0].coeff.real(), -1.0, 1e-15);
  EXPECT_NEAR(shifted.terms[0].coeff.imag(), 0.0, 1e-14);

  const auto g = ordinarySeries({{2, 1}});
  const auto full = shiftSeries(g, 2 * kPi / std::log(2.0));
  EXPECT_NEAR(full.terms[0].coeff.real(), 1.0, 1e-15);
  EXPECT_NEAR(full.terms[0].coeff.imag(), 0.0, 1e-14);
}

TEST(ShiftSeriesTest, ShiftIdentity) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> tau(-50.0, 50.0);
  std::uniform_real_distribution<double> sigma(0.2, 3.0);
  std::uniform_real_distribution<double> t(-20.0, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto spec = testing::randomIntegralSpec(rng, 10);
    const double tt = tau(rng);
    const EvalPoint p{sigma(rng), t(rng)};
    const Complex lhs = evaluate(shiftSeries(spec, tt), p);
    const Complex rhs = evaluate(spec, {p.sigma, p.t + tt});
    const double scale = CompiledSeries(spec).modulusBound(p.sigma);
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * scale);
  }
}

TEST(UniformDistanceTest, Examples) {
  const auto f = bohrExample(5);
  EXPECT_EQ(uniformDistance(f, f, kStandardBox), 0.0);

  const auto a = ordinarySeries({{1, 1}, {2, 1}});
  const auto b = ordinarySeries({{1, 2}, {2, 1}});
  EXPECT_NEAR(uniformDistance(a, b, kStandardBox), 1.0, 1e-15);
  EXPECT_NEAR(uniformDistance(a, b, {-3.0, 4.0, 0.0, 100.0, 3, 7}), 1.0, 1e-15);
}

TEST(UniformDistanceTest, BadBox) {
  const auto f = bohrExample(2);
  EXPECT_THROW(uniformDistance(f, f, {1.5, 1.0, -1.0, 1.0, 20, 40}), Error);
  EXPECT_THROW(uniformDistance(f, f, {1.0, 1.5, -1.0, 1.0, 0, 40}), Error);
}

TEST(UniformDistanceTest, CounterexampleConverges) {
  // 40-digit references: 2Σ_{n>2} e^{−λ(n)} = 0.014161965,
  // 2Σ_{n>3} e^{−λ(n)} = 0.0019684723.
  const auto f = bohrExample(10);
  const auto g = negate(f);
  double d[4];
  for (std::size_t m = 1; m <= 3; ++m) d[m] = uniformDistance(shiftSeries(f, tau(m).value), g, kStandardBox);
  EXPECT_GT(d[1], d[2]);
  EXPECT_GT(d[2], d[3]);
  EXPECT_LE(d[2], 0.014161965);
  EXPECT_LE(d[3], 0.0019684723);
}

TEST(ShiftPhaseExactTest, Examples) {
  const auto p11 = shiftPhaseExact(1, 1);
  EXPECT_TRUE(p11.isMinusOne);
  EXPECT_EQ(p11.phaseOverPi, q(3));
  EXPECT_TRUE(p11.residual.isZero());

  const auto p22 = shiftPhaseExact(2, 2);
  EXPECT_TRUE(p22.isMinusOne);
  EXPECT_EQ(p22.phaseOverPi, q(19));

  const auto p32 = shiftPhaseExact(3, 2);
  EXPECT_FALSE(p32.isMinusOne);
  EXPECT_EQ(p32.phaseOverPi, q(153, 5));
  EXPECT_FALSE(p32.residual.isZero());
}

TEST(ShiftPhaseExactTest, EvenIntegerIsNotMinusOne) {
  EXPECT_FALSE(shiftPhaseExact(q(2), q(1)).isMinusOne);
  EXPECT_TRUE(shiftPhaseExact(q(-3), q(1)).isMinusOne);
}

TEST(ShiftPhaseExactTest, CancellationBridge) {
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t n = 1; n <= m; ++n) EXPECT_TRUE(shiftPhaseExact(n, m).isMinusOne) << n << "," << m;
  }
}

}  // namespace
}  // namespace bohr
