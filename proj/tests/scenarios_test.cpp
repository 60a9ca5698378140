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
#include <set>

#include <gtest/gtest.h>

#include "bohr/basis.hpp"
#include "bohr/error.hpp"
#include "bohr/eval.hpp"
#include "bohr/scenarios.hpp"

namespace bohr {
namespace {

constexpr double kPi = std::numbers::pi;

Rational q(long long p, long long d = 1) { return Rational(Integer(p), Integer(d)); }

TEST(BohrExampleTest, FirstFourExponents) {
  const auto f = bohrExample(4);
  ASSERT_EQ(f.size(), 4u);
  const Rational expected[] = {q(3, 2), q(19, 6), q(51, 10), q(99, 14)};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(f.terms[i].exponent, ExponentVector::unit(kUnitSymbol, expected[i]));
    EXPECT_EQ(f.terms[i].coeff, Complex(1, 0));
  }
  EXPECT_EQ(f.abscissa, 0.0);
  EXPECT_NO_THROW(validateSeries(f));
}

TEST(BohrExampleTest, SingleTerm) {
  const auto f = bohrExample(1);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_NEAR(evaluate(f, {1.0, 0.0}).real(), std::exp(-1.5), 1e-16);
}

TEST(BohrExampleTest, ExponentsStrictlyIncrease) {
  Rational previous = bohrExponent(1);
  for (std::size_t n = 2; n <= 1000; ++n) {
    const Rational next = bohrExponent(n);
    EXPECT_LT(previous, next);
    previous = next;
  }
  EXPECT_THROW(bohrExponent(0), Error);
}

TEST(BohrExampleTest, TailGapIsMinimumSpacing) {
  const auto f = bohrExample(5);
  ASSERT_TRUE(f.tail.has_value());
  EXPECT_EQ(f.tail->lambdaNext, ExponentVector::unit(kUnitSymbol, bohrExponent(6)));
  for (std::size_t n = 1; n < 50; ++n) {
    EXPECT_GE((bohrExponent(n + 1) - bohrExponent(n)).toDouble(), f.tail->minGap);
  }
}

TEST(TauTest, Values) {
  EXPECT_EQ(tau(1).multipleOf2Pi, 1);
  EXPECT_EQ(tau(2).multipleOf2Pi, 3);
  EXPECT_EQ(tau(3).multipleOf2Pi, 15);
  EXPECT_DOUBLE_EQ(tau(1).value, 2 * kPi);
  EXPECT_DOUBLE_EQ(tau(2).value, 6 * kPi);
  EXPECT_DOUBLE_EQ(tau(3).value, 30 * kPi);
  EXPECT_EQ(tau(3).overPi(), q(30));
}

TEST(NegateTest, Examples) {
  const auto f = ordinarySeries({{2, 1}, {3, 1}});
  const auto g = negate(f);
  EXPECT_EQ(g.terms[0].coeff, Complex(-1, 0));
  EXPECT_EQ(g.terms[1].coeff, Complex(-1, 0));
  EXPECT_EQ(negate(g), f);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  const auto h = bohrExample(6);
  for (int i = 0; i < 50; ++i) {
    const EvalPoint p{coord(rng) + 3.5, coord(rng) * 10};
    EXPECT_LE(std::abs(evaluate(negate(h), p) + evaluate(h, p)), 1e-15);
  }
}

TEST(OrdinarySeriesTest, Factorization) {
  const auto f = ordinarySeries({{6, 1}, {2, 1}, {3, 1}});
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.terms[0].exponent, ExponentVector::unit("L2"));
  EXPECT_EQ(f.terms[1].exponent, ExponentVector::unit("L3"));
  EXPECT_EQ(f.terms[2].exponent, ExponentVector::unit("L2") + ExponentVector::unit("L3"));
  EXPECT_DOUBLE_EQ(*f.symbols.find("L2"), std::log(2.0));

  const auto twelve = ordinarySeries({{12, 1}});
  EXPECT_EQ(twelve.terms[0].exponent, ExponentVector::unit("L2", q(2)) + ExponentVector::unit("L3"));

  const auto one = ordinarySeries({{1, 5}});
  EXPECT_TRUE(one.terms[0].exponent.isZero());
}

TEST(OrdinarySeriesTest, BadIndex) {
  EXPECT_THROW(ordinarySeries({{0, 1}}), Error);
  EXPECT_THROW(ordinarySeries({{2, 1}, {2, 3}}), Error);
}

TEST(OrdinarySeriesTest, PrimesListedFirstGiveIntegralR) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> nDist(2, 300);
  for (int trial = 0; trial < 100; ++trial) {
    // Listing every prime first makes each prime log a basis element.
    std::vector<std::pair<std::int64_t, Complex>> coeffs = {{2, 1}, {3, 1}, {5, 1}, {7, 1}};
    std::set<std::int64_t> seen = {2, 3, 5, 7};
    for (int i = 0; i < 10; ++i) {
      const int n = nDist(rng);
      int m = n;
      for (int p : {2, 3, 5, 7}) {
        while (m % p == 0) m /= p;
      }
      if (m == 1 && seen.insert(n).second) coeffs.emplace_back(n, 1);
    }
    const auto f = ordinarySeries(coeffs);
    EXPECT_TRUE(isIntegral(computeBasis(f.exponents()).R));
  }
}

TEST(OrdinarySeriesTest, NonPrimeLeadCanGiveRationalR) {
  // 4 precedes 8, so the basis is {2·L2} and 8 = (3/2)·(2·L2).
  const auto f = ordinarySeries({{4, 1}, {8, 1}});
  const auto d = computeBasis(f.exponents());
  EXPECT_EQ(d.R.at(1, 0), q(3, 2));
  EXPECT_FALSE(isIntegral(d.R));
}

TEST(CounterexampleTest, ShiftMatchesNegationOnLeadingTerms) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto f = bohrExample(m);
    const auto shifted = shiftSeries(f, tau(m).value);
    for (std::size_t n = 1; n <= m; ++n) {
      EXPECT_TRUE(shiftPhaseExact(n, m).isMinusOne);
      EXPECT_NEAR(shifted.terms[n - 1].coeff.real(), -1.0, 1e-9);
    }
  }
}

}  // namespace
}  // namespace bohr
