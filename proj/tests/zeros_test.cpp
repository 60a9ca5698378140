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
#include "bohr/zeros.hpp"

namespace bohr {
namespace {

constexpr double kPi = std::numbers::pi;

const SeriesSpec& onePlusHalf() {
  static const SeriesSpec f = ordinarySeries({{1, 1}, {2, 1}});
  return f;
}

TEST(CountZerosTest, OnePlusPowerOfTwo) {
  EXPECT_EQ(countZeros(onePlusHalf(), 0, {-1, 1, 0, 10}), 1);
  EXPECT_EQ(countZeros(onePlusHalf(), 0, {-1, 1, 6, 12}), 0);
  EXPECT_EQ(countZeros(onePlusHalf(), 0, {-1, 1, 0, 30}), 3);
}

TEST(CountZerosTest, NonvanishingTerm) {
  const auto f = ordinarySeries({{2, 1}});
  EXPECT_EQ(countZeros(f, 0, {-5, 5, -50, 50}), 0);
  EXPECT_EQ(countZeros(f, 0, {0.1, 0.2, 3, 4}), 0);
}

TEST(CountZerosTest, DegenerateAndBadInput) {
  const auto c = ordinarySeries({{1, 2}});
  try {
    countZeros(c, 2, {0, 1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateTarget);
  }
  try {
    countZeros(onePlusHalf(), 0, {1, 0, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadRange);
  }
}

TEST(CountZerosTest, ZeroOnBoundary) {
  try {
    countZeros(onePlusHalf(), 0, {0, 1, 0, 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundaryTooClose);
  }
}

TEST(WindingNumberTest, IntegralityDefectReported) {
  const auto w = windingNumber(onePlusHalf(), 0, {-1, 1, 0, 10});
  EXPECT_EQ(w.count, 1);
  EXPECT_LT(w.defect, 1e-6);
  EXPECT_GT(w.samples, 4u * 256u - 1);
}

TEST(CountZerosTest, AdditivityOnRandomPartitions) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto f = ordinarySeries({{1, 1}, {2, Complex(0.5, 0.5)}, {3, -2}, {5, 1}});
  int checked = 0;
  for (int attempt = 0; checked < 20 && attempt < 200; ++attempt) {
    const double s0 = -2.0 + 2.0 * u(rng);
    const double s1 = s0 + 0.5 + 2.0 * u(rng);
    const double t0 = -20.0 + 20.0 * u(rng);
    const double t1 = t0 + 2.0 + 15.0 * u(rng);
    const double cut = s0 + (s1 - s0) * (0.2 + 0.6 * u(rng));
    const Complex v(u(rng) - 0.5, u(rng) - 0.5);
    try {
      const int whole = countZeros(f, v, {s0, s1, t0, t1});
      const int left = countZeros(f, v, {s0, cut, t0, t1});
      const int right = countZeros(f, v, {cut, s1, t0, t1});
      EXPECT_EQ(whole, left + right);
      ++checked;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::BoundaryTooClose);
    }
  }
  EXPECT_EQ(checked, 20);
}

TEST(CountZerosTest, ConjugateSymmetry) {
  const auto f = ordinarySeries({{1, 1}, {2, 0.5}, {3, -2}, {5, 1}});
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double a = -10.0 + 20.0 * u(rng);
    const double b = a + 1.0 + 10.0 * u(rng);
    EXPECT_EQ(countZeros(f, 0.3, {-2, 1, a, b}), countZeros(f, 0.3, {-2, 1, -b, -a}));
  }
}

TEST(SigmaStarTest, ClosedForms) {
  const TWindow window{0, 20};
  EXPECT_NEAR(sigmaStar(onePlusHalf(), 0, window, -10, 1e-3), 0.0, 1e-3);
  EXPECT_NEAR(sigmaStar(onePlusHalf(), 3, window, -10, 1e-3), -1.0, 1e-3);
  EXPECT_EQ(sigmaStar(onePlusHalf(), 1, window, -10, 1e-3), kMinusInfinity);
}

TEST(SigmaStarTest, ConsistencyWithCounts) {
  const auto f = ordinarySeries({{1, 1}, {2, Complex(0.5, 0.5)}, {3, -2}});
  const TWindow window{-15, 15};
  const double tol = 1e-3;
  const double s = sigmaStar(f, 0.2, window, -10, tol);
  ASSERT_TRUE(std::isfinite(s));
  const double top = 40.0;
  EXPECT_EQ(countZeros(f, 0.2, {s + 2 * tol, top, window.min, window.max}), 0);
  EXPECT_GE(countZeros(f, 0.2, {s - 2 * tol, top, window.min, window.max}), 1);
}

TEST(AttainsValueTest, Examples) {
  const auto f = ordinarySeries({{2, 1}, {3, 1}});
  EXPECT_TRUE(attainsValue(f, 0.8333333333333333, 0.9, 1.1, {-1, 1}));
  EXPECT_FALSE(attainsValue(f, 10, 0.0, 3.0, {-20, 20}));

  const auto b = bohrExample(5);
  const Complex v = evaluate(b, {2.0, 0.0}) + Complex(1e-3, 5e-4);
  EXPECT_TRUE(attainsValue(b, v, 1.9, 2.1, {-1, 1}));
}

TEST(SigmaSequenceTest, PowerOfTwo) {
  const auto seq = sigmaSequence(onePlusHalf(), 3, {-5, 5}, 1e-3);
  ASSERT_EQ(seq.size(), 3u);
  for (std::size_t m = 0; m < 3; ++m) EXPECT_NEAR(seq[m], static_cast<double>(m + 1), 1e-3);
}

TEST(SigmaSequenceTest, ConstantIsDegenerate) {
  EXPECT_THROW(sigmaSequence(ordinarySeries({{1, 3}}), 2, {-5, 5}, 1e-3), Error);
}

TEST(SigmaSequenceTest, BohrExampleIncreasing) {
  const auto seq = sigmaSequence(bohrExample(4), 3, {-50, 50}, 1e-3);
  ASSERT_EQ(seq.size(), 3u);
  for (double s : seq) EXPECT_TRUE(std::isfinite(s));
  EXPECT_LE(seq[0], seq[1]);
  EXPECT_LE(seq[1], seq[2]);
}

}  // namespace
}  // namespace bohr
