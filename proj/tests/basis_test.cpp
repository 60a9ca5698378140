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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "bohr/basis.hpp"
#include "bohr/error.hpp"
#include "bohr/scenarios.hpp"

namespace bohr {
namespace {

Rational q(long long p, long long d = 1) { return Rational(Integer(p), Integer(d)); }

std::vector<ExponentVector> randomExponents(std::mt19937_64& rng) {
  static const char* names[] = {"A", "B", "C", "D"};
  std::uniform_int_distribution<int> count(1, 12);
  std::uniform_int_distribution<int> nsym(1, 4);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 7);
  std::bernoulli_distribution sparse(0.4);
  const int k = nsym(rng);
  std::vector<ExponentVector> out(static_cast<std::size_t>(count(rng)));
  for (auto& e : out) {
    for (int j = 0; j < k; ++j) {
      if (!sparse(rng)) e += ExponentVector::unit(names[j], q(num(rng), den(rng)));
    }
  }
  return out;
}

TEST(ComputeBasisTest, ProductOfPrimes) {
  const std::vector<ExponentVector> lambda = {ExponentVector::unit("L2"), ExponentVector::unit("L3"),
                                              ExponentVector::unit("L2") + ExponentVector::unit("L3")};
  const auto d = computeBasis(lambda);
  ASSERT_EQ(d.basis.size(), 2u);
  EXPECT_EQ(d.basis.elements[0], lambda[0]);
  EXPECT_EQ(d.basis.elements[1], lambda[1]);
  EXPECT_EQ(d.basis.sourceIndices, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(d.R.nrows(), 3u);
  EXPECT_EQ(d.R.at(0, 0), q(1));
  EXPECT_EQ(d.R.at(0, 1), q(0));
  EXPECT_EQ(d.R.at(1, 1), q(1));
  EXPECT_EQ(d.R.at(2, 0), q(1));
  EXPECT_EQ(d.R.at(2, 1), q(1));
  EXPECT_EQ(d.T.at(0, 0), q(1));
  EXPECT_EQ(d.T.at(1, 1), q(1));
  EXPECT_EQ(d.T.at(0, 2), q(0));
  EXPECT_TRUE(isIntegral(d.R));
}

TEST(ComputeBasisTest, BohrExampleColumn) {
  const auto d = computeBasis(bohrExample(3).exponents());
  ASSERT_EQ(d.basis.size(), 1u);
  EXPECT_EQ(d.basis.elements[0], ExponentVector::unit("ONE", q(3, 2)));
  EXPECT_EQ(d.R.at(0, 0), q(1));
  EXPECT_EQ(d.R.at(1, 0), q(19, 9));
  EXPECT_EQ(d.R.at(2, 0), q(17, 5));
  EXPECT_FALSE(isIntegral(d.R));
}

TEST(ComputeBasisTest, Singleton) {
  const std::vector<ExponentVector> lambda = {ExponentVector::unit("L2")};
  const auto d = computeBasis(lambda);
  ASSERT_EQ(d.basis.size(), 1u);
  EXPECT_EQ(d.R.at(0, 0), q(1));
  EXPECT_EQ(d.T.at(0, 0), q(1));
}

TEST(ComputeBasisTest, ZeroExponentGetsZeroRow) {
  const std::vector<ExponentVector> lambda = {ExponentVector{}, ExponentVector::unit("L2")};
  const auto d = computeBasis(lambda);
  ASSERT_EQ(d.basis.size(), 1u);
  EXPECT_EQ(d.basis.sourceIndices[0], 1u);
  EXPECT_TRUE(d.R.rows[0].empty());
  EXPECT_TRUE(isIntegral(d.R));
}

TEST(ComputeBasisTest, EmptyInput) {
  try {
    computeBasis(std::vector<ExponentVector>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
  }
}

TEST(ComputeBasisTest, ReconstructionAndSelection) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto lambda = randomExponents(rng);
    const auto d = computeBasis(lambda);
    EXPECT_EQ(bohr::apply(d.R, d.basis.elements), lambda);
    EXPECT_EQ(bohr::apply(d.T, lambda), d.basis.elements);
    for (std::size_t i = 0; i < d.T.nrows(); ++i) {
      ASSERT_EQ(d.T.rows[i].size(), 1u);
      EXPECT_EQ(d.T.rows[i].begin()->second, q(1));
      EXPECT_EQ(lambda[d.T.rows[i].begin()->first], d.basis.elements[i]);
    }
  }
}

TEST(ComputeBasisTest, Idempotent) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = computeBasis(randomExponents(rng));
    if (d.basis.size() == 0) continue;
    const auto again = computeBasis(d.basis.elements);
    EXPECT_EQ(again.basis.elements, d.basis.elements);
    for (std::size_t i = 0; i < again.R.nrows(); ++i) {
      for (std::size_t j = 0; j < again.R.ncols; ++j) EXPECT_EQ(again.R.at(i, j), q(i == j ? 1 : 0));
    }
  }
}

TEST(ComputeBasisTest, PermutingDependentRowsKeepsBasis) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto lambda = randomExponents(rng);
    const auto d = computeBasis(lambda);
    // Keep the pivot rows in place, shuffle everything after the last pivot.
    const std::size_t last = d.basis.sourceIndices.empty() ? 0 : d.basis.sourceIndices.back() + 1;
    auto shuffled = lambda;
    std::shuffle(shuffled.begin() + static_cast<std::ptrdiff_t>(last), shuffled.end(), rng);
    EXPECT_EQ(computeBasis(shuffled).basis.elements, d.basis.elements);
  }
}

TEST(DenominatorLcmTest, Examples) {
  BohrMatrix r;
  r.ncols = 1;
  r.rows = {{{0, q(1, 2)}}, {{0, q(1, 3)}}};
  EXPECT_EQ(denominatorLcm(r, 1), 2);
  EXPECT_EQ(denominatorLcm(r, 2), 6);
  EXPECT_EQ(denominatorLcm(r), 6);
  try {
    denominatorLcm(r, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(DenominatorLcmTest, BohrExample) {
  const auto d = computeBasis(bohrExample(3).exponents());
  EXPECT_EQ(denominatorLcm(d.R, 1), 1);
  EXPECT_EQ(denominatorLcm(d.R, 2), 9);
  EXPECT_EQ(denominatorLcm(d.R, 3), 45);
}

TEST(DenominatorLcmTest, IntegralIsOne) {
  const auto d = computeBasis(ordinarySeries({{2, 1}, {3, 1}, {6, 1}, {12, 1}}).exponents());
  for (std::size_t h = 1; h <= d.R.nrows(); ++h) EXPECT_EQ(denominatorLcm(d.R, h), 1);
}

TEST(MakeIntegralTruncatedTest, BohrExample) {
  const auto d = computeBasis(bohrExample(3).exponents());
  const auto t2 = makeIntegralTruncated(d.basis, d.R, 2);
  EXPECT_EQ(t2.scale, 9);
  EXPECT_EQ(t2.basis.elements[0], ExponentVector::unit("ONE", q(1, 6)));
  EXPECT_EQ(t2.R.at(0, 0), q(9));
  EXPECT_EQ(t2.R.at(1, 0), q(19));

  const auto t3 = makeIntegralTruncated(d.basis, d.R, 3);
  EXPECT_EQ(t3.scale, 45);
  EXPECT_EQ(t3.basis.elements[0], ExponentVector::unit("ONE", q(1, 30)));
  EXPECT_EQ(t3.R.at(0, 0), q(45));
  EXPECT_EQ(t3.R.at(1, 0), q(95));
  EXPECT_EQ(t3.R.at(2, 0), q(153));
  EXPECT_EQ(bohr::apply(t3.R, t3.basis.elements), bohrExample(3).exponents());
}

TEST(MakeIntegralTruncatedTest, IntegralInputUnchanged) {
  const auto d = computeBasis(ordinarySeries({{2, 1}, {3, 1}, {6, 1}}).exponents());
  const auto t = makeIntegralTruncated(d.basis, d.R, 3);
  EXPECT_EQ(t.scale, 1);
  EXPECT_EQ(t.basis, d.basis);
  EXPECT_EQ(t.R, d.R);
}

TEST(MakeIntegralTruncatedTest, RandomInputsBecomeIntegral) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto lambda = randomExponents(rng);
    const auto d = computeBasis(lambda);
    std::uniform_int_distribution<std::size_t> hDist(1, lambda.size());
    const std::size_t h = hDist(rng);
    const auto t = makeIntegralTruncated(d.basis, d.R, h);
    const auto head = t.R.restrictRows([&] {
      std::vector<std::size_t> idx(h);
      for (std::size_t i = 0; i < h; ++i) idx[i] = i;
      return idx;
    }());
    EXPECT_TRUE(isIntegral(head));
    for (std::size_t hh = 1; hh <= h; ++hh) EXPECT_EQ(denominatorLcm(t.R, hh), 1);
    const auto rebuilt = bohr::apply(t.R, t.basis.elements);
    for (std::size_t i = 0; i < h; ++i) EXPECT_EQ(rebuilt[i], lambda[i]);
  }
}

}  // namespace
}  // namespace bohr
