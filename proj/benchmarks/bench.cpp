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

#include <benchmark/benchmark.h>

#include "bohr/basis.hpp"
#include "bohr/equivalence.hpp"
#include "bohr/eval.hpp"
#include "bohr/scenarios.hpp"
#include "bohr/valuesets.hpp"
#include "bohr/zeros.hpp"

namespace {

bohr::SeriesSpec ordinary(std::int64_t n) {
  std::vector<std::pair<std::int64_t, bohr::Complex>> coeffs;
  for (std::int64_t k = 1; k <= n; ++k) coeffs.emplace_back(k, bohr::Complex(1.0 / k, 0.0));
  return bohr::ordinarySeries(std::move(coeffs));
}

void BM_Evaluate(benchmark::State& state) {
  const bohr::CompiledSeries f(ordinary(state.range(0)));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(1.2, t));
    t += 0.01;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Evaluate)->Arg(8)->Arg(64)->Arg(512);

void BM_ComputeBasis(benchmark::State& state) {
  const auto exps = ordinary(state.range(0)).exponents();
  for (auto _ : state) benchmark::DoNotOptimize(bohr::computeBasis(exps));
}
BENCHMARK(BM_ComputeBasis)->Arg(16)->Arg(64)->Arg(256);

void BM_EquivalenceRoundTrip(benchmark::State& state) {
  const auto f = ordinary(state.range(0));
  const auto d = bohr::computeBasis(f.exponents());
  bohr::PhaseVector y;
  for (std::size_t j = 0; j < d.basis.size(); ++j) y.values.push_back(0.37 * static_cast<double>(j + 1));
  const auto g = bohr::twist(f, d.basis, d.R, y);
  for (auto _ : state) benchmark::DoNotOptimize(bohr::isEquivalentTruncated(f, g));
}
BENCHMARK(BM_EquivalenceRoundTrip)->Arg(16)->Arg(64);

void BM_CountZeros(benchmark::State& state) {
  const auto f = ordinary(2);
  const double height = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bohr::countZeros(f, {0.0, 0.0}, {-2.0, 1.0, 0.1, height}));
  }
}
BENCHMARK(BM_CountZeros)->Arg(10)->Arg(100);

void BM_Hausdorff(benchmark::State& state) {
  const auto f = ordinary(6);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = bohr::sampleLine(f, 1.0, 1e4, n, 1);
  const auto b = bohr::sampleLineViaEquivalence(f, 1.0, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bohr::hausdorff(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Hausdorff)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
