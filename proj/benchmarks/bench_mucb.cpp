// Copyright 2026 The mucb developers
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

#include <numbers>

#include <benchmark/benchmark.h>

#include "mucb/collective_mucb.hpp"
#include "mucb/gaussian_cv.hpp"
#include "mucb/qudit_mub.hpp"

namespace {

void BM_FullMubSet(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  for (auto _ : state) {
    auto bases = mucb::full_mub_set(d);
    benchmark::DoNotOptimize(bases);
  }
  state.SetComplexityN(d);
}
BENCHMARK(BM_FullMubSet)->Arg(5)->Arg(13)->Arg(31)->Arg(61)->Complexity();

void BM_VerifyUnbiasedAllPairs(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  const auto bases = mucb::full_mub_set(d);
  for (auto _ : state) {
    double worst = 0.0;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      for (std::size_t j = i + 1; j < bases.size(); ++j) {
        worst = std::max(worst,
                         mucb::verify_unbiased(bases[i], bases[j]).max_deviation);
      }
    }
    benchmark::DoNotOptimize(worst);
  }
}
BENCHMARK(BM_VerifyUnbiasedAllPairs)->Arg(5)->Arg(13);

void BM_MucbState(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  for (auto _ : state) {
    auto psi = mucb::mucb_state(d, 1, mucb::BasisLabel::xz(0), 2,
                                mucb::BasisLabel::xz(1));
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_MucbState)->Arg(5)->Arg(13)->Arg(31);

void BM_ClassifyPairs(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  for (auto _ : state) {
    auto table = mucb::classify_pairs(d);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_ClassifyPairs)->Arg(3)->Arg(5)->Arg(7);

void BM_ProjectionSweep(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  for (auto _ : state) {
    auto sweeps = mucb::projection_sweep(d);
    benchmark::DoNotOptimize(sweeps);
  }
}
BENCHMARK(BM_ProjectionSweep)->Arg(3)->Arg(5);

void BM_LogNegativity(benchmark::State& state) {
  const auto psi =
      mucb::regularized_mucb_state(1.0, 0.0, std::numbers::pi / 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mucb::log_negativity(psi));
  }
}
BENCHMARK(BM_LogNegativity);

void BM_CvSweepGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> angles;
  for (int i = 0; i < n; ++i) {
    angles.push_back(2.0 * std::numbers::pi * double(i) / double(n));
  }
  for (auto _ : state) {
    auto rows = mucb::cv_sweep({0.25, 0.5, 1.0, 2.0}, angles);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_CvSweepGrid)->Arg(12)->Arg(24);

void BM_KernelComposition(benchmark::State& state) {
  for (auto _ : state) {
    auto check = mucb::kernel_composition_check(std::numbers::pi / 4.0,
                                                std::numbers::pi / 6.0);
    benchmark::DoNotOptimize(check);
  }
}
BENCHMARK(BM_KernelComposition);

}  // namespace

BENCHMARK_MAIN();
