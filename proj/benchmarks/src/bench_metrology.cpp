// Copyright 2026 The ghzmet Authors
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

#include "ghzmet/channel.hpp"
#include "ghzmet/metrology.hpp"
#include "ghzmet/scaling.hpp"
#include "ghzmet/states.hpp"

namespace {

const ghzmet::NoiseModel kTransversal{.gamma = 1.0, .alpha_x = 1.0, .alpha_y = 0.0, .alpha_z = 0.0};

void BM_Coefficients(benchmark::State& state) {
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ghzmet::coefficients(kTransversal, 1.0, t));
    t = t < 2.0 ? t + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_Coefficients);

void BM_EvolveGhz(benchmark::State& state) {
  const auto coeffs = ghzmet::coefficients(kTransversal, 1.0, 0.5);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ghzmet::evolve_ghz(n, coeffs));
}
BENCHMARK(BM_EvolveGhz)->DenseRange(1, 6);

void BM_QfiXForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ghzmet::qfi_frequency(n, kTransversal, 1.0, 0.5));
}
BENCHMARK(BM_QfiXForm)->DenseRange(1, 6);

void BM_QfiDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ghzmet::qfi_frequency_dense(n, kTransversal, 1.0, 0.5));
}
BENCHMARK(BM_QfiDense)->DenseRange(1, 6);

void BM_OptimizeTime(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ghzmet::optimize_time(n, kTransversal, 1.0));
}
BENCHMARK(BM_OptimizeTime)->Arg(1)->Arg(2)->Arg(6)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_ScalingSweep(benchmark::State& state) {
  ghzmet::ScalingConfig cfg;
  cfg.n_grid = ghzmet::log_spaced_sizes(1, static_cast<std::size_t>(state.range(0)), 60);
  for (auto _ : state) benchmark::DoNotOptimize(ghzmet::scaling_sweep(cfg, kTransversal, 1.0));
}
BENCHMARK(BM_ScalingSweep)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
