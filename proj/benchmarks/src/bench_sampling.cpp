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
#include "ghzmet/montecarlo.hpp"

namespace {

const ghzmet::NoiseModel kTransversal{.gamma = 1.0, .alpha_x = 1.0, .alpha_y = 0.0, .alpha_z = 0.0};

void BM_SimulateParity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ghzmet::TrajectoryConfig cfg{.shots = 10000, .seed = 1, .n = n, .threads = 1};
  for (auto _ : state) benchmark::DoNotOptimize(ghzmet::simulate_parity(n, kTransversal, 1.0, 0.5, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.shots));
}
BENCHMARK(BM_SimulateParity)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_SimulateParityThreaded(benchmark::State& state) {
  ghzmet::TrajectoryConfig cfg{.shots = 100000, .seed = 1, .n = 4, .threads = 0};
  for (auto _ : state) benchmark::DoNotOptimize(ghzmet::simulate_parity(4, kTransversal, 1.0, 0.5, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.shots));
}
BENCHMARK(BM_SimulateParityThreaded)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
