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

#include <random>

#include "ghzmet/numerics.hpp"
#include "ghzmet/states.hpp"

namespace {

using ghzmet::CMat;
using ghzmet::cplx;

CMat random_hermitian(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CMat a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a(i, i) = g(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      a(i, j) = cplx(g(rng), g(rng));
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

void BM_HermEig(benchmark::State& state) {
  const CMat a = random_hermitian(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(ghzmet::herm_eig(a));
}
BENCHMARK(BM_HermEig)->RangeMultiplier(2)->Range(2, 64);

void BM_VonNeumannEntropyGhz(benchmark::State& state) {
  const CMat rho = ghzmet::ghz(static_cast<std::size_t>(state.range(0)), ghzmet::Basis::kHadamard);
  for (auto _ : state) benchmark::DoNotOptimize(ghzmet::vn_entropy(rho));
}
BENCHMARK(BM_VonNeumannEntropyGhz)->DenseRange(2, 6, 2);

}  // namespace
