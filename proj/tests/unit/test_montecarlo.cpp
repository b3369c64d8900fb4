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

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "ghzmet/channel.hpp"
#include "ghzmet/error.hpp"
#include "ghzmet/metrology.hpp"
#include "ghzmet/montecarlo.hpp"
#include "ghzmet/states.hpp"
#include "oracles.hpp"

using namespace ghzmet;
using oracle::error_code_of;

namespace {

const NoiseModel kTransversal = NoiseModel::transversal(1.0);

TrajectoryConfig config(std::size_t n, std::size_t shots, std::uint64_t seed, std::size_t threads = 0) {
  TrajectoryConfig cfg;
  cfg.n = n;
  cfg.shots = shots;
  cfg.seed = seed;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

TEST_CASE("counter RNG is a pure function of its key") {
  const CounterRng a(42), b(42), c(43);
  CHECK(a.uniform(7, 3) == b.uniform(7, 3));
  CHECK(a.uniform(7, 3) != c.uniform(7, 3));
  CHECK(a.uniform(7, 3) != a.uniform(7, 4));
  CHECK(a.uniform(7, 3) != a.uniform(8, 3));
  double mean = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = a.uniform(i, 0);
    CHECK_MESSAGE((u >= 0.0 && u < 1.0), "uniform out of range");
    mean += u;
  }
  CHECK(std::abs(mean / 100000 - 0.5) <= 4 * std::sqrt(1.0 / 12 / 100000));
}

TEST_CASE("sample_trajectory: identity Kraus set leaves the state unchanged") {
  const KrausSet id = kraus(coefficients(kTransversal, 1.0, 0.0));
  const auto psi = ghz_vector(3, Basis::kComputational);
  auto stream = CounterRng(1).stream(0);
  const auto out = sample_trajectory(id, psi, 3, stream);
  for (std::size_t i = 0; i < psi.size(); ++i) CHECK(std::abs(out[i] - psi[i]) <= 1e-15);
}

TEST_CASE("sample_trajectory: deterministic X on every qubit") {
  KrausSet flip;
  flip.ops = {pauli::i2(), pauli::z(), pauli::x(), pauli::y()};
  flip.probs = {0.0, 0.0, 1.0, 0.0};
  std::vector<cplx> zero(16, 0.0);
  zero[0] = 1.0;
  auto stream = CounterRng(5).stream(9);
  const auto out = sample_trajectory(flip, zero, 4, stream);
  CHECK(std::abs(out[15] - 1.0) <= 1e-15);
  CHECK(error_code_of([&] { sample_trajectory(flip, zero, 3, stream); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("averaged trajectories reproduce the channel output") {
  const std::size_t n = 2, shots = 100000;
  const KrausSet k = kraus(coefficients(kTransversal, 1.0, 0.7745));
  const auto psi = ghz_vector(n, Basis::kComputational);
  const CounterRng rng(2024);
  const std::size_t dim = psi.size();
  std::vector<cplx> sum(dim * dim, 0.0);
  std::vector<double> sum_sq_re(dim * dim, 0.0), sum_sq_im(dim * dim, 0.0);
  for (std::size_t s = 0; s < shots; ++s) {
    auto stream = rng.stream(s);
    const auto out = sample_trajectory(k, psi, n, stream);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        const cplx v = out[r] * std::conj(out[c]);
        sum[r * dim + c] += v;
        sum_sq_re[r * dim + c] += v.real() * v.real();
        sum_sq_im[r * dim + c] += v.imag() * v.imag();
      }
    }
  }
  const CMat exact = apply_product_channel(ghz(n, Basis::kComputational), k, n);
  for (std::size_t i = 0; i < dim * dim; ++i) {
    const cplx mean = sum[i] / static_cast<double>(shots);
    const double var_re = sum_sq_re[i] / shots - mean.real() * mean.real();
    const double var_im = sum_sq_im[i] / shots - mean.imag() * mean.imag();
    const cplx target = exact.entries()[i];
    CHECK(std::abs(mean.real() - target.real()) <= 4 * std::sqrt(var_re / shots) + 1e-12);
    CHECK(std::abs(mean.imag() - target.imag()) <= 4 * std::sqrt(var_im / shots) + 1e-12);
  }
}

TEST_CASE("simulate_parity: noiseless fringe minimum") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const double t = std::numbers::pi / n;
    const SampleEstimate e = simulate_parity(n, NoiseModel::noiseless(), 1.0, t, config(n, 2000, 3));
    CHECK(e.mean == -1.0);
    CHECK(e.std_error == 0.0);
  }
}

TEST_CASE("simulate_parity agrees with the closed-form parity") {
  const SampleEstimate e = simulate_parity(4, kTransversal, 1.0, 0.4650, config(4, 100000, 77));
  const double exact = parity_expectation(4, coefficients(kTransversal, 1.0, 0.4650));
  CHECK(e.std_error > 0.0);
  CHECK(std::abs(e.mean - exact) <= 4 * e.std_error);
}

TEST_CASE("simulate_parity is deterministic and independent of thread count") {
  const SampleEstimate a = simulate_parity(3, kTransversal, 1.0, 0.5684, config(3, 20000, 11, 1));
  const SampleEstimate b = simulate_parity(3, kTransversal, 1.0, 0.5684, config(3, 20000, 11, 1));
  const SampleEstimate c = simulate_parity(3, kTransversal, 1.0, 0.5684, config(3, 20000, 11, 3));
  const SampleEstimate d = simulate_parity(3, kTransversal, 1.0, 0.5684, config(3, 20000, 12, 1));
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.mean == c.mean);
  CHECK(a.std_error == c.std_error);
  CHECK(a.mean != d.mean);
}

TEST_CASE("flip_outcomes contracts the mean by the visibility") {
  const TrajectoryConfig cfg = config(1, 100000, 19);
  for (double mean_in : {0.8, -0.3, 0.0}) {
    const SampleEstimate same = flip_outcomes(mean_in, 1.0, cfg);
    CHECK(std::abs(same.mean - mean_in) <= 4 * same.std_error + 1e-12);
    const SampleEstimate coin = flip_outcomes(mean_in, 0.0, cfg);
    CHECK(std::abs(coin.mean) <= 4 * coin.std_error);
    const SampleEstimate lab = flip_outcomes(mean_in, 0.93, cfg);
    CHECK(std::abs(lab.mean - 0.93 * mean_in) <= 4 * lab.std_error);
  }
  CHECK(error_code_of([&] { flip_outcomes(0.5, 1.5, cfg); }) == ErrorCode::kOutOfRange);
  CHECK(error_code_of([&] { flip_outcomes(1.5, 0.5, cfg); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("outcome flipping matches the exact white-noise mixture") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const double t = 0.4650;
    const SampleEstimate e = simulate_parity(n, kTransversal, 1.0, t, config(n, 100000, 100 + n), 0.93);
    const GhzXState mixed = add_white_noise(evolve_ghz(n, coefficients(kTransversal, 1.0, t)), {0.93});
    CHECK(std::abs(e.mean - x_state_parity(mixed)) <= 4 * e.std_error);
  }
}

TEST_CASE("trajectory config validation") {
  CHECK(error_code_of([] { config(1, 0, 0).validate(); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { config(0, 10, 0).validate(); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("parity_of a GHZ vector") {
  CHECK(parity_of(ghz_vector(3, Basis::kComputational)) == doctest::Approx(1.0));
  std::vector<cplx> minus{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
  CHECK(parity_of(minus) == doctest::Approx(-1.0));
}
