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

#include "ghzmet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "ghzmet/states.hpp"

namespace ghzmet {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Fixed chunking so partial sums are combined in the same order for any thread count.
constexpr std::size_t kChunks = 64;

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
};

template <typename ShotFn>
SampleEstimate run_shots(const TrajectoryConfig& cfg, ShotFn&& shot_fn) {
  std::vector<Moments> partial(kChunks);
  auto run_chunk = [&](std::size_t chunk) {
    const std::size_t begin = cfg.shots * chunk / kChunks;
    const std::size_t end = cfg.shots * (chunk + 1) / kChunks;
    Moments m;
    for (std::size_t s = begin; s < end; ++s) {
      const double x = shot_fn(static_cast<std::uint64_t>(s));
      m.sum += x;
      m.sum_sq += x * x;
    }
    partial[chunk] = m;
  };

  std::size_t threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  threads = std::clamp<std::size_t>(threads, 1, kChunks);
  if (threads == 1) {
    for (std::size_t c = 0; c < kChunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < kChunks; c += threads) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  Moments total;
  for (const auto& m : partial) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
  }
  const double count = static_cast<double>(cfg.shots);
  const double mean = total.sum / count;
  const double var =
      cfg.shots > 1 ? std::max(0.0, (total.sum_sq - count * mean * mean) / (count - 1.0)) : 0.0;
  return {mean, std::sqrt(var / count)};
}

// Applies a 2x2 operator to qubit q (qubit 0 = most significant) in place.
void apply_1q(std::vector<cplx>& psi, const CMat& op, std::size_t q, std::size_t n) {
  const std::size_t bit = std::size_t{1} << (n - 1 - q);
  const cplx u00 = op(0, 0), u01 = op(0, 1), u10 = op(1, 0), u11 = op(1, 1);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    const cplx a0 = psi[i];
    const cplx a1 = psi[i | bit];
    psi[i] = u00 * a0 + u01 * a1;
    psi[i | bit] = u10 * a0 + u11 * a1;
  }
}

std::size_t draw_index(const std::array<double, 4>& probs, double r) {
  double acc = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    acc += std::max(probs[i], 0.0);
    if (r < acc) return i;
  }
  return 3;
}

}  // namespace

double CounterRng::uniform(std::uint64_t shot, std::uint64_t lane) const {
  const std::uint64_t key = splitmix64(seed_ ^ splitmix64(shot * 0x100000001b3ULL + lane));
  return static_cast<double>(splitmix64(key) >> 11) * 0x1.0p-53;
}

void TrajectoryConfig::validate() const {
  if (shots < 1) throw Error(ErrorCode::kInvalidArgument, "shots must be >= 1");
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "qubit count must be >= 1");
}

std::vector<cplx> sample_trajectory(const KrausSet& kraus, std::span<const cplx> psi,
                                    std::size_t n, CounterRng::Stream& stream) {
  if (psi.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kInvalidArgument, "state does not match qubit count");
  }
  std::vector<cplx> out(psi.begin(), psi.end());
  for (std::size_t q = 0; q < n; ++q) {
    apply_1q(out, kraus.ops[draw_index(kraus.probs, stream.next())], q, n);
  }
  return out;
}

double parity_of(std::span<const cplx> psi) {
  const std::size_t mask = psi.size() - 1;
  cplx acc = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) acc += std::conj(psi[i]) * psi[i ^ mask];
  return acc.real();
}

SampleEstimate simulate_parity(std::size_t n, const NoiseModel& model, double omega, double t,
                               const TrajectoryConfig& cfg, double v_add) {
  cfg.validate();
  if (!(v_add >= 0.0 && v_add <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "visibility must lie in [0, 1]");
  }
  const KrausSet k = kraus(coefficients(model, omega, t));
  const std::vector<cplx> probe = ghz_vector(n, Basis::kComputational);
  const CounterRng rng(cfg.seed);
  const double flip = 0.5 * (1.0 - v_add);
  return run_shots(cfg, [&](std::uint64_t shot) {
    CounterRng::Stream stream = rng.stream(shot);
    const std::vector<cplx> psi = sample_trajectory(k, probe, n, stream);
    const double expectation = parity_of(psi);
    double outcome = stream.next() < 0.5 * (1.0 + expectation) ? 1.0 : -1.0;
    if (flip > 0.0 && stream.next() < flip) outcome = -outcome;
    return outcome;
  });
}

SampleEstimate flip_outcomes(double mean_in, double v_add, const TrajectoryConfig& cfg) {
  cfg.validate();
  if (!(v_add >= 0.0 && v_add <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "visibility must lie in [0, 1]");
  }
  if (!(mean_in >= -1.0 && mean_in <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "mean must lie in [-1, 1]");
  }
  const CounterRng rng(cfg.seed);
  const double flip = 0.5 * (1.0 - v_add);
  return run_shots(cfg, [&](std::uint64_t shot) {
    CounterRng::Stream stream = rng.stream(shot);
    double outcome = stream.next() < 0.5 * (1.0 + mean_in) ? 1.0 : -1.0;
    if (stream.next() < flip) outcome = -outcome;
    return outcome;
  });
}

}  // namespace ghzmet
