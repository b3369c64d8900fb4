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

// Trajectory sampling of the product channel and of parity readout.
//
// Every Kraus operator of the evolution channel is unitary, so a shot draws
// one operator per qubit and keeps a pure state vector. Random numbers come
// from a counter-based generator keyed by (seed, shot, lane), which makes the
// output independent of how shots are split across threads.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ghzmet/channel.hpp"
#include "ghzmet/numerics.hpp"

namespace ghzmet {

/// Stateless counter-based uniform generator (SplitMix64 finalizer over a keyed counter).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  /// Uniform double in [0, 1) for (shot, lane); the same inputs always give the same value.
  double uniform(std::uint64_t shot, std::uint64_t lane) const;

  /// Sequential view over one shot's lanes.
  class Stream {
   public:
    Stream(const CounterRng& rng, std::uint64_t shot) : rng_(&rng), shot_(shot) {}
    double next() { return rng_->uniform(shot_, lane_++); }

   private:
    const CounterRng* rng_;
    std::uint64_t shot_;
    std::uint64_t lane_ = 0;
  };

  Stream stream(std::uint64_t shot) const { return Stream(*this, shot); }

 private:
  std::uint64_t seed_;
};

struct TrajectoryConfig {
  std::size_t shots = 100000;
  std::uint64_t seed = 0;
  std::size_t n = 1;
  /// Worker threads; 0 picks hardware concurrency. Results do not depend on it.
  std::size_t threads = 0;

  void validate() const;
};

struct SampleEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Draws one Kraus index per qubit (lane q of `stream`) and applies it.
std::vector<cplx> sample_trajectory(const KrausSet& kraus, std::span<const cplx> psi,
                                    std::size_t n, CounterRng::Stream& stream);

/// Mean of +-1 parity outcomes over trajectories starting from the GHZ probe.
/// Outcomes are flipped with probability (1 - v_add)/2 when v_add < 1.
SampleEstimate simulate_parity(std::size_t n, const NoiseModel& model, double omega, double t,
                               const TrajectoryConfig& cfg, double v_add = 1.0);

/// Samples cfg.shots +-1 outcomes with mean `mean_in`, flips each with
/// probability (1 - v_add)/2, and returns the resulting sample mean.
SampleEstimate flip_outcomes(double mean_in, double v_add, const TrajectoryConfig& cfg);

/// <psi| X^{(x) n} |psi>.
double parity_of(std::span<const cplx> psi);

}  // namespace ghzmet
