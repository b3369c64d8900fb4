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

// Precision scaling with probe size up to ~1e5 qubits, with preparation
// noise folded into the parity visibility.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ghzmet/channel.hpp"
#include "ghzmet/metrology.hpp"

namespace ghzmet {

/// Parity ((f + b - ic)^n + (f + b + ic)^n)/2 evaluated as r^n cos(n phi) with
/// r^n = exp(n ln r); underflows to exactly 0.
double stable_parity(std::size_t n, const CoefficientSet& coeffs);

struct ScalingConfig {
  enum class TimeRule { kOptimize, kProportional };

  /// Per-qubit preparation fidelity; visibility is f0^n.
  double f0 = 1.0;
  std::vector<std::size_t> n_grid;
  TimeRule t_rule = TimeRule::kOptimize;
  /// kProportional: t = proportional_c * n^proportional_exponent.
  double proportional_c = 1.55;
  double proportional_exponent = -1.0 / 3.0;
  /// Fixed white-noise fraction; overrides f0 when set (visibility 1 - fixed_noise).
  std::optional<double> fixed_noise;

  double visibility(std::size_t n) const;
  void validate() const;
};

struct ScalingPoint {
  std::size_t n = 0;
  double t_used = 0.0;
  double var_omega_T = 0.0;
};

struct FitWindow {
  double n_min = 0.0;
  double n_max = 0.0;
};

struct ScalingCurve {
  std::vector<ScalingPoint> points;
  /// Probe sizes dropped because the parity slope vanished at the chosen t.
  std::vector<std::size_t> skipped;
  double fitted_slope = 0.0;
  FitWindow window;
};

/// `count` log-spaced integer probe sizes from n_min to n_max, deduplicated.
std::vector<std::size_t> log_spaced_sizes(std::size_t n_min, std::size_t n_max, std::size_t count);

/// Least-squares slope of ln(var) vs ln(n) over points with n inside `window`.
/// Throws kInsufficientPoints with fewer than 3 usable points.
double fit_loglog_slope(std::span<const ScalingPoint> points, const FitWindow& window);

/// Evaluates the precision for every n of the grid. With no window given the
/// fit covers the top two decades of the grid.
ScalingCurve scaling_sweep(const ScalingConfig& cfg, const NoiseModel& model, double omega,
                           std::optional<FitWindow> window = std::nullopt);

}  // namespace ghzmet
