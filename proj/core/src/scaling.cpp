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

#include "ghzmet/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ghzmet {

double stable_parity(std::size_t n, const CoefficientSet& k) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "qubit count must be >= 1");
  const cplx w(k.f + k.b, k.c);
  const double r = std::abs(w);
  if (r == 0.0) return 0.0;
  const double nd = static_cast<double>(n);
  const double log_amp = nd * std::log(r);
  if (log_amp < -745.0) return 0.0;
  return std::exp(log_amp) * std::cos(nd * std::arg(w));
}

double ScalingConfig::visibility(std::size_t n) const {
  if (fixed_noise) return 1.0 - *fixed_noise;
  return std::pow(f0, static_cast<double>(n));
}

void ScalingConfig::validate() const {
  if (!(f0 > 0.0 && f0 <= 1.0)) throw Error(ErrorCode::kOutOfRange, "f0 must lie in (0, 1]");
  if (fixed_noise && !(*fixed_noise >= 0.0 && *fixed_noise <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "fixed noise must lie in [0, 1]");
  }
  if (n_grid.empty()) throw Error(ErrorCode::kInvalidArgument, "empty n grid");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] == 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "n grid must be strictly ascending");
    }
  }
}

std::vector<std::size_t> log_spaced_sizes(std::size_t n_min, std::size_t n_max,
                                          std::size_t count) {
  if (n_min < 1 || n_max < n_min || count < 2) {
    throw Error(ErrorCode::kInvalidArgument, "bad log-spaced size range");
  }
  std::vector<std::size_t> out;
  const double lo = std::log(static_cast<double>(n_min));
  const double hi = std::log(static_cast<double>(n_max));
  for (std::size_t i = 0; i < count; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    const auto n = static_cast<std::size_t>(std::llround(std::exp(x)));
    if (out.empty() || n > out.back()) out.push_back(n);
  }
  return out;
}

double fit_loglog_slope(std::span<const ScalingPoint> points, const FitWindow& window) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t count = 0;
  for (const auto& p : points) {
    const double n = static_cast<double>(p.n);
    if (n < window.n_min || n > window.n_max) continue;
    if (!(p.var_omega_T > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "log-log fit needs positive precision values");
    }
    const double x = std::log(n);
    const double y = std::log(p.var_omega_T);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 3) {
    throw Error(ErrorCode::kInsufficientPoints,
                std::to_string(count) + " points inside the fit window");
  }
  const double c = static_cast<double>(count);
  const double denom = c * sxx - sx * sx;
  if (!(std::abs(denom) > 0.0)) {
    throw Error(ErrorCode::kInsufficientPoints, "fit window spans a single n");
  }
  return (c * sxy - sx * sy) / denom;
}

ScalingCurve scaling_sweep(const ScalingConfig& cfg, const NoiseModel& model, double omega,
                           std::optional<FitWindow> window) {
  cfg.validate();
  model.validate();
  ScalingCurve curve;
  std::optional<double> envelope_hint;
  for (std::size_t n : cfg.n_grid) {
    const double v = cfg.visibility(n);
    ScalingPoint point;
    point.n = n;
    if (cfg.t_rule == ScalingConfig::TimeRule::kOptimize) {
      TimeSearch search;
      search.visibility = v;
      search.hint = envelope_hint;
      TimeOptimum opt;
      try {
        opt = optimize_time(n, model, omega, search);
      } catch (const Error& e) {
        // Visibility underflow: no interrogation time carries information.
        if (e.code() != ErrorCode::kDivergentPrecision) throw;
        curve.skipped.push_back(n);
        continue;
      }
      point.t_used = opt.t;
      point.var_omega_T = opt.point.var_omega_T;
      // Warm start: the envelope optimum drifts smoothly with n.
      envelope_hint = opt.envelope_t;
    } else {
      point.t_used = cfg.proportional_c *
                     std::pow(static_cast<double>(n), cfg.proportional_exponent);
      try {
        point.var_omega_T =
            precision(n, model, omega, point.t_used, StencilConfig::analytic(), v).var_omega_T;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDivergentPrecision) throw;
        curve.skipped.push_back(n);
        continue;
      }
    }
    curve.points.push_back(point);
  }
  const double n_max = static_cast<double>(cfg.n_grid.back());
  curve.window = window.value_or(FitWindow{n_max / 100.0, n_max});
  curve.fitted_slope = fit_loglog_slope(curve.points, curve.window);
  return curve;
}

}  // namespace ghzmet
