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

#include "ghzmet/optimize.hpp"

#include <cmath>
#include <limits>

#include "ghzmet/error.hpp"

namespace ghzmet {

namespace {

double finite_or_inf(double v) {
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

}  // namespace

Minimum golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(hi >= lo)) throw Error(ErrorCode::kInvalidArgument, "golden_section: empty bracket");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = finite_or_inf(f(x1));
  double f2 = finite_or_inf(f(x2));
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = finite_or_inf(f(x1));
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = finite_or_inf(f(x2));
    }
  }
  return f1 <= f2 ? Minimum{x1, f1} : Minimum{x2, f2};
}

Minimum grid_then_golden(const std::function<double(double)>& f, std::span<const double> grid,
                         double tol) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "grid_then_golden: empty grid");
  std::size_t best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = finite_or_inf(f(grid[i]));
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  if (!std::isfinite(best_value)) return {grid[best], best_value};
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[best + 1 == grid.size() ? best : best + 1];
  Minimum refined = golden_section(f, lo, hi, tol);
  if (refined.value > best_value) return {grid[best], best_value};
  return refined;
}

std::vector<double> linear_grid(double hi, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = hi * static_cast<double>(i + 1) / static_cast<double>(count);
  }
  return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (count < 2 || !(lo > 0.0) || !(hi > lo)) {
    throw Error(ErrorCode::kInvalidArgument, "log_grid needs 0 < lo < hi and count >= 2");
  }
  std::vector<double> out(count);
  const double step = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo * std::exp(step * static_cast<double>(i));
  out.back() = hi;
  return out;
}

}  // namespace ghzmet
