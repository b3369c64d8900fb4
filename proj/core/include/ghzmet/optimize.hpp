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

// One-dimensional minimization: golden-section search and grid bracketing.

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ghzmet {

struct Minimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search on [lo, hi] until the bracket is narrower than `tol`.
/// Non-finite objective values are treated as +infinity.
Minimum golden_section(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Evaluates f on an ascending grid, then golden-refines between the
/// neighbours of the best grid point. Returns value = +inf if no grid point is finite.
Minimum grid_then_golden(const std::function<double(double)>& f, std::span<const double> grid,
                         double tol);

/// `count` points i * hi / count, i = 1..count.
std::vector<double> linear_grid(double hi, std::size_t count);
/// `count` log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t count);

}  // namespace ghzmet
