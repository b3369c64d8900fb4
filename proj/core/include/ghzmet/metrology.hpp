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

// Frequency estimation with GHZ probes and parity readout.
//
// The parity signal of an n-qubit GHZ probe after time t is
//   <P_x> = Re (f + b + i c)^n
// and the time-normalized mean-squared error from error propagation is
//   Var(omega) T = t (1 - <P_x>^2) / (d<P_x>/d omega)^2.

#pragma once

#include <cstddef>
#include <optional>

#include "ghzmet/channel.hpp"
#include "ghzmet/states.hpp"

namespace ghzmet {

struct StencilConfig {
  enum class Scheme { kFivePoint, kAnalytic };

  double h = 0.1;
  Scheme scheme = Scheme::kAnalytic;

  static StencilConfig analytic() { return {0.1, Scheme::kAnalytic}; }
  static StencilConfig five_point(double h) { return {h, Scheme::kFivePoint}; }
  /// Grid lengths used for the experimental tables: 0.1 for n <= 2, 0.2 otherwise.
  static StencilConfig table_default(std::size_t n) {
    return five_point(n <= 2 ? 0.1 : 0.2);
  }

  void validate() const;
};

struct MetrologyPoint {
  std::size_t n = 0;
  double t = 0.0;
  double px = 0.0;
  double dpx_domega = 0.0;
  double var_omega_T = 0.0;
};

/// White-noise admixture v rho + (1 - v) I / 2^n. `kOutcomeFlip` describes the
/// same channel realized by flipping parity outcomes with probability (1 - v)/2.
struct WhiteNoiseConfig {
  enum class Mode { kExactMixture, kOutcomeFlip };

  double v_add = 1.0;
  Mode mode = Mode::kExactMixture;

  double flip_probability() const { return 0.5 * (1.0 - v_add); }
  void validate() const;
};

/// ((f + b - ic)^n + (f + b + ic)^n) / 2 by direct complex powers.
double parity_expectation(std::size_t n, const CoefficientSet& coeffs);

/// Log-polar description of the parity fringe, stable for any n:
///   <P_x> = v exp(log_amplitude) cos(phase)
///   d<P_x>/d omega = v exp(log_amplitude) (Re(slope) cos(phase) - Im(slope) sin(phase))
/// where slope = n w'/w and w = f + b + ic.
struct FringeGeometry {
  std::size_t n = 0;
  double t = 0.0;
  double log_amplitude = 0.0;
  double phase = 0.0;
  cplx slope;

  double parity(double visibility = 1.0) const;
  double parity_derivative(double visibility = 1.0) const;
};

FringeGeometry fringe_geometry(std::size_t n, const NoiseModel& model, double omega, double t);

/// d<P_x>/d omega by the five-point stencil in omega or the analytic chain rule.
double parity_derivative(std::size_t n, const NoiseModel& model, double omega, double t,
                         const StencilConfig& cfg);

/// Error-propagation precision; `visibility` scales the parity signal.
/// Throws kDivergentPrecision when |d<P_x>/d omega| <= 1e-14.
MetrologyPoint precision(std::size_t n, const NoiseModel& model, double omega, double t,
                         const StencilConfig& cfg = StencilConfig::analytic(),
                         double visibility = 1.0);

/// Precision with the fringe phase offset chosen optimally (a phase bias
/// applied to the probe before readout):
///   t / (V (Re(slope)^2 / (1 - V) + Im(slope)^2)),  V = v^2 exp(2 log_amplitude).
double biased_precision(std::size_t n, const NoiseModel& model, double omega, double t,
                        double visibility = 1.0);

struct TimeOptimum {
  double t = 0.0;
  MetrologyPoint point;
  /// Optimum of biased_precision found along the way (fringe envelope).
  double envelope_t = 0.0;
};

struct TimeSearch {
  double visibility = 1.0;
  /// Previous optimum used to narrow the envelope search (warm start).
  std::optional<double> hint;
};

/// Interrogation time minimizing `precision` at fixed omega. A 512-point grid
/// on (0, 4/gamma] plus golden-section refinement to 1e-6 handles resolved
/// fringes; for fast fringes the search is re-run inside a few fringe periods
/// around the optimum of `biased_precision`, and the better result is kept.
/// Throws kNoInteriorMinimum when gamma = 0.
TimeOptimum optimize_time(std::size_t n, const NoiseModel& model, double omega,
                          const TimeSearch& search = {});

struct BiasedOptimum {
  double t = 0.0;
  double var_omega_T = 0.0;
};

/// Minimizes `biased_precision` over t. Throws kNoInteriorMinimum when gamma = 0.
BiasedOptimum optimize_biased_time(std::size_t n, const NoiseModel& model, double omega,
                                   const TimeSearch& search = {});

/// d rho / d omega of the evolved GHZ probe in X form (diag entries are zero).
GhzXState evolve_ghz_derivative(std::size_t n, const CoefficientSet& coeffs,
                                const CoefficientDerivatives& dcoeffs);

/// QFI of the evolved probe with respect to omega, accumulated block by block.
double qfi_frequency(std::size_t n, const NoiseModel& model, double omega, double t);

/// Same quantity from a full eigendecomposition (n <= kMaxDenseQubits).
double qfi_frequency_dense(std::size_t n, const NoiseModel& model, double omega, double t);

/// QFI from a general state and its derivative; pairs with lambda sum <= 1e-10 are skipped.
double qfi_from_derivative(const CMat& rho, const CMat& drho);

/// Cramer-Rao bound t / F. Throws kZeroInformation when F <= 1e-300.
double crb_precision(std::size_t n, const NoiseModel& model, double omega, double t);

/// Minimizes crb_precision over t (512-point grid on (0, 4/gamma] + golden).
BiasedOptimum optimize_qfi_time(std::size_t n, const NoiseModel& model, double omega);

struct ReferenceBounds {
  double sql = 0.0;
  double hl = 0.0;
};

/// SQL opt_1 / n and HL opt_1 / n^2 anchored to the optimal single-qubit parity precision.
ReferenceBounds sql_hl_bounds(std::size_t n, const NoiseModel& model, double omega);
ReferenceBounds sql_hl_bounds(std::size_t n, double single_qubit_optimum);

/// S_n = 1 / (n Var(omega) T).
double fisher_per_qubit(const MetrologyPoint& point);

/// v rho + (1 - v) I / 2^n applied to an X state.
GhzXState add_white_noise(const GhzXState& x, const WhiteNoiseConfig& cfg);

/// <P_x> of an X state: sum over weights of C(n, m) Re anti[m].
double x_state_parity(const GhzXState& x);

/// X^{(x) n} as a dense matrix.
CMat parity_operator(std::size_t n);

}  // namespace ghzmet
