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

// Single-qubit noisy evolution: signal rotation about z under Pauli noise.
//
//   d rho / dt = -i omega [sigma_z / 2, rho]
//                - (gamma / 2) (rho - sum_i alpha_i sigma_i rho sigma_i)
//
// The closed-form solution is a Pauli-diagonal-plus-(0,z) channel described
// by five real functions (a, b, c, d, f) of (omega, t). It admits a Kraus
// decomposition with four unitary operators.

#pragma once

#include <array>
#include <functional>

#include "ghzmet/numerics.hpp"

namespace ghzmet {

struct NoiseModel {
  double gamma = 0.0;
  double alpha_x = 1.0;
  double alpha_y = 0.0;
  double alpha_z = 0.0;

  static NoiseModel transversal(double gamma) { return {gamma, 1.0, 0.0, 0.0}; }
  static NoiseModel parallel(double gamma) { return {gamma, 0.0, 0.0, 1.0}; }
  static NoiseModel noiseless() { return {0.0, 1.0, 0.0, 0.0}; }

  /// Throws kInvalidArgument on negative gamma/alpha or alphas not summing to 1 (1e-12).
  void validate() const;
};

struct CoefficientSet {
  double a = 1.0;
  double b = 1.0;
  double c = 0.0;
  double d = 0.0;
  double f = 0.0;
  double theta = 0.0;  ///< Kraus phase atan2(c, b), signed
  double omega = 0.0;
  double t = 0.0;
};

/// d/d omega of the coefficients; a and d do not depend on omega.
struct CoefficientDerivatives {
  double db = 0.0;
  double dc = 0.0;
  double df = 0.0;
};

/// Closed-form coefficients. Throws kInvalidArgument for t < 0 and
/// kNonRealResult if the complex evaluation leaves an imaginary residue > 1e-10.
CoefficientSet coefficients(const NoiseModel& model, double omega, double t);

/// Analytic omega-derivatives of b, c, f at (omega, t).
CoefficientDerivatives coefficient_derivatives(const NoiseModel& model, double omega, double t);

/// The 4x4 process matrix S of E(rho) = sum_ij S_ij sigma_i rho sigma_j.
struct PauliSMatrix {
  CMat s = CMat::zeros(4, 4);

  CMat apply(const CMat& rho) const;
};

PauliSMatrix s_matrix(const CoefficientSet& coeffs);

/// Process matrix of an arbitrary single-qubit linear map, read off its Choi matrix.
PauliSMatrix s_matrix_from_map(const std::function<CMat(const CMat&)>& channel);

/// Real 4x4 Pauli transfer matrix R_kl = tr(sigma_k E(sigma_l)) / 2.
CMat transfer_matrix(const PauliSMatrix& s);

/// Max entrywise difference between the transfer matrices of two channels.
double channel_distance(const PauliSMatrix& x, const PauliSMatrix& y);

/// Four unitary Kraus operators with their mixing probabilities.
struct KrausSet {
  std::array<CMat, 4> ops;
  std::array<double, 4> probs{};

  CMat apply(const CMat& rho) const;
  /// max |sum_i p_i K_i^dagger K_i - I|
  double completeness_residue() const;
  /// max over i of |K_i^dagger K_i - I|
  double unitarity_residue() const;
};

/// Throws kNegativeProbability if any p_i < -1e-10.
KrausSet kraus(const CoefficientSet& coeffs);

/// rho -> (1 - p/2) rho + (p/2) X rho X, padded with two zero-weight operators.
/// Throws kOutOfRange unless 0 <= p <= 1.
KrausSet bitflip_channel(double p);

/// Fixed-step RK4 integration of the master equation; the step is shrunk so
/// that an integer number of steps lands exactly on t.
CMat integrate_master_equation(const NoiseModel& model, double omega, double t, const CMat& rho0,
                               double step = 1e-4);

/// Process matrix of the RK4-integrated channel at (omega, t).
PauliSMatrix s_matrix_from_master_equation(const NoiseModel& model, double omega, double t,
                                           double step = 1e-4);

}  // namespace ghzmet
