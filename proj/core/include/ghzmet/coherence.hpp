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

// Basis-dependent coherence of GHZ probes under independent bit-flip noise.
// Measures read coherence in the matrix's own index basis; callers rotate
// into the desired reference basis first.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ghzmet/numerics.hpp"
#include "ghzmet/states.hpp"

namespace ghzmet {

/// Sum of |rho_ij| over i != j.
double c_l1(const CMat& rho);

/// S(diag(rho)) - S(rho), in bits.
double c_re(const CMat& rho);

/// H^{(x) n} rho H^{(x) n}.
CMat hadamard_rotate(const CMat& rho, std::size_t n);

/// sum_k sigma^k for a single-qubit Pauli `sigma` on n qubits.
CMat collective_generator(const CMat& sigma, std::size_t n);

/// QFI of rho under the unitary family exp(-i phi h) rho exp(i phi h).
/// Pairs with lambda_n + lambda_m <= 1e-10 are dropped. Throws kNotHermitian.
double qfi_unitary(const CMat& rho, const CMat& h);

struct FreezeSweepRecord {
  Basis prep_basis = Basis::kComputational;
  Basis measure_basis = Basis::kComputational;
  double p = 0.0;
  double c_l1 = 0.0;
  double c_re = 0.0;
  double qfi = 0.0;
};

/// Prepares ghz(n, prep), applies bitflip_channel(p) to each qubit, rotates
/// into `measure` and records both coherences plus the QFI with respect to
/// the collective z generator in the measurement frame (sum X in the
/// original frame when measure is hadamard). Noise acts before the phase.
std::vector<FreezeSweepRecord> freeze_sweep(std::size_t n, Basis prep, Basis measure,
                                            std::span<const double> p_grid);

/// QFI of the product probe |+>^{(x) n} after bit-flip noise p, generator sum Z.
double product_probe_qfi(std::size_t n, double p);

}  // namespace ghzmet
