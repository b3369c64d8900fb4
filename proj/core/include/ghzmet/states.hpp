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

// GHZ probes and their images under independent single-qubit channels.
//
// Qubit 0 is the most significant bit of a computational basis index, so an
// n-qubit operator on qubit q is I^{(x) q} (x) K (x) I^{(x) (n - q - 1)}.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ghzmet/channel.hpp"
#include "ghzmet/numerics.hpp"

namespace ghzmet {

enum class Basis { kComputational, kHadamard };

/// Largest qubit count for which full 2^n x 2^n matrices are materialized.
inline constexpr std::size_t kMaxDenseQubits = 6;

/// (|0...0> + |1...1>)/sqrt(2), or its image under H^{(x) n}. Throws kTooLarge above 20 qubits.
std::vector<cplx> ghz_vector(std::size_t n, Basis basis);

/// Projector onto ghz_vector(n, basis). Throws kTooLarge for n > kMaxDenseQubits.
CMat ghz(std::size_t n, Basis basis);

/// Evolved GHZ probe in compressed X form. `diag[m]` is <x|rho|x> for every
/// basis state x of Hamming weight m; `anti[m]` is <x|rho|~x> where ~x is the
/// bitwise complement.
struct GhzXState {
  std::size_t n = 0;
  std::vector<double> diag;
  std::vector<cplx> anti;

  /// sum_m C(n, m) diag[m]
  double trace() const;
  /// Worst violation among: unit trace, diag/anti complement symmetry, and
  /// positivity of every 2x2 block (negative part of its smaller eigenvalue).
  double invariant_residue() const;
};

/// Closed-form image of the GHZ state under coeffs' channel on every qubit.
GhzXState evolve_ghz(std::size_t n, const CoefficientSet& coeffs);

/// Full matrix of an X state. Throws kTooLarge for n > kMaxDenseQubits.
CMat expand(const GhzXState& x);

/// Applies `k` to qubit `qubit` of an n-qubit density matrix.
CMat apply_single_qubit_channel(const CMat& rho, const KrausSet& k, std::size_t qubit,
                                std::size_t n);

/// Applies `k` independently to all n qubits. Throws kTooLarge for n > kMaxDenseQubits.
CMat apply_product_channel(const CMat& rho, const KrausSet& k, std::size_t n);

/// One 2x2 invariant block of an X state: the span of {x, ~x} for every x of
/// the given weight, repeated `multiplicity` times.
struct XBlock {
  std::size_t weight = 0;
  CMat block = CMat::zeros(2, 2);
  std::uint64_t multiplicity = 0;
};

/// Block decomposition; the middle weight of even n pairs states with their
/// complements inside the class, giving C(n, n/2)/2 copies. Throws kTooLarge above 62 qubits.
std::vector<XBlock> blocks(const GhzXState& x);

/// Re tr(rho psi) for a pure-state projector psi.
double fidelity_pure(const CMat& rho, const CMat& psi);

/// Six-photon GHZ fidelity witness: A = |0><0|^{(x)6} + |1><1|^{(x)6} and
/// M_k = [cos(k pi / 6) X + sin(k pi / 6) Y]^{(x)6}, k = 0..5.
struct WitnessG6 {
  CMat a;
  std::vector<CMat> settings;

  static WitnessG6 build();
  /// (1/2) A + (1/12) sum_k (-1)^k M_k, which equals |G6><G6|.
  CMat assemble() const;
  double evaluate(const CMat& rho) const;
};

/// Witness estimate of <G6|rho|G6> for a 64x64 rho.
double witness_g6(const CMat& rho);

/// Binomial coefficient as a double (exact below 2^53).
double binomial(std::size_t n, std::size_t k);

/// x^k by repeated squaring with 0^0 = 1.
cplx ipow(cplx x, std::size_t k);
double ipow(double x, std::size_t k);

}  // namespace ghzmet
