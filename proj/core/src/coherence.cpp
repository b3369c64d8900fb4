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

#include "ghzmet/coherence.hpp"

#include <cmath>

#include "ghzmet/channel.hpp"

namespace ghzmet {

double c_l1(const CMat& rho) {
  double acc = 0.0;
  for (std::size_t r = 0; r < rho.rows(); ++r) {
    for (std::size_t c = 0; c < rho.cols(); ++c) {
      if (r != c) acc += std::abs(rho(r, c));
    }
  }
  return acc;
}

double c_re(const CMat& rho) {
  require_density_matrix(rho);
  std::vector<double> populations(rho.rows());
  for (std::size_t i = 0; i < rho.rows(); ++i) populations[i] = rho(i, i).real();
  // Relative entropy is non-negative; clip round-off.
  return std::max(0.0, spectrum_entropy(populations) - vn_entropy(rho));
}

CMat hadamard_rotate(const CMat& rho, std::size_t n) {
  const CMat h = kron_power(pauli::hadamard(), n);
  if (h.rows() != rho.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "state does not match qubit count");
  }
  return h * rho * h;
}

CMat collective_generator(const CMat& sigma, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  CMat out(dim, dim);
  for (std::size_t k = 0; k < n; ++k) {
    out += kron(kron(CMat::identity(std::size_t{1} << k), sigma),
                CMat::identity(std::size_t{1} << (n - k - 1)));
  }
  return out;
}

double qfi_unitary(const CMat& rho, const CMat& h) {
  if (hermiticity_residue(h) > kHermitianTolerance) {
    throw Error(ErrorCode::kNotHermitian, "generator is not Hermitian");
  }
  const HermEigen eig = herm_eig(rho);
  const CMat rotated = eig.vectors.adjoint() * h * eig.vectors;
  double acc = 0.0;
  const std::size_t dim = eig.values.size();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double li = std::max(eig.values[i], 0.0);
      const double lj = std::max(eig.values[j], 0.0);
      const double sum = li + lj;
      if (sum <= kEigenClamp) continue;
      const double gap = li - lj;
      acc += gap * gap / sum * std::norm(rotated(i, j));
    }
  }
  return 2.0 * acc;
}

std::vector<FreezeSweepRecord> freeze_sweep(std::size_t n, Basis prep, Basis measure,
                                            std::span<const double> p_grid) {
  const CMat probe = ghz(n, prep);
  const CMat generator = collective_generator(pauli::z(), n);
  std::vector<FreezeSweepRecord> out;
  out.reserve(p_grid.size());
  for (double p : p_grid) {
    CMat rho = apply_product_channel(probe, bitflip_channel(p), n);
    if (measure == Basis::kHadamard) rho = hadamard_rotate(rho, n);
    FreezeSweepRecord rec;
    rec.prep_basis = prep;
    rec.measure_basis = measure;
    rec.p = p;
    rec.c_l1 = c_l1(rho);
    rec.c_re = c_re(rho);
    rec.qfi = qfi_unitary(rho, generator);
    out.push_back(rec);
  }
  return out;
}

double product_probe_qfi(std::size_t n, double p) {
  const std::vector<cplx> plus(2, cplx(1.0 / std::sqrt(2.0)));
  const CMat probe = kron_power(CMat::projector(plus), n);
  const CMat rho = apply_product_channel(probe, bitflip_channel(p), n);
  return qfi_unitary(rho, collective_generator(pauli::z(), n));
}

}  // namespace ghzmet
