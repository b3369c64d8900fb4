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

// Dense complex matrices for few-qubit density matrices (dimension <= 64).

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ghzmet/error.hpp"

namespace ghzmet {

using cplx = std::complex<double>;

/// Row-major dense complex matrix with value semantics.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols);
  CMat(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  /// Row-by-row literal, e.g. `CMat{{0, 1}, {1, 0}}`.
  CMat(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMat identity(std::size_t dim);
  static CMat zeros(std::size_t rows, std::size_t cols) { return CMat(rows, cols); }
  static CMat diagonal(std::span<const cplx> values);
  /// |v><v| for a column vector `v`.
  static CMat projector(std::span<const cplx> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<cplx> entries() noexcept { return data_; }

  CMat adjoint() const;
  cplx trace() const;

  CMat& operator+=(const CMat& other);
  CMat& operator-=(const CMat& other);
  CMat& operator*=(cplx scale);

  friend CMat operator+(CMat a, const CMat& b) { return a += b; }
  friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
  friend CMat operator*(CMat a, cplx s) { return a *= s; }
  friend CMat operator*(cplx s, CMat a) { return a *= s; }
  friend CMat operator*(const CMat& a, const CMat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Max |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const CMat& a, const CMat& b);
/// Max |a_ij - conj(a_ji)|.
double hermiticity_residue(const CMat& a);

CMat kron(const CMat& a, const CMat& b);
/// a^{(x) n}; kron_power(a, 0) is the 1x1 identity.
CMat kron_power(const CMat& a, std::size_t n);
/// tr(a b) without forming the product.
cplx trace_product(const CMat& a, const CMat& b);
/// a b a^dagger
CMat conjugate(const CMat& a, const CMat& b);

namespace pauli {
CMat i2();
CMat x();
CMat y();
CMat z();
CMat hadamard();
/// Pauli by index 0..3 = (I, X, Y, Z).
CMat by_index(int index);
}  // namespace pauli

/// Eigendecomposition of a Hermitian matrix: eigenvalues ascending, vectors as columns.
struct HermEigen {
  std::vector<double> values;
  CMat vectors;
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kEigenClamp = 1e-10;

/// Cyclic complex Jacobi. Throws kNotHermitian when the input departs from
/// Hermiticity by more than `kHermitianTolerance`.
HermEigen herm_eig(const CMat& a);

/// Throws kNotDensityMatrix unless `rho` is Hermitian, unit trace (1e-8) and
/// has no eigenvalue below -kEigenClamp.
void require_density_matrix(const CMat& rho);

/// Shannon entropy in bits of a probability spectrum; entries below zero are clamped.
double spectrum_entropy(std::span<const double> probabilities);

/// von Neumann entropy in bits.
double vn_entropy(const CMat& rho);

}  // namespace ghzmet
