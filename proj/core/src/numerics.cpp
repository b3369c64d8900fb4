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

#include "ghzmet/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ghzmet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::kNonRealResult: return "NonRealResult";
    case ErrorCode::kNegativeProbability: return "NegativeProbability";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kDivergentPrecision: return "DivergentPrecision";
    case ErrorCode::kNoInteriorMinimum: return "NoInteriorMinimum";
    case ErrorCode::kZeroInformation: return "ZeroInformation";
    case ErrorCode::kInsufficientPoints: return "InsufficientPoints";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

CMat::CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  }
}

CMat::CMat(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0 || data_.size() != rows * cols) {
    throw Error(ErrorCode::kInvalidArgument, "entry count does not match dimensions");
  }
}

CMat::CMat(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix literal must be non-empty");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMat CMat::identity(std::size_t dim) {
  CMat m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diagonal(std::span<const cplx> values) {
  CMat m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMat CMat::projector(std::span<const cplx> v) {
  CMat m(v.size(), v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  }
  return m;
}

CMat CMat::adjoint() const {
  CMat m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  }
  return m;
}

cplx CMat::trace() const {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
  return acc;
}

CMat& CMat::operator+=(const CMat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::kInvalidArgument, "dimension mismatch in +");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::kInvalidArgument, "dimension mismatch in -");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMat& CMat::operator*=(cplx scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "dimension mismatch in *");
  }
  CMat out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx lhs = a(r, k);
      if (lhs == cplx{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += lhs * b(k, c);
    }
  }
  return out;
}

double max_abs_diff(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "dimension mismatch in max_abs_diff");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

double hermiticity_residue(const CMat& a) {
  if (!a.square()) return INFINITY;
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = r; c < a.cols(); ++c) {
      worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
    }
  }
  return worst;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const cplx s = a(ar, ac);
      if (s == cplx{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return out;
}

CMat kron_power(const CMat& a, std::size_t n) {
  CMat out = CMat::identity(1);
  for (std::size_t i = 0; i < n; ++i) out = kron(out, a);
  return out;
}

cplx trace_product(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "dimension mismatch in trace_product");
  }
  cplx acc = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(r, k) * b(k, r);
  }
  return acc;
}

CMat conjugate(const CMat& a, const CMat& b) { return a * b * a.adjoint(); }

namespace pauli {
CMat i2() { return CMat::identity(2); }
CMat x() { return CMat{{0.0, 1.0}, {1.0, 0.0}}; }
CMat y() { return CMat{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}}; }
CMat z() { return CMat{{1.0, 0.0}, {0.0, -1.0}}; }
CMat hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return CMat{{s, s}, {s, -s}};
}
CMat by_index(int index) {
  switch (index) {
    case 0: return i2();
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: throw Error(ErrorCode::kOutOfRange, "Pauli index " + std::to_string(index));
  }
}
}  // namespace pauli

namespace {

double off_diagonal_norm(const CMat& a) {
  double acc = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c) acc += std::norm(a(r, c));
    }
  }
  return std::sqrt(acc);
}

double frobenius_norm(const CMat& a) {
  double acc = 0.0;
  for (const auto& v : a.entries()) acc += std::norm(v);
  return std::sqrt(acc);
}

}  // namespace

HermEigen herm_eig(const CMat& a) {
  if (!a.square()) throw Error(ErrorCode::kNotHermitian, "matrix is not square");
  const double residue = hermiticity_residue(a);
  if (residue > kHermitianTolerance) {
    throw Error(ErrorCode::kNotHermitian, "max |A - A^dagger| = " + std::to_string(residue));
  }

  const std::size_t n = a.rows();
  // Work on the exactly Hermitian part.
  CMat m = (a + a.adjoint()) * cplx(0.5);
  CMat v = CMat::identity(n);
  const double scale = std::max(frobenius_norm(m), 1e-300);

  // Each rotation U = diag(1, e^{-i phi}) R(theta) on the (p, q) plane zeroes m(p, q).
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(m) <= 1e-15 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx mpq = m(p, q);
        const double mag = std::abs(mpq);
        if (mag <= 1e-300) continue;
        const cplx phase = mpq / mag;  // e^{i phi}
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // Columns of U restricted to (p, q): u_pp = c, u_qp = -s e^{-i phi},
        // u_pq = s, u_qq = c e^{-i phi}.
        const cplx upp = c;
        const cplx uqp = -s * std::conj(phase);
        const cplx upq = s;
        const cplx uqq = c * std::conj(phase);

        // m <- m U (columns p, q)
        for (std::size_t r = 0; r < n; ++r) {
          const cplx mrp = m(r, p);
          const cplx mrq = m(r, q);
          m(r, p) = mrp * upp + mrq * uqp;
          m(r, q) = mrp * upq + mrq * uqq;
        }
        // m <- U^dagger m (rows p, q)
        for (std::size_t col = 0; col < n; ++col) {
          const cplx mpc = m(p, col);
          const cplx mqc = m(q, col);
          m(p, col) = std::conj(upp) * mpc + std::conj(uqp) * mqc;
          m(q, col) = std::conj(upq) * mpc + std::conj(uqq) * mqc;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = m(p, p).real();
        m(q, q) = m(q, q).real();
        for (std::size_t r = 0; r < n; ++r) {
          const cplx vrp = v(r, p);
          const cplx vrq = v(r, q);
          v(r, p) = vrp * upp + vrq * uqp;
          v(r, q) = vrp * upq + vrq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return m(i, i).real() < m(j, j).real(); });

  HermEigen out{std::vector<double>(n), CMat(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = m(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

void require_density_matrix(const CMat& rho) {
  if (!rho.square()) throw Error(ErrorCode::kNotDensityMatrix, "not square");
  if (hermiticity_residue(rho) > kHermitianTolerance) {
    throw Error(ErrorCode::kNotDensityMatrix, "not Hermitian");
  }
  const cplx tr = rho.trace();
  if (std::abs(tr - 1.0) > 1e-8) {
    throw Error(ErrorCode::kNotDensityMatrix, "trace " + std::to_string(tr.real()));
  }
  const HermEigen eig = herm_eig(rho);
  if (eig.values.front() < -kEigenClamp) {
    throw Error(ErrorCode::kNotDensityMatrix,
                "negative eigenvalue " + std::to_string(eig.values.front()));
  }
}

double spectrum_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double vn_entropy(const CMat& rho) {
  if (!rho.square()) throw Error(ErrorCode::kNotDensityMatrix, "not square");
  if (hermiticity_residue(rho) > kHermitianTolerance) {
    throw Error(ErrorCode::kNotDensityMatrix, "not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > 1e-8) {
    throw Error(ErrorCode::kNotDensityMatrix, "trace differs from 1");
  }
  const HermEigen eig = herm_eig(rho);
  if (eig.values.front() < -kEigenClamp) {
    throw Error(ErrorCode::kNotDensityMatrix, "negative eigenvalue");
  }
  return spectrum_entropy(eig.values);
}

}  // namespace ghzmet
