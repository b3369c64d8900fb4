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

#include "ghzmet/channel.hpp"

#include <cmath>
#include <string>

namespace ghzmet {

void NoiseModel::validate() const {
  if (!(gamma >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "gamma must be >= 0");
  if (alpha_x < 0.0 || alpha_y < 0.0 || alpha_z < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "alpha weights must be >= 0");
  }
  if (std::abs(alpha_x + alpha_y + alpha_z - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "alpha weights must sum to 1");
  }
}

namespace {

constexpr double kImagTolerance = 1e-10;

// sinh(z)/z, continued analytically through z = 0.
cplx sinhc(cplx z) {
  if (std::abs(z) < 1e-3) {
    const cplx z2 = z * z;
    return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sinh(z) / z;
}

// (z cosh z - sinh z) / z^3, the derivative kernel of sinhc.
cplx sinhc_slope(cplx z) {
  if (std::abs(z) < 1e-2) {
    const cplx z2 = z * z;
    return 1.0 / 3.0 + z2 / 30.0 + z2 * z2 / 840.0 + z2 * z2 * z2 / 45360.0;
  }
  return (z * std::cosh(z) - std::sinh(z)) / (z * z * z);
}

// Shared pieces of the omega-dependent coefficients: with radicand
// u = (ax - ay)^2 g^2 - 4 w^2 and z = t sqrt(u) / 2, the closed forms read
//   b = e^{-k t} cosh z,  c = e^{-k t} w t sinhc z,  f = e^{-k t} (ax - ay) g (t / 2) sinhc z
// with k = g (1 + az) / 2. The e^{t sqrt(u)} factors of the printed form are
// folded into cosh/sinh so the radicand can change sign without branching.
struct OmegaTerms {
  double decay;
  cplx z;
  cplx cosh_z;
  cplx sinhc_z;
};

OmegaTerms omega_terms(const NoiseModel& m, double omega, double t) {
  const double dxy = (m.alpha_x - m.alpha_y) * m.gamma;
  const double radicand = dxy * dxy - 4.0 * omega * omega;
  const cplx z = 0.5 * t * std::sqrt(cplx(radicand, 0.0));
  const double decay = std::exp(-0.5 * t * m.gamma * (1.0 + m.alpha_z));
  return {decay, z, std::cosh(z), sinhc(z)};
}

double checked_real(cplx v, const char* name) {
  if (std::abs(v.imag()) > kImagTolerance) {
    throw Error(ErrorCode::kNonRealResult,
                std::string(name) + " has imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

}  // namespace

CoefficientSet coefficients(const NoiseModel& model, double omega, double t) {
  if (!(t >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "t must be >= 0");
  const double g = model.gamma;
  const double ax = model.alpha_x;
  const double ay = model.alpha_y;
  const double az = model.alpha_z;

  CoefficientSet out;
  out.omega = omega;
  out.t = t;

  const double pop_decay = std::exp(-0.5 * t * (1.0 + ax + ay - az) * g);
  const double pop_growth = std::exp(t * (ax + ay) * g);
  out.a = 0.5 * pop_decay * (1.0 + pop_growth);
  out.d = 0.5 * pop_decay * (-1.0 + pop_growth);

  const OmegaTerms w = omega_terms(model, omega, t);
  out.b = checked_real(w.decay * w.cosh_z, "b");
  out.c = checked_real(w.decay * omega * t * w.sinhc_z, "c");
  out.f = checked_real(w.decay * (ax - ay) * g * 0.5 * t * w.sinhc_z, "f");
  out.theta = std::atan2(out.c, out.b);
  return out;
}

CoefficientDerivatives coefficient_derivatives(const NoiseModel& model, double omega, double t) {
  if (!(t >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "t must be >= 0");
  // d z / d omega = -omega t^2 / z; d cosh z = sinh z dz, d sinhc z = z sinhc_slope(z) dz.
  const OmegaTerms w = omega_terms(model, omega, t);
  const cplx slope = sinhc_slope(w.z);
  const double t2 = t * t;
  const double dxy = (model.alpha_x - model.alpha_y) * model.gamma;

  CoefficientDerivatives out;
  out.db = checked_real(-w.decay * omega * t2 * w.sinhc_z, "db");
  out.dc = checked_real(w.decay * t * (w.sinhc_z - omega * omega * t2 * slope), "dc");
  out.df = checked_real(-w.decay * dxy * 0.5 * t * t2 * omega * slope, "df");
  return out;
}

CMat PauliSMatrix::apply(const CMat& rho) const {
  CMat out = CMat::zeros(rho.rows(), rho.cols());
  for (int i = 0; i < 4; ++i) {
    const CMat left = pauli::by_index(i) * rho;
    for (int j = 0; j < 4; ++j) {
      const cplx w = s(i, j);
      if (w == cplx{}) continue;
      out += (left * pauli::by_index(j)) * w;
    }
  }
  return out;
}

PauliSMatrix s_matrix(const CoefficientSet& k) {
  PauliSMatrix out;
  out.s(0, 0) = 0.5 * (k.a + k.b);
  out.s(1, 1) = 0.5 * (k.d + k.f);
  out.s(2, 2) = 0.5 * (k.d - k.f);
  out.s(3, 3) = 0.5 * (k.a - k.b);
  out.s(0, 3) = cplx(0.0, 0.5 * k.c);
  out.s(3, 0) = cplx(0.0, -0.5 * k.c);
  return out;
}

PauliSMatrix s_matrix_from_map(const std::function<CMat(const CMat&)>& channel) {
  // Choi matrix C[(r,a),(s,b)] = E(|a><b|)(r, s).
  CMat choi(4, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      CMat unit(2, 2);
      unit(a, b) = 1.0;
      const CMat image = channel(unit);
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t s = 0; s < 2; ++s) choi(r * 2 + a, s * 2 + b) = image(r, s);
      }
    }
  }
  PauliSMatrix out;
  for (int k = 0; k < 4; ++k) {
    const CMat pk = pauli::by_index(k);
    for (int l = 0; l < 4; ++l) {
      const CMat pl = pauli::by_index(l);
      cplx acc = 0.0;
      for (std::size_t row = 0; row < 4; ++row) {
        for (std::size_t col = 0; col < 4; ++col) {
          acc += std::conj(pk(row / 2, row % 2)) * choi(row, col) * pl(col / 2, col % 2);
        }
      }
      out.s(k, l) = 0.25 * acc;
    }
  }
  return out;
}

CMat transfer_matrix(const PauliSMatrix& s) {
  CMat out(4, 4);
  for (int l = 0; l < 4; ++l) {
    const CMat image = s.apply(pauli::by_index(l));
    for (int k = 0; k < 4; ++k) out(k, l) = 0.5 * trace_product(pauli::by_index(k), image);
  }
  return out;
}

double channel_distance(const PauliSMatrix& x, const PauliSMatrix& y) {
  return max_abs_diff(transfer_matrix(x), transfer_matrix(y));
}

CMat KrausSet::apply(const CMat& rho) const {
  CMat out = CMat::zeros(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < 4; ++i) {
    if (probs[i] == 0.0) continue;
    out += conjugate(ops[i], rho) * cplx(probs[i]);
  }
  return out;
}

double KrausSet::completeness_residue() const {
  CMat acc = CMat::zeros(2, 2);
  for (std::size_t i = 0; i < 4; ++i) acc += (ops[i].adjoint() * ops[i]) * cplx(probs[i]);
  return max_abs_diff(acc, CMat::identity(2));
}

double KrausSet::unitarity_residue() const {
  double worst = 0.0;
  for (const auto& k : ops) worst = std::max(worst, max_abs_diff(k.adjoint() * k, CMat::identity(2)));
  return worst;
}

KrausSet kraus(const CoefficientSet& k) {
  const double r = std::hypot(k.b, k.c);
  KrausSet out;
  out.probs = {0.5 * (k.a + r), 0.5 * (k.a - r), 0.5 * (k.d + k.f), 0.5 * (k.d - k.f)};
  for (std::size_t i = 0; i < 4; ++i) {
    if (out.probs[i] < -1e-10) {
      throw Error(ErrorCode::kNegativeProbability,
                  "p" + std::to_string(i + 1) + " = " + std::to_string(out.probs[i]));
    }
  }
  const cplx phase = std::polar(1.0, k.theta);
  out.ops[0] = CMat{{1.0, 0.0}, {0.0, phase}};
  out.ops[1] = CMat{{1.0, 0.0}, {0.0, -phase}};
  out.ops[2] = pauli::x();
  out.ops[3] = pauli::y();
  return out;
}

KrausSet bitflip_channel(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "bit-flip strength " + std::to_string(p));
  }
  KrausSet out;
  out.probs = {1.0 - 0.5 * p, 0.5 * p, 0.0, 0.0};
  out.ops = {pauli::i2(), pauli::x(), pauli::y(), pauli::z()};
  return out;
}

namespace {

// Fixed-size 2x2 block used in the RK4 inner loop: (00, 01, 10, 11).
using Mat2 = std::array<cplx, 4>;

Mat2 lindblad_rhs(const Mat2& r, const NoiseModel& m, double omega) {
  // -i omega [sigma_z / 2, rho]: diagonal untouched, off-diagonals rotate.
  const cplx mi(0.0, -1.0);
  Mat2 out{0.0, mi * omega * r[1], -mi * omega * r[2], 0.0};
  // sigma_x rho sigma_x, sigma_y rho sigma_y, sigma_z rho sigma_z in components.
  const Mat2 xrx{r[3], r[2], r[1], r[0]};
  const Mat2 yry{r[3], -r[2], -r[1], r[0]};
  const Mat2 zrz{r[0], -r[1], -r[2], r[3]};
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] += -0.5 * m.gamma *
              (r[i] - m.alpha_x * xrx[i] - m.alpha_y * yry[i] - m.alpha_z * zrz[i]);
  }
  return out;
}

Mat2 axpy(const Mat2& x, double s, const Mat2& y) {
  return {x[0] + s * y[0], x[1] + s * y[1], x[2] + s * y[2], x[3] + s * y[3]};
}

}  // namespace

CMat integrate_master_equation(const NoiseModel& model, double omega, double t, const CMat& rho0,
                               double step) {
  model.validate();
  if (rho0.rows() != 2 || rho0.cols() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "master equation acts on a single qubit");
  }
  if (!(t >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "t must be >= 0");
  if (t == 0.0) return rho0;
  if (!(step > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step must be > 0");

  const auto steps = static_cast<long>(std::ceil(t / step - 1e-9));
  const double h = t / static_cast<double>(steps);
  Mat2 r{rho0(0, 0), rho0(0, 1), rho0(1, 0), rho0(1, 1)};
  for (long i = 0; i < steps; ++i) {
    const Mat2 k1 = lindblad_rhs(r, model, omega);
    const Mat2 k2 = lindblad_rhs(axpy(r, 0.5 * h, k1), model, omega);
    const Mat2 k3 = lindblad_rhs(axpy(r, 0.5 * h, k2), model, omega);
    const Mat2 k4 = lindblad_rhs(axpy(r, h, k3), model, omega);
    for (std::size_t j = 0; j < 4; ++j) {
      r[j] += (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
  }
  return CMat{{r[0], r[1]}, {r[2], r[3]}};
}

PauliSMatrix s_matrix_from_master_equation(const NoiseModel& model, double omega, double t,
                                           double step) {
  return s_matrix_from_map(
      [&](const CMat& rho) { return integrate_master_equation(model, omega, t, rho, step); });
}

}  // namespace ghzmet
