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

#include "ghzmet/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ghzmet/optimize.hpp"

namespace ghzmet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kTimeGridPoints = 512;
constexpr double kTimeTolerance = 1e-6;

void require_qubits(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "qubit count must be >= 1");
}

void require_noise(const NoiseModel& model) {
  model.validate();
  if (model.gamma == 0.0) {
    throw Error(ErrorCode::kNoInteriorMinimum,
                "without noise the precision keeps improving with interrogation time");
  }
}

}  // namespace

void StencilConfig::validate() const {
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "stencil grid length must be > 0");
}

void WhiteNoiseConfig::validate() const {
  if (!(v_add >= 0.0 && v_add <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "visibility must lie in [0, 1]");
  }
}

double parity_expectation(std::size_t n, const CoefficientSet& k) {
  require_qubits(n);
  const cplx sum = 0.5 * (ipow(cplx(k.f + k.b, -k.c), n) + ipow(cplx(k.f + k.b, k.c), n));
  if (std::abs(sum.imag()) > 1e-12) {
    throw Error(ErrorCode::kNonRealResult, "parity has imaginary part");
  }
  return sum.real();
}

double FringeGeometry::parity(double visibility) const {
  return visibility * std::exp(log_amplitude) * std::cos(phase);
}

double FringeGeometry::parity_derivative(double visibility) const {
  return visibility * std::exp(log_amplitude) *
         (slope.real() * std::cos(phase) - slope.imag() * std::sin(phase));
}

FringeGeometry fringe_geometry(std::size_t n, const NoiseModel& model, double omega, double t) {
  require_qubits(n);
  const CoefficientSet k = coefficients(model, omega, t);
  const CoefficientDerivatives dk = coefficient_derivatives(model, omega, t);
  const cplx w(k.f + k.b, k.c);
  const cplx dw(dk.df + dk.db, dk.dc);
  const double nd = static_cast<double>(n);

  FringeGeometry g;
  g.n = n;
  g.t = t;
  const double r = std::abs(w);
  if (r == 0.0) {
    g.log_amplitude = -kInf;
    return g;
  }
  g.log_amplitude = nd * std::log(r);
  g.phase = nd * std::arg(w);
  g.slope = nd * dw / w;
  return g;
}

double parity_derivative(std::size_t n, const NoiseModel& model, double omega, double t,
                         const StencilConfig& cfg) {
  cfg.validate();
  if (cfg.scheme == StencilConfig::Scheme::kAnalytic) {
    return fringe_geometry(n, model, omega, t).parity_derivative();
  }
  const double h = cfg.h;
  auto px = [&](double w) { return fringe_geometry(n, model, w, t).parity(); };
  return (-px(omega + 2.0 * h) + 8.0 * px(omega + h) - 8.0 * px(omega - h) +
          px(omega - 2.0 * h)) /
         (12.0 * h);
}

MetrologyPoint precision(std::size_t n, const NoiseModel& model, double omega, double t,
                         const StencilConfig& cfg, double visibility) {
  MetrologyPoint out;
  out.n = n;
  out.t = t;
  out.px = visibility * fringe_geometry(n, model, omega, t).parity();
  out.dpx_domega = visibility * parity_derivative(n, model, omega, t, cfg);
  if (!(std::abs(out.dpx_domega) > 1e-14)) {
    throw Error(ErrorCode::kDivergentPrecision,
                "parity slope vanishes at n=" + std::to_string(n) + " t=" + std::to_string(t));
  }
  out.var_omega_T = t * (1.0 - out.px * out.px) / (out.dpx_domega * out.dpx_domega);
  return out;
}

double biased_precision(std::size_t n, const NoiseModel& model, double omega, double t,
                        double visibility) {
  const FringeGeometry g = fringe_geometry(n, model, omega, t);
  const double contrast = visibility * visibility * std::exp(2.0 * g.log_amplitude);
  const double alpha = g.slope.real();
  const double beta = g.slope.imag();
  double information = contrast * beta * beta;
  if (1.0 - contrast > 1e-14) information += contrast * alpha * alpha / (1.0 - contrast);
  if (!(information > 1e-300)) return kInf;
  return t / information;
}

namespace {

double exact_objective(std::size_t n, const NoiseModel& model, double omega, double t,
                       double visibility) {
  try {
    return precision(n, model, omega, t, StencilConfig::analytic(), visibility).var_omega_T;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDivergentPrecision) return kInf;
    throw;
  }
}

// Fringe period in t near `t`, from the rate of change of the total parity phase.
double fringe_period(std::size_t n, const NoiseModel& model, double omega, double t) {
  const double dt = 1e-7 * std::max(t, 1e-3);
  const CoefficientSet lo = coefficients(model, omega, std::max(t - dt, 0.0));
  const CoefficientSet hi = coefficients(model, omega, t + dt);
  const cplx w_lo(lo.f + lo.b, lo.c);
  const cplx w_hi(hi.f + hi.b, hi.c);
  const double rate =
      static_cast<double>(n) * std::arg(w_hi / w_lo) / (t + dt - std::max(t - dt, 0.0));
  if (!(std::abs(rate) > 1e-12)) return kInf;
  return 2.0 * std::numbers::pi / std::abs(rate);
}

}  // namespace

BiasedOptimum optimize_biased_time(std::size_t n, const NoiseModel& model, double omega,
                                   const TimeSearch& search) {
  require_qubits(n);
  require_noise(model);
  const double t_max = 4.0 / model.gamma;
  std::vector<double> grid;
  if (search.hint && *search.hint > 0.0 && *search.hint < t_max) {
    grid = log_grid(*search.hint / 4.0, std::min(4.0 * *search.hint, t_max), 128);
  } else {
    grid = log_grid(1e-6 * t_max, t_max, 384);
  }
  auto objective = [&](double t) {
    return biased_precision(n, model, omega, t, search.visibility);
  };
  std::size_t best = 0;
  double best_value = kInf;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = objective(grid[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  if (!std::isfinite(best_value)) {
    throw Error(ErrorCode::kDivergentPrecision, "no informative interrogation time");
  }
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  const double tol = kTimeTolerance * std::min(1.0, grid[best]);
  const Minimum m = golden_section(objective, lo, hi, tol);
  if (m.value > best_value) return {grid[best], best_value};
  return {m.x, m.value};
}

TimeOptimum optimize_time(std::size_t n, const NoiseModel& model, double omega,
                          const TimeSearch& search) {
  require_qubits(n);
  require_noise(model);
  const double t_max = 4.0 / model.gamma;
  const double v = search.visibility;
  auto objective = [&](double t) { return exact_objective(n, model, omega, t, v); };

  Minimum best = grid_then_golden(objective, linear_grid(t_max, kTimeGridPoints), kTimeTolerance);

  // Resolve fast fringes around the envelope optimum.
  const BiasedOptimum envelope = optimize_biased_time(n, model, omega, search);
  const double period = fringe_period(n, model, omega, envelope.t);
  if (std::isfinite(period)) {
    const double lo = std::max(envelope.t - 3.0 * period, 1e-3 * envelope.t);
    const double hi = std::min(envelope.t + 3.0 * period, t_max);
    if (hi > lo) {
      const std::size_t count = 288;
      std::vector<double> local(count);
      for (std::size_t i = 0; i < count; ++i) {
        local[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
      }
      const double tol = std::min(kTimeTolerance, 1e-5 * period);
      const Minimum fine = grid_then_golden(objective, local, tol);
      if (fine.value < best.value) best = fine;
    }
  }
  if (!std::isfinite(best.value)) {
    throw Error(ErrorCode::kDivergentPrecision, "no informative interrogation time");
  }
  return {best.x, precision(n, model, omega, best.x, StencilConfig::analytic(), v), envelope.t};
}

GhzXState evolve_ghz_derivative(std::size_t n, const CoefficientSet& k,
                                const CoefficientDerivatives& dk) {
  require_qubits(n);
  // d(base^e) = e base^{e-1} d(base), zero for e = 0.
  auto dpow = [](cplx base, cplx dbase, std::size_t e) -> cplx {
    if (e == 0) return 0.0;
    return static_cast<double>(e) * ipow(base, e - 1) * dbase;
  };
  const cplx minus(k.b, -k.c);
  const cplx dminus(dk.db, -dk.dc);
  const cplx plus(k.b, k.c);
  const cplx dplus(dk.db, dk.dc);
  const cplx f(k.f);
  const cplx df(dk.df);

  GhzXState out{n, std::vector<double>(n + 1, 0.0), std::vector<cplx>(n + 1)};
  for (std::size_t m = 0; m <= n; ++m) {
    const cplx first = dpow(f, df, m) * ipow(minus, n - m) + ipow(f, m) * dpow(minus, dminus, n - m);
    const cplx second = dpow(f, df, n - m) * ipow(plus, m) + ipow(f, n - m) * dpow(plus, dplus, m);
    out.anti[m] = 0.5 * (first + second);
  }
  return out;
}

double qfi_from_derivative(const CMat& rho, const CMat& drho) {
  const HermEigen eig = herm_eig(rho);
  const CMat d = eig.vectors.adjoint() * drho * eig.vectors;
  double acc = 0.0;
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    for (std::size_t j = 0; j < eig.values.size(); ++j) {
      const double sum = std::max(eig.values[i], 0.0) + std::max(eig.values[j], 0.0);
      if (sum <= kEigenClamp) continue;
      acc += std::norm(d(i, j)) / sum;
    }
  }
  return 2.0 * acc;
}

double qfi_frequency(std::size_t n, const NoiseModel& model, double omega, double t) {
  require_qubits(n);
  const CoefficientSet k = coefficients(model, omega, t);
  const CoefficientDerivatives dk = coefficient_derivatives(model, omega, t);
  const std::vector<XBlock> state = blocks(evolve_ghz(n, k));
  const std::vector<XBlock> slope = blocks(evolve_ghz_derivative(n, k, dk));
  double acc = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i].multiplicity == 0) continue;
    acc += static_cast<double>(state[i].multiplicity) *
           qfi_from_derivative(state[i].block, slope[i].block);
  }
  return acc;
}

double qfi_frequency_dense(std::size_t n, const NoiseModel& model, double omega, double t) {
  const CoefficientSet k = coefficients(model, omega, t);
  const CoefficientDerivatives dk = coefficient_derivatives(model, omega, t);
  return qfi_from_derivative(expand(evolve_ghz(n, k)), expand(evolve_ghz_derivative(n, k, dk)));
}

double crb_precision(std::size_t n, const NoiseModel& model, double omega, double t) {
  const double f = qfi_frequency(n, model, omega, t);
  if (!(f > 1e-300)) throw Error(ErrorCode::kZeroInformation, "QFI vanishes");
  return t / f;
}

BiasedOptimum optimize_qfi_time(std::size_t n, const NoiseModel& model, double omega) {
  require_qubits(n);
  require_noise(model);
  auto objective = [&](double t) {
    try {
      return crb_precision(n, model, omega, t);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kZeroInformation) return kInf;
      throw;
    }
  };
  const Minimum m =
      grid_then_golden(objective, linear_grid(4.0 / model.gamma, kTimeGridPoints), kTimeTolerance);
  return {m.x, m.value};
}

ReferenceBounds sql_hl_bounds(std::size_t n, double single_qubit_optimum) {
  require_qubits(n);
  const double nd = static_cast<double>(n);
  return {single_qubit_optimum / nd, single_qubit_optimum / (nd * nd)};
}

ReferenceBounds sql_hl_bounds(std::size_t n, const NoiseModel& model, double omega) {
  return sql_hl_bounds(n, optimize_time(1, model, omega).point.var_omega_T);
}

double fisher_per_qubit(const MetrologyPoint& point) {
  if (!(point.var_omega_T > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "precision must be positive");
  }
  return 1.0 / (static_cast<double>(point.n) * point.var_omega_T);
}

GhzXState add_white_noise(const GhzXState& x, const WhiteNoiseConfig& cfg) {
  cfg.validate();
  const double v = cfg.v_add;
  const double floor = (1.0 - v) * std::ldexp(1.0, -static_cast<int>(x.n));
  GhzXState out = x;
  for (std::size_t m = 0; m <= x.n; ++m) {
    out.diag[m] = v * x.diag[m] + floor;
    out.anti[m] = v * x.anti[m];
  }
  return out;
}

double x_state_parity(const GhzXState& x) {
  double acc = 0.0;
  for (std::size_t m = 0; m <= x.n; ++m) acc += binomial(x.n, m) * x.anti[m].real();
  return acc;
}

CMat parity_operator(std::size_t n) { return kron_power(pauli::x(), n); }

}  // namespace ghzmet
