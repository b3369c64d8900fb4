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

#include "ghzmet/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ghzmet {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(out);
}

cplx ipow(cplx x, std::size_t k) {
  cplx out = 1.0;
  while (k > 0) {
    if (k & 1U) out *= x;
    x *= x;
    k >>= 1U;
  }
  return out;
}

double ipow(double x, std::size_t k) {
  double out = 1.0;
  while (k > 0) {
    if (k & 1U) out *= x;
    x *= x;
    k >>= 1U;
  }
  return out;
}

namespace {

void require_dense(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "qubit count must be >= 1");
  if (n > kMaxDenseQubits) {
    throw Error(ErrorCode::kTooLarge, std::to_string(n) + " qubits exceeds dense limit");
  }
}

std::size_t popcount(std::size_t x) { return static_cast<std::size_t>(__builtin_popcountll(x)); }

}  // namespace

std::vector<cplx> ghz_vector(std::size_t n, Basis basis) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "qubit count must be >= 1");
  if (n > 20) throw Error(ErrorCode::kTooLarge, "state vector above 20 qubits");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<cplx> psi(dim);
  const double amp = 1.0 / std::sqrt(2.0);
  if (basis == Basis::kComputational) {
    psi.front() = amp;
    psi.back() = amp;
    return psi;
  }
  // H^{(x) n}|0..0> is uniform; H^{(x) n}|1..1> carries (-1)^{|x|}.
  const double norm = amp / std::sqrt(static_cast<double>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    psi[x] = (popcount(x) % 2 == 0) ? 2.0 * norm : 0.0;
  }
  return psi;
}

CMat ghz(std::size_t n, Basis basis) {
  require_dense(n);
  return CMat::projector(ghz_vector(n, basis));
}

double GhzXState::trace() const {
  double acc = 0.0;
  for (std::size_t m = 0; m <= n; ++m) acc += binomial(n, m) * diag[m];
  return acc;
}

double GhzXState::invariant_residue() const {
  double worst = std::abs(trace() - 1.0);
  for (std::size_t m = 0; m <= n; ++m) {
    worst = std::max(worst, std::abs(diag[m] - diag[n - m]));
    worst = std::max(worst, std::abs(anti[m] - std::conj(anti[n - m])));
    // Smaller eigenvalue of [[d_m, a_m], [conj a_m, d_{n-m}]].
    const double mean = 0.5 * (diag[m] + diag[n - m]);
    const double half_gap = std::hypot(0.5 * (diag[m] - diag[n - m]), std::abs(anti[m]));
    worst = std::max(worst, -(mean - half_gap));
  }
  return worst;
}

GhzXState evolve_ghz(std::size_t n, const CoefficientSet& k) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "qubit count must be >= 1");
  GhzXState out{n, std::vector<double>(n + 1), std::vector<cplx>(n + 1)};
  const cplx minus(k.b, -k.c);
  const cplx plus(k.b, k.c);
  for (std::size_t m = 0; m <= n; ++m) {
    out.diag[m] = 0.5 * (ipow(k.d, m) * ipow(k.a, n - m) + ipow(k.d, n - m) * ipow(k.a, m));
    out.anti[m] = 0.5 * (ipow(k.f, m) * ipow(minus, n - m) + ipow(k.f, n - m) * ipow(plus, m));
  }
  return out;
}

CMat expand(const GhzXState& x) {
  require_dense(x.n);
  const std::size_t dim = std::size_t{1} << x.n;
  const std::size_t mask = dim - 1;
  CMat out(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) {
    const std::size_t m = popcount(s);
    out(s, s) = x.diag[m];
    out(s, s ^ mask) = x.anti[m];
  }
  return out;
}

CMat apply_single_qubit_channel(const CMat& rho, const KrausSet& k, std::size_t qubit,
                                std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  if (rho.rows() != dim || rho.cols() != dim || qubit >= n) {
    throw Error(ErrorCode::kInvalidArgument, "state does not match qubit count");
  }
  const std::size_t shift = n - 1 - qubit;
  const std::size_t bit = std::size_t{1} << shift;
  CMat out(dim, dim);
  for (std::size_t i = 0; i < 4; ++i) {
    const double p = k.probs[i];
    if (p == 0.0) continue;
    const CMat& op = k.ops[i];
    for (std::size_t r = 0; r < dim; ++r) {
      const std::size_t rq = (r >> shift) & 1U;
      const std::size_t r0 = r & ~bit;
      for (std::size_t c = 0; c < dim; ++c) {
        const std::size_t cq = (c >> shift) & 1U;
        const std::size_t c0 = c & ~bit;
        cplx acc = 0.0;
        for (std::size_t a = 0; a < 2; ++a) {
          const cplx left = op(rq, a);
          if (left == cplx{}) continue;
          for (std::size_t b = 0; b < 2; ++b) {
            const cplx right = std::conj(op(cq, b));
            if (right == cplx{}) continue;
            acc += left * rho(r0 | (a << shift), c0 | (b << shift)) * right;
          }
        }
        out(r, c) += p * acc;
      }
    }
  }
  return out;
}

CMat apply_product_channel(const CMat& rho, const KrausSet& k, std::size_t n) {
  require_dense(n);
  // E^{(x) n} factorizes into n commuting single-qubit applications.
  CMat out = rho;
  for (std::size_t q = 0; q < n; ++q) out = apply_single_qubit_channel(out, k, q, n);
  return out;
}

std::vector<XBlock> blocks(const GhzXState& x) {
  if (x.n > 62) throw Error(ErrorCode::kTooLarge, "block multiplicities overflow above 62 qubits");
  std::vector<XBlock> out;
  const std::size_t n = x.n;
  for (std::size_t m = 0; 2 * m < n; ++m) {
    XBlock b;
    b.weight = m;
    b.block = CMat{{x.diag[m], x.anti[m]}, {std::conj(x.anti[m]), x.diag[n - m]}};
    b.multiplicity = static_cast<std::uint64_t>(binomial(n, m));
    out.push_back(std::move(b));
  }
  if (n % 2 == 0) {
    const std::size_t m = n / 2;
    XBlock b;
    b.weight = m;
    b.block = CMat{{x.diag[m], x.anti[m]}, {std::conj(x.anti[m]), x.diag[m]}};
    b.multiplicity = static_cast<std::uint64_t>(binomial(n, m)) / 2;
    out.push_back(std::move(b));
  }
  return out;
}

double fidelity_pure(const CMat& rho, const CMat& psi) {
  const cplx overlap = trace_product(rho, psi);
  if (std::abs(overlap.imag()) > 1e-10) {
    throw Error(ErrorCode::kNonRealResult, "fidelity has imaginary part");
  }
  return overlap.real();
}

WitnessG6 WitnessG6::build() {
  constexpr std::size_t kQubits = 6;
  constexpr std::size_t kDim = std::size_t{1} << kQubits;
  WitnessG6 w;
  w.a = CMat(kDim, kDim);
  w.a(0, 0) = 1.0;
  w.a(kDim - 1, kDim - 1) = 1.0;
  for (int k = 0; k < 6; ++k) {
    const double angle = k * std::numbers::pi / 6.0;
    const CMat axis = pauli::x() * cplx(std::cos(angle)) + pauli::y() * cplx(std::sin(angle));
    w.settings.push_back(kron_power(axis, kQubits));
  }
  return w;
}

CMat WitnessG6::assemble() const {
  CMat out = a * cplx(0.5);
  for (std::size_t k = 0; k < settings.size(); ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    out += settings[k] * cplx(sign / 12.0);
  }
  return out;
}

double WitnessG6::evaluate(const CMat& rho) const {
  if (rho.rows() != a.rows() || rho.cols() != a.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "witness expects a 64x64 state");
  }
  cplx acc = 0.5 * trace_product(a, rho);
  for (std::size_t k = 0; k < settings.size(); ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    acc += (sign / 12.0) * trace_product(settings[k], rho);
  }
  return acc.real();
}

double witness_g6(const CMat& rho) {
  static const WitnessG6 witness = WitnessG6::build();
  return witness.evaluate(rho);
}

}  // namespace ghzmet
