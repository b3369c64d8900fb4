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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "ghzmet/channel.hpp"
#include "ghzmet/error.hpp"
#include "ghzmet/states.hpp"
#include "oracles.hpp"

using namespace ghzmet;
using oracle::error_code_of;

namespace {

double off_x_residue(const CMat& rho) {
  const std::size_t dim = rho.rows();
  double worst = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (r == c || r + c == dim - 1) continue;
      worst = std::max(worst, std::abs(rho(r, c)));
    }
  }
  return worst;
}

double min_eigenvalue(const CMat& rho) { return herm_eig(rho).values.front(); }

std::vector<double> block_spectrum(const GhzXState& x) {
  std::vector<double> out;
  for (const XBlock& b : blocks(x)) {
    const HermEigen e = herm_eig(b.block);
    for (std::uint64_t k = 0; k < b.multiplicity; ++k) out.insert(out.end(), e.values.begin(), e.values.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const NoiseModel kTransversal = NoiseModel::transversal(1.0);

}  // namespace

TEST_CASE("ghz: single qubit is |+>") {
  const CMat g = ghz(1, Basis::kComputational);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) CHECK(std::abs(g(r, c) - 0.5) <= 1e-15);
  }
}

TEST_CASE("ghz: four corner entries of 1/2 for n = 4") {
  const CMat g = ghz(4, Basis::kComputational);
  int nonzero = 0;
  for (const cplx& v : g.entries()) {
    if (std::abs(v) > 1e-15) {
      ++nonzero;
      CHECK(std::abs(v) == doctest::Approx(0.5));
    }
  }
  CHECK(nonzero == 4);
  CHECK(std::abs(g(0, 15) - 0.5) <= 1e-15);
}

TEST_CASE("ghz: hadamard basis is the rotated computational state") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const CMat h = kron_power(pauli::hadamard(), n);
    CHECK(max_abs_diff(ghz(n, Basis::kHadamard), h * ghz(n, Basis::kComputational) * h) <= 1e-14);
  }
}

TEST_CASE("ghz: size limits") {
  CHECK(error_code_of([] { ghz(7, Basis::kComputational); }) == ErrorCode::kTooLarge);
  CHECK(error_code_of([] { ghz(0, Basis::kComputational); }) == ErrorCode::kInvalidArgument);
  CHECK(ghz_vector(20, Basis::kComputational).size() == (std::size_t{1} << 20));
}

TEST_CASE("evolve_ghz at t = 0 recovers the GHZ corners") {
  const CoefficientSet c = coefficients(kTransversal, 1.0, 0.0);
  for (std::size_t n = 1; n <= 8; ++n) {
    const GhzXState x = evolve_ghz(n, c);
    for (std::size_t m = 0; m <= n; ++m) {
      const double expect = (m == 0 || m == n) ? 0.5 : 0.0;
      CHECK(x.diag[m] == doctest::Approx(n == 1 && m <= 1 ? 0.5 : expect));
      CHECK(std::abs(x.anti[m] - cplx(expect)) <= 1e-15);
    }
  }
}

TEST_CASE("evolve_ghz: noiseless evolution keeps |anti[0]| = 1/2") {
  const double t = 0.37;
  const GhzXState x = evolve_ghz(4, coefficients(NoiseModel::noiseless(), 1.0, t));
  const cplx expect = 0.5 * std::pow(cplx(std::cos(t), std::sin(t)), 4);
  // anti[0] pairs |0000> with |1111>; the sign of the phase follows the row state.
  CHECK(std::abs(std::abs(x.anti[0]) - 0.5) <= 1e-14);
  CHECK(std::abs(x.anti[0] - std::conj(expect)) <= 1e-14);
}

TEST_CASE("evolve_ghz invariants") {
  for (const NoiseModel& m : {kTransversal, NoiseModel::parallel(1.0), NoiseModel{1.0, 0.5, 0.3, 0.2}}) {
    for (std::size_t n : {1u, 2u, 3u, 5u, 10u, 31u}) {
      for (double t : {0.1, 0.5, 1.2, 3.0}) {
        const GhzXState x = evolve_ghz(n, coefficients(m, 1.0, t));
        CHECK(std::abs(x.trace() - 1.0) <= 1e-10);
        CHECK(x.invariant_residue() <= 1e-12);
        for (std::size_t k = 0; k <= n; ++k) {
          CHECK(x.diag[k] == doctest::Approx(x.diag[n - k]));
          CHECK(std::abs(x.anti[k] - std::conj(x.anti[n - k])) <= 1e-14);
        }
      }
    }
  }
}

TEST_CASE("expand matches the brute-force product channel") {
  struct Case {
    std::size_t n;
    double t;
  };
  for (const Case& cs : {Case{1, 1.549}, Case{2, 0.7745}, Case{3, 0.5684}, Case{4, 0.4650}}) {
    for (const NoiseModel& m : {kTransversal, NoiseModel::parallel(1.0), NoiseModel{1.0, 0.5, 0.3, 0.2}}) {
      const CoefficientSet c = coefficients(m, 1.0, cs.t);
      const CMat brute = oracle::brute_force_product_channel(ghz(cs.n, Basis::kComputational), kraus(c), cs.n);
      CHECK(max_abs_diff(expand(evolve_ghz(cs.n, c)), brute) <= 1e-9);
    }
  }
}

TEST_CASE("expand: Bell projector at t = 0") {
  const CMat x = expand(evolve_ghz(2, coefficients(kTransversal, 1.0, 0.0)));
  CHECK(max_abs_diff(x, ghz(2, Basis::kComputational)) <= 1e-15);
}

TEST_CASE("expand gives valid density matrices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (double t : {0.2, 0.9, 2.5}) {
      const CMat rho = expand(evolve_ghz(n, coefficients(NoiseModel{1.3, 0.6, 0.1, 0.3}, 0.8, t)));
      CHECK(hermiticity_residue(rho) <= 1e-14);
      CHECK(std::abs(rho.trace() - 1.0) <= 1e-10);
      CHECK(min_eigenvalue(rho) >= -1e-10);
    }
  }
  GhzXState big;
  big.n = 7;
  CHECK(error_code_of([&] { expand(big); }) == ErrorCode::kTooLarge);
}

TEST_CASE("apply_product_channel: identity Kraus set leaves the state unchanged") {
  std::mt19937_64 rng(3);
  const CMat rho = oracle::random_density_matrix(8, rng);
  const KrausSet id = kraus(coefficients(kTransversal, 1.0, 0.0));
  CHECK(max_abs_diff(apply_product_channel(rho, id, 3), rho) <= 1e-15);
}

TEST_CASE("apply_product_channel: single qubit matches the S-matrix action") {
  std::mt19937_64 rng(5);
  const CoefficientSet c = coefficients(NoiseModel{1.0, 0.5, 0.3, 0.2}, 1.0, 0.6);
  const CMat rho = oracle::random_density_matrix(2, rng);
  CHECK(max_abs_diff(apply_product_channel(rho, kraus(c), 1), s_matrix(c).apply(rho)) <= 1e-10);
}

TEST_CASE("apply_product_channel agrees with 4^n enumeration on random states") {
  std::mt19937_64 rng(17);
  const KrausSet k = kraus(coefficients(NoiseModel{1.0, 0.5, 0.3, 0.2}, 1.0, 0.6));
  for (std::size_t n = 1; n <= 3; ++n) {
    const CMat rho = oracle::random_density_matrix(std::size_t{1} << n, rng);
    CHECK(max_abs_diff(apply_product_channel(rho, k, n), oracle::brute_force_product_channel(rho, k, n)) <=
          1e-12);
  }
}

TEST_CASE("apply_single_qubit_channel acts on the addressed qubit (qubit 0 = most significant)") {
  const CMat zero{{1.0, 0.0}, {0.0, 0.0}};
  const CMat rho = kron(zero, kron(zero, zero));
  KrausSet x;
  x.ops = {pauli::i2(), pauli::z(), pauli::x(), pauli::y()};
  x.probs = {0.0, 0.0, 1.0, 0.0};
  const CMat out = apply_single_qubit_channel(rho, x, 0, 3);
  CHECK(out(4, 4) == cplx(1.0));
}

TEST_CASE("product channel keeps X-structure and positivity") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const NoiseModel& m : {kTransversal, NoiseModel::parallel(1.0)}) {
      const CMat out = apply_product_channel(ghz(n, Basis::kComputational), kraus(coefficients(m, 1.0, 0.8)), n);
      CHECK(off_x_residue(out) <= 1e-10);
      CHECK(min_eigenvalue(out) >= -1e-10);
      CHECK(std::abs(out.trace() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("blocks: trace bookkeeping for n = 2") {
  const GhzXState x = evolve_ghz(2, coefficients(kTransversal, 1.0, 0.7));
  const auto bs = blocks(x);
  REQUIRE(bs.size() == 2);
  double trace = 0.0;
  for (const XBlock& b : bs) {
    CHECK(b.multiplicity == 1);
    trace += b.multiplicity * b.block.trace().real();
  }
  CHECK(trace == doctest::Approx(1.0));
}

TEST_CASE("blocks: n = 4 at t = 0") {
  const auto bs = blocks(evolve_ghz(4, coefficients(kTransversal, 1.0, 0.0)));
  REQUIRE(bs.size() == 3);
  CHECK(bs[0].weight == 0);
  CHECK(bs[0].multiplicity == 1);
  for (const cplx& v : bs[0].block.entries()) CHECK(std::abs(v - 0.5) <= 1e-15);
  CHECK(bs[1].multiplicity == 4);
  CHECK(bs[2].multiplicity == 3);
  for (std::size_t i = 1; i < 3; ++i) {
    for (const cplx& v : bs[i].block.entries()) CHECK(std::abs(v) <= 1e-15);
  }
}

TEST_CASE("blocks spectrum equals the full spectrum") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const NoiseModel& m : {kTransversal, NoiseModel{1.0, 0.5, 0.3, 0.2}}) {
      const GhzXState x = evolve_ghz(n, coefficients(m, 1.0, 0.65));
      const std::vector<double> blockwise = block_spectrum(x);
      const std::vector<double> full = herm_eig(expand(x)).values;
      REQUIRE(blockwise.size() == full.size());
      for (std::size_t i = 0; i < full.size(); ++i) CHECK(std::abs(blockwise[i] - full[i]) <= 1e-9);
    }
  }
}

TEST_CASE("blocks count total dimension for large n") {
  for (std::size_t n : {9u, 10u, 40u}) {
    const auto bs = blocks(evolve_ghz(n, coefficients(kTransversal, 1.0, 0.3)));
    double dim = 0.0;
    double trace = 0.0;
    for (const XBlock& b : bs) {
      dim += 2.0 * static_cast<double>(b.multiplicity);
      trace += static_cast<double>(b.multiplicity) * b.block.trace().real();
    }
    CHECK(dim == doctest::Approx(std::ldexp(1.0, static_cast<int>(n))));
    CHECK(trace == doctest::Approx(1.0));
  }
}

TEST_CASE("fidelity_pure examples") {
  const CMat psi = ghz(3, Basis::kComputational);
  CHECK(fidelity_pure(psi, psi) == doctest::Approx(1.0));
  const CMat mixed = CMat::identity(8) * cplx(1.0 / 8);
  CHECK(fidelity_pure(mixed, psi) == doctest::Approx(1.0 / 8));
  const double v = 0.37;
  CHECK(fidelity_pure(psi * cplx(v) + mixed * cplx(1 - v), psi) == doctest::Approx(v + (1 - v) / 8));
}

TEST_CASE("G6 witness decomposition") {
  const WitnessG6 w = WitnessG6::build();
  REQUIRE(w.settings.size() == 6);
  const CMat g6 = ghz(6, Basis::kComputational);
  CHECK(max_abs_diff(w.assemble(), g6) <= 1e-12);
  CHECK(witness_g6(g6) == doctest::Approx(1.0));
  CHECK(witness_g6(CMat::identity(64) * cplx(1.0 / 64)) == doctest::Approx(1.0 / 64));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 3; ++trial) {
    const CMat rho = oracle::random_density_matrix(64, rng);
    CHECK(std::abs(witness_g6(rho) - fidelity_pure(rho, g6)) <= 1e-10);
  }
}

TEST_CASE("binomial and integer powers") {
  CHECK(binomial(6, 3) == 20.0);
  CHECK(binomial(62, 31) == doctest::Approx(4.65428353255261e17));
  CHECK(binomial(3, 5) == 0.0);
  CHECK(ipow(0.0, 0) == 1.0);
  CHECK(ipow(cplx(0.0), 0) == cplx(1.0));
  CHECK(std::abs(ipow(cplx(0.3, 0.4), 7) - std::pow(cplx(0.3, 0.4), 7)) <= 1e-15);
}
