// Copyright 2026 The mucb developers
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

#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "mucb/qudit_mub.hpp"
#include "oracles.hpp"

using mucb::BasisLabel;
using mucb::QuadraticPhase;
using std::numbers::pi;

namespace {

std::complex<double> omega(std::int64_t d) {
  return std::polar(1.0, 2.0 * pi / static_cast<double>(d));
}

}  // namespace

TEST_CASE("clock operator") {
  const auto z2 = mucb::pauli_z(2);
  CHECK(std::abs(z2(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(z2(1, 1) + 1.0) < 1e-15);

  const auto z3 = mucb::pauli_z(3);
  CHECK(std::abs(z3(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(z3(1, 1) - std::polar(1.0, 2.0 * pi / 3.0)) < 1e-15);
  CHECK(std::abs(z3(2, 2) - std::polar(1.0, 4.0 * pi / 3.0)) < 1e-15);
  CHECK(z3(0, 1) == 0.0);

  // Z^d = identity, via the direct matrix-power oracle.
  CHECK((oracles::matrix_power(z3, 3) - Eigen::MatrixXcd::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("shift operator") {
  Eigen::MatrixXcd flip(2, 2);
  flip << 0, 1, 1, 0;
  CHECK((mucb::pauli_x(2) - flip).cwiseAbs().maxCoeff() < 1e-15);

  const auto x3 = mucb::pauli_x(3);
  Eigen::VectorXcd e2 = Eigen::VectorXcd::Zero(3);
  e2(2) = 1.0;
  const Eigen::VectorXcd shifted = x3 * e2;
  CHECK(std::abs(shifted(0) - 1.0) < 1e-15);  // X|2> = |0>

  CHECK((oracles::matrix_power(x3, 3) - Eigen::MatrixXcd::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("Weyl commutation of shift and clock") {
  // The matrix-multiply oracle settles the ordering: with X|n> = |n+1> and
  // Z = diag(omega^n), the relation reads Z X = omega X Z (equivalently
  // X Z = conj(omega) Z X).
  for (std::int64_t d : {3LL, 5LL}) {
    const auto x = mucb::pauli_x(d);
    const auto z = mucb::pauli_z(d);
    CHECK((z * x - omega(d) * x * z).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((x * z - std::conj(omega(d)) * z * x).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("xz_power matches the explicit product") {
  for (std::int64_t d : {3LL, 5LL, 7LL}) {
    for (std::int64_t b = 0; b < d; ++b) {
      const Eigen::MatrixXcd direct = mucb::xz_power(d, b);
      const Eigen::MatrixXcd product =
          mucb::pauli_x(d) * oracles::matrix_power(mucb::pauli_z(d), b);
      CHECK((direct - product).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("mub_state basics") {
  const auto flat = mucb::mub_state(3, 0, 0);
  for (int n = 0; n < 3; ++n) {
    CHECK(std::abs(flat.amplitudes()(n) - 1.0 / std::sqrt(3.0)) < 1e-14);
  }

  CHECK_THROWS_AS(mucb::mub_state(4, 0, 0), mucb::NonPrimeDimension);
  CHECK_THROWS_AS(mucb::mub_state(2, 0, 0), mucb::TwoIsZero);
}

TEST_CASE("b=0 states are shift eigenvectors with eigenvalue omega^m") {
  // Shift-reindex oracle: X sum omega^(-nm)|n> = omega^m sum omega^(-nm)|n>.
  const auto x = mucb::pauli_x(3);
  for (std::int64_t m = 0; m < 3; ++m) {
    const auto v = mucb::mub_state(3, 0, m).amplitudes();
    const std::complex<double> expected =
        std::polar(1.0, 2.0 * pi * static_cast<double>(m) / 3.0);
    CHECK((x * v - expected * v).norm() < 1e-14);
  }
}

TEST_CASE("mub states satisfy the X Z^b eigen-equation") {
  // d=5, b=2, m=1 from the eigen-residual oracle, then the full sweep.
  {
    const auto v = mucb::mub_state(5, 2, 1).amplitudes();
    const auto res = oracles::eigen_residual(mucb::xz_power(5, 2), v);
    CHECK(res.residual < 1e-10);
    CHECK(std::abs(std::abs(res.eigenvalue) - 1.0) < 1e-10);
  }
  for (std::int64_t d : {3LL, 5LL, 7LL}) {
    for (std::int64_t b = 0; b < d; ++b) {
      const auto op = mucb::xz_power(d, b);
      for (std::int64_t m = 0; m < d; ++m) {
        for (auto phase :
             {QuadraticPhase::n_minus_one, QuadraticPhase::n_plus_one}) {
          const auto v = mucb::mub_state(d, b, m, phase).amplitudes();
          const auto res = oracles::eigen_residual(op, v);
          CHECK(res.residual < 1e-10);
          CHECK(std::abs(std::abs(res.eigenvalue) - 1.0) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("the two quadratic phase conventions relabel the same basis") {
  // omega^((b/2)n(n+1) - nm) = omega^((b/2)n(n-1) - n(m-b)).
  for (std::int64_t m = 0; m < 5; ++m) {
    const auto plus = mucb::mub_state(5, 3, m, QuadraticPhase::n_plus_one);
    const auto minus =
        mucb::mub_state(5, 3, (m - 3 + 5) % 5, QuadraticPhase::n_minus_one);
    CHECK((plus.amplitudes() - minus.amplitudes()).norm() < 1e-14);
  }
}

TEST_CASE("full MUB set has d+1 bases") {
  CHECK(mucb::full_mub_set(3).size() == 4);
  CHECK(mucb::full_mub_set(7).size() == 8);
  CHECK_THROWS_AS(mucb::full_mub_set(6), mucb::NonPrimeDimension);
  CHECK_THROWS_AS(mucb::full_mub_set(2), mucb::TwoIsZero);
}

TEST_CASE("each basis is orthonormal and complete") {
  for (std::int64_t d : {3LL, 5LL, 7LL}) {
    for (const auto& basis : mucb::full_mub_set(d)) {
      std::vector<Eigen::VectorXcd> vecs;
      for (const auto& state : basis.vectors()) {
        vecs.push_back(state.amplitudes());
      }
      CHECK((oracles::gram(vecs) - Eigen::MatrixXcd::Identity(d, d))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
      // Completeness: sum |m;b><m;b| = identity.
      Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
      for (const auto& v : vecs) sum += v * v.adjoint();
      CHECK((sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() <
            1e-10);
    }
  }
}

TEST_CASE("pairwise unbiasedness") {
  for (std::int64_t d : {3LL, 5LL}) {
    const auto bases = mucb::full_mub_set(d);
    for (std::size_t i = 0; i < bases.size(); ++i) {
      for (std::size_t j = i + 1; j < bases.size(); ++j) {
        const auto check = mucb::verify_unbiased(bases[i], bases[j]);
        CHECK(check.unbiased);
        CHECK(check.max_deviation < 1e-10);
      }
    }
  }
}

TEST_CASE("a basis is not unbiased against itself") {
  const auto basis = mucb::mub_basis(3, 0);
  const auto check = mucb::verify_unbiased(basis, basis);
  CHECK_FALSE(check.unbiased);
}

TEST_CASE("computational vs b=0 overlaps are exactly uniform") {
  const auto bases = mucb::full_mub_set(5);
  const auto check = mucb::verify_unbiased(bases[0], bases[1]);
  CHECK(check.unbiased);
  for (const auto& comp : bases[0].vectors()) {
    for (const auto& v : bases[1].vectors()) {
      CHECK(std::abs(std::abs(comp.amplitudes().dot(v.amplitudes())) -
                     1.0 / std::sqrt(5.0)) < 1e-14);
    }
  }
}

TEST_CASE("verify_unbiased rejects mismatched dimensions") {
  CHECK_THROWS_AS(
      mucb::verify_unbiased(mucb::mub_basis(3, 0), mucb::mub_basis(5, 0)),
      mucb::DimensionMismatch);
}

TEST_CASE("basis labels") {
  CHECK(BasisLabel::computational().str() == "comp");
  CHECK(BasisLabel::xz(4).str() == "4");
  CHECK(BasisLabel::parse("comp") == BasisLabel::computational());
  CHECK(BasisLabel::parse("computational") == BasisLabel::computational());
  CHECK(BasisLabel::parse("2") == BasisLabel::xz(2));
  CHECK_THROWS_AS(BasisLabel::parse("-1"), std::invalid_argument);
  CHECK_THROWS_AS(BasisLabel::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(BasisLabel::computational().b(), std::logic_error);
}
