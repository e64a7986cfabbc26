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

#include "mucb/gaussian_cv.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mucb {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix2d mode_rotation(double theta) {
  Eigen::Matrix2d r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

// Particle-frame matrix of a rotation by (theta, theta_prime) in the
// collective frame.
Eigen::Matrix4d collective_rotation(double theta, double theta_prime) {
  Eigen::Matrix4d rc = Eigen::Matrix4d::Zero();
  rc.topLeftCorner<2, 2>() = mode_rotation(theta);
  rc.bottomRightCorner<2, 2>() = mode_rotation(theta_prime);
  const Eigen::Matrix4d s = collective_map().matrix();
  return s.transpose() * rc * s;
}

long double det2(long double a, long double b, long double c, long double d) {
  return a * d - b * c;
}

// 4x4 determinant by Laplace expansion over complementary 2x2 minors of the
// row pairs (0,1) and (2,3). Unlike a generic cofactor evaluation this keeps
// the mode-block structure: for (near-)block-diagonal input it reduces to
// detA*detB plus products of tiny cross minors, with no large-term
// cancellation. That matters at the degenerate product points, where the
// discriminant below must vanish to ~1e-18 for the negativity to come out
// clean.
long double det4_by_minors(const Eigen::Matrix<long double, 4, 4>& c) {
  auto top = [&](int i, int j) {
    return det2(c(0, i), c(0, j), c(1, i), c(1, j));
  };
  auto bottom = [&](int i, int j) {
    return det2(c(2, i), c(2, j), c(3, i), c(3, j));
  };
  return top(0, 1) * bottom(2, 3) - top(0, 2) * bottom(1, 3) +
         top(0, 3) * bottom(1, 2) + top(1, 2) * bottom(0, 3) -
         top(1, 3) * bottom(0, 2) + top(2, 3) * bottom(0, 1);
}

// Smallest symplectic eigenvalue of the partial transpose, computed from the
// two-mode symplectic invariants in extended precision. The c^4-sized
// cancellations in det(cov) at large squeezing would cost ~1e-9 in double.
long double min_pt_symplectic_eigenvalue(const Eigen::Matrix4d& cov) {
  using M4 = Eigen::Matrix<long double, 4, 4>;
  M4 c = cov.cast<long double>();
  // Partial transpose: flip the sign of p2.
  for (int i = 0; i < 4; ++i) {
    c(i, 3) = -c(i, 3);
    c(3, i) = -c(3, i);
  }
  const long double det_a = det2(c(0, 0), c(0, 1), c(1, 0), c(1, 1));
  const long double det_b = det2(c(2, 2), c(2, 3), c(3, 2), c(3, 3));
  const long double det_c = det2(c(0, 2), c(0, 3), c(1, 2), c(1, 3));
  const long double det_cov = det4_by_minors(c);

  const long double delta = det_a + det_b + 2.0L * det_c;
  long double disc = delta * delta - 4.0L * det_cov;
  if (disc < 0.0L) disc = 0.0L;
  // nu^2 = (delta - sqrt(disc)) / 2, in the cancellation-free form.
  const long double denom = delta + std::sqrt(disc);
  const long double nu_sq = denom > 0.0L ? 2.0L * det_cov / denom : 0.0L;
  return std::sqrt(std::max(nu_sq, 0.0L));
}

}  // namespace

Eigen::Matrix4d omega_matrix() {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  return omega;
}

GaussianState::GaussianState(const Eigen::Matrix4d& cov,
                             const Eigen::Vector4d& mean)
    : mean_(mean) {
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("covariance matrix is not symmetric");
  }
  cov_ = 0.5 * (cov + cov.transpose());

  Eigen::Matrix4cd heisenberg =
      cov_.cast<std::complex<double>>() +
      std::complex<double>(0.0, 0.5) * omega_matrix().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(heisenberg);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -1e-10) throw UnphysicalCovariance(min_eig);
}

GaussianState GaussianState::vacuum() {
  return GaussianState(0.5 * Eigen::Matrix4d::Identity());
}

SymplecticMap::SymplecticMap(const Eigen::Matrix4d& matrix) : matrix_(matrix) {
  const Eigen::Matrix4d omega = omega_matrix();
  const Eigen::Matrix4d residual =
      matrix_.transpose() * omega * matrix_ - omega;
  if (residual.cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("matrix is not symplectic");
  }
}

SymplecticMap collective_map() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4d m;
  // Rows: xi, nu, eta, mu.
  m << s, 0, -s, 0,
       0, s, 0, -s,
       s, 0, s, 0,
       0, s, 0, s;
  return SymplecticMap(m);
}

GaussianState rotate_collective(const GaussianState& state, double theta,
                                double theta_prime) {
  const Eigen::Matrix4d m = collective_rotation(theta, theta_prime);
  return GaussianState(m * state.cov() * m.transpose(), m * state.mean());
}

GaussianState regularized_mucb_state(double r, double theta,
                                     double theta_prime) {
  if (r < 0.0) throw std::invalid_argument("squeezing parameter must be >= 0");
  const double a = std::exp(-2.0 * r);
  Eigen::Matrix2d squeezed;
  squeezed << 0.5 * a, 0.0, 0.0, 0.5 / a;

  Eigen::Matrix4d cov_collective = Eigen::Matrix4d::Zero();
  const Eigen::Matrix2d ra = mode_rotation(theta);
  const Eigen::Matrix2d rb = mode_rotation(theta_prime);
  cov_collective.topLeftCorner<2, 2>() = ra * squeezed * ra.transpose();
  cov_collective.bottomRightCorner<2, 2>() = rb * squeezed * rb.transpose();

  const Eigen::Matrix4d s = collective_map().matrix();
  return GaussianState(s.transpose() * cov_collective * s);
}

double log_negativity(const GaussianState& state) {
  const long double nu = min_pt_symplectic_eigenvalue(state.cov());
  if (nu <= 0.0L) throw UnphysicalCovariance(0.0);
  const long double en = -std::log(2.0L * nu);
  return en > 0.0L ? static_cast<double>(en) : 0.0;
}

bool is_product(const GaussianState& state, double tol) {
  return state.cov().topRightCorner<2, 2>().cwiseAbs().maxCoeff() < tol;
}

double mean_photon_number(const GaussianState& state) {
  return 0.5 * ((state.cov().trace() - 2.0) + state.mean().squaredNorm());
}

AngleLabelPair::AngleLabelPair(double t, double tp) : theta(t), theta_prime(tp) {
  const double two_pi = 2.0 * kPi;
  theta = std::fmod(theta, two_pi);
  if (theta < 0.0) theta += two_pi;
  theta_prime = std::fmod(theta_prime, two_pi);
  if (theta_prime < 0.0) theta_prime += two_pi;
}

std::complex<double> quadrature_kernel(double x, double y, double theta) {
  const double s = std::sin(theta);
  if (std::abs(s) <= 1e-8) throw SingularAngle(theta);
  const double c = std::cos(theta);
  const std::complex<double> prefactor =
      1.0 / std::sqrt(std::complex<double>(2.0 * kPi * s, 0.0));
  const double phase = -((x * x + y * y) * c - 2.0 * x * y) / (2.0 * s);
  return prefactor * std::polar(1.0, phase);
}

KernelCheckResult kernel_composition_check(double theta1, double theta2,
                                           const KernelCheckParams& params) {
  if (std::abs(std::sin(theta1)) <= 1e-8) throw SingularAngle(theta1);
  if (std::abs(std::sin(theta2)) <= 1e-8) throw SingularAngle(theta2);
  if (std::abs(std::sin(theta1 + theta2)) <= 1e-8) {
    throw SingularAngle(theta1 + theta2);
  }

  KernelCheckResult result;
  result.theta1 = theta1;
  result.theta2 = theta2;
  result.grid_points = params.grid_points;
  result.grid_halfwidth = params.grid_halfwidth;
  result.regulator_epsilon = params.regulator_epsilon;

  const int n = params.grid_points;
  const double l = params.grid_halfwidth;
  const double h = 2.0 * l / static_cast<double>(n - 1);

  const auto& samples = params.sample_values;
  const std::size_t m = samples.size();
  std::vector<std::complex<double>> composed(m * m);
  std::vector<std::complex<double>> target(m * m);

  for (std::size_t ix = 0; ix < m; ++ix) {
    for (std::size_t iz = 0; iz < m; ++iz) {
      const double x = samples[ix];
      const double z = samples[iz];
      std::complex<double> acc = 0.0;
      for (int i = 0; i < n; ++i) {
        const double y = -l + h * static_cast<double>(i);
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        const double damp = std::exp(-params.regulator_epsilon * y * y);
        acc += w * damp * quadrature_kernel(x, y, theta1) *
               quadrature_kernel(y, z, theta2);
      }
      composed[ix * m + iz] = acc * h;
      target[ix * m + iz] = quadrature_kernel(x, z, theta1 + theta2);
    }
  }

  // The composition law holds up to one constant (metaplectic) phase; fit it
  // once across all samples, then measure pointwise relative deviations.
  std::complex<double> corr = 0.0;
  for (std::size_t k = 0; k < m * m; ++k) {
    corr += composed[k] * std::conj(target[k]);
  }
  result.phase_offset = std::arg(corr);
  const std::complex<double> align = std::polar(1.0, result.phase_offset);
  for (std::size_t k = 0; k < m * m; ++k) {
    const double rel =
        std::abs(composed[k] - align * target[k]) / std::abs(target[k]);
    result.max_rel_error = std::max(result.max_rel_error, rel);
  }
  return result;
}

std::vector<CvSweepRow> cv_sweep(const std::vector<double>& r_values,
                                 const std::vector<double>& angles,
                                 double product_tol) {
  std::vector<CvSweepRow> rows;
  rows.reserve(r_values.size() * angles.size() * angles.size());
  for (double r : r_values) {
    for (double theta : angles) {
      for (double theta_prime : angles) {
        const GaussianState state =
            regularized_mucb_state(r, theta, theta_prime);
        rows.push_back(CvSweepRow{r, AngleLabelPair(theta, theta_prime),
                                  log_negativity(state),
                                  is_product(state, product_tol)});
      }
    }
  }
  return rows;
}

}  // namespace mucb
