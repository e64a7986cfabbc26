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

#ifndef MUCB_GAUSSIAN_CV_HPP
#define MUCB_GAUSSIAN_CV_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "mucb/errors.hpp"

namespace mucb {

/// Standard symplectic form on (x1, p1, x2, p2): Omega = (+1 on (x,p),
/// -1 on (p,x)) per mode. Conventions: hbar = 1, a = (x + i p)/sqrt(2),
/// vacuum covariance I/2.
Eigen::Matrix4d omega_matrix();

/// Two-mode Gaussian state over quadratures (x1, p1, x2, p2): a real
/// symmetric covariance matrix plus a mean vector. Construction enforces
/// symmetry (1e-12) and the uncertainty relation cov + i*Omega/2 >= 0
/// (eigenvalues >= -1e-10); every operation below preserves both.
class GaussianState {
 public:
  GaussianState(const Eigen::Matrix4d& cov,
                const Eigen::Vector4d& mean = Eigen::Vector4d::Zero());

  static GaussianState vacuum();

  const Eigen::Matrix4d& cov() const { return cov_; }
  const Eigen::Vector4d& mean() const { return mean_; }

 private:
  Eigen::Matrix4d cov_;
  Eigen::Vector4d mean_;
};

/// Linear map of the quadrature vector with S^T Omega S = Omega (1e-10),
/// validated at construction.
class SymplecticMap {
 public:
  explicit SymplecticMap(const Eigen::Matrix4d& matrix);
  const Eigen::Matrix4d& matrix() const { return matrix_; }

 private:
  Eigen::Matrix4d matrix_;
};

/// The map (x1,p1,x2,p2) -> (xi, nu, eta, mu) onto relative and
/// center-of-mass quadratures:
///   xi = (x1-x2)/sqrt2, nu = (p1-p2)/sqrt2,
///   eta = (x1+x2)/sqrt2, mu = (p1+p2)/sqrt2.
/// Orthogonal and symplectic.
SymplecticMap collective_map();

/// Phase rotation by theta on the relative mode and theta_prime on the
/// center-of-mass mode, applied in the collective frame and conjugated back
/// to particle quadratures. Angles of 0 leave the state unchanged; pi flips
/// quadrature signs, leaving the covariance invariant.
GaussianState rotate_collective(const GaussianState& state, double theta,
                                double theta_prime);

/// Finite-squeezing stand-in for the ideal collective eigenstate
/// |xi,theta>|eta,theta'>: both collective modes position-squeezed by r,
/// then rotated by (theta, theta_prime), expressed in particle quadratures.
/// r = 0 is the vacuum; r -> infinity approaches the ideal eigenstate.
GaussianState regularized_mucb_state(double r, double theta,
                                     double theta_prime);

/// Logarithmic negativity E_N = max(0, -ln(2 nu)) from the smallest
/// symplectic eigenvalue nu of the partially transposed covariance matrix.
/// Zero iff the state is separable (two single modes, so PPT is exact).
double log_negativity(const GaussianState& state);

/// True iff the 2x2 cross-covariance block between the particles vanishes
/// within tol.
bool is_product(const GaussianState& state, double tol = 1e-9);

/// Total mean photon number <a1'a1> + <a2'a2>; invariant under the
/// collective map since the map is orthogonal.
double mean_photon_number(const GaussianState& state);

/// Pair of angle labels for the relative / center-of-mass modes, stored
/// reduced to [0, 2*pi).
struct AngleLabelPair {
  AngleLabelPair(double theta, double theta_prime);
  double theta;
  double theta_prime;
};

/// Overlap kernel of quadrature eigenbases,
///   <x|y,theta> = exp(-i/(2 sin theta) ((x^2+y^2) cos theta - 2xy))
///                 / sqrt(2*pi*sin theta),
/// magnitude 1/sqrt(2*pi*|sin theta|). Throws SingularAngle when
/// |sin theta| <= 1e-8.
std::complex<double> quadrature_kernel(double x, double y, double theta);

struct KernelCheckParams {
  double grid_halfwidth = 48.0;
  int grid_points = 16384;
  double regulator_epsilon = 1e-3;
  /// Outer arguments (x, z) at which the composed kernel is compared.
  std::vector<double> sample_values = {-1.0, -0.5, 0.0, 0.5, 1.0};
};

struct KernelCheckResult {
  double theta1 = 0.0;
  double theta2 = 0.0;
  int grid_points = 0;
  double grid_halfwidth = 0.0;
  double regulator_epsilon = 0.0;
  /// Constant phase by which the composed kernel differs from
  /// K(theta1+theta2); a metaplectic-type offset, typically -pi/4.
  double phase_offset = 0.0;
  double max_rel_error = 0.0;
};

/// Checks the composition law K(.;theta1) o K(.;theta2) = K(.;theta1+theta2)
/// up to one constant phase: integrates numerically over the damped grid,
/// fits the global phase, and reports the worst relative deviation over the
/// sample points. Throws SingularAngle if any of theta1, theta2,
/// theta1+theta2 is singular.
KernelCheckResult kernel_composition_check(
    double theta1, double theta2,
    const KernelCheckParams& params = KernelCheckParams());

struct CvSweepRow {
  double r = 0.0;
  AngleLabelPair angles{0.0, 0.0};
  double log_negativity = 0.0;
  bool product = false;
};

/// Cartesian sweep over squeezing values and angle pairs; one row per
/// (r, theta, theta_prime).
std::vector<CvSweepRow> cv_sweep(const std::vector<double>& r_values,
                                 const std::vector<double>& angles,
                                 double product_tol = 1e-9);

}  // namespace mucb

#endif  // MUCB_GAUSSIAN_CV_HPP
