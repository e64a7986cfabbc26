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

#ifndef MUCB_COLLECTIVE_MUCB_HPP
#define MUCB_COLLECTIVE_MUCB_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mucb/prime_field.hpp"
#include "mucb/qudit_mub.hpp"

namespace mucb {

/// Pure state of two d-level systems. Amplitudes are stored over the
/// product basis |n1>|n2> with flat index n1*d + n2.
class BipartiteState {
 public:
  /// Throws std::invalid_argument unless the vector has length d*d for some
  /// d >= 2 and unit norm within 1e-12.
  explicit BipartiteState(Eigen::VectorXcd amplitudes);

  std::int64_t dimension() const { return d_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::int64_t n1, std::int64_t n2) const {
    return amplitudes_(n1 * d_ + n2);
  }

 private:
  Eigen::VectorXcd amplitudes_;
  std::int64_t d_;
};

/// Relative / center-of-mass index pair of a two-qudit computational state.
struct CollectiveIndex {
  FieldElement nbar1;  ///< relative: (n1 - n2)/2 in Z_d
  FieldElement nbar2;  ///< center of mass: (n1 + n2)/2 in Z_d
};

/// nbar1 = (n1 - n2)/2, nbar2 = (n1 + n2)/2, both in Z_d.
/// Requires d prime != 2 (throws TwoIsZero / NonPrimeDimension).
CollectiveIndex to_collective(std::int64_t d, std::int64_t n1, std::int64_t n2);

/// Inverse map: n1 = nbar1 + nbar2, n2 = nbar2 - nbar1 (mod d).
std::pair<std::int64_t, std::int64_t> from_collective(std::int64_t d,
                                                      std::int64_t nbar1,
                                                      std::int64_t nbar2);

/// Collective clock operators on C^(d^2):
///   Zbar_1 = Z^(1/2) (x) Z^(-1/2),   Zbar_2 = Z^(1/2) (x) Z^(1/2),
/// with the 1/2 exponent taken in Z_d. `mode` selects 1 (relative) or 2
/// (center of mass).
Eigen::MatrixXcd barred_z(std::int64_t d, int mode);

/// Collective shift operators: Xbar_1 = X (x) X^-1, Xbar_2 = X (x) X.
Eigen::MatrixXcd barred_x(std::int64_t d, int mode);

/// The computational product state |n1>|n2> addressed by its collective
/// indices; an eigenvector of Zbar_i with eigenvalue omega^nbar_i.
BipartiteState collective_basis_state(std::int64_t d, std::int64_t nbar1,
                                      std::int64_t nbar2);

/// Product of MUB vectors in the collective coordinates, expanded in the
/// particle computational basis:
///   |nbar1, b1>> (x) |nbar2, b2>>.
/// A computational label means the collective basis state itself.
/// The quadratic phase convention defaults to n(n+1) for collective states.
BipartiteState mucb_state(std::int64_t d, std::int64_t nbar1,
                          const BasisLabel& b1, std::int64_t nbar2,
                          const BasisLabel& b2,
                          QuadraticPhase phase = QuadraticPhase::n_plus_one);

/// Partial trace over the complement of `keep` (1 or 2). Result is a d x d
/// positive semidefinite matrix with unit trace.
Eigen::MatrixXcd reduced_density(const BipartiteState& state, int keep);

enum class Classification { product, maximally_entangled, other };

/// "product", "maximally_entangled", or "other".
const char* classification_name(Classification c);

/// Schmidt data of a pure bipartite state.
struct EntanglementReport {
  /// Singular values of the d x d amplitude matrix, nonincreasing.
  std::vector<double> schmidt_coefficients;
  double entropy_nats = 0.0;
  /// Trace distance between the reduced density matrix and I/d.
  double reduced_trace_distance_to_maximally_mixed = 0.0;
  Classification classification = Classification::other;
};

/// Schmidt decomposition via SVD. Classification thresholds: product iff
/// entropy < tol, maximally entangled iff |entropy - ln d| < tol, anything
/// else reported as `other` with its entropy.
EntanglementReport entanglement_report(const BipartiteState& state,
                                       double tol = 1e-9);

/// Result of projecting <n1| onto |nbar1>> |nbar2,b>>.
struct ProjectionCheck {
  bool match = false;         ///< support and amplitude both as predicted
  std::int64_t support_n2 = 0;  ///< the single n2 carrying the amplitude
  Complex amplitude;          ///< what the state actually contains
  Complex expected;           ///< (1/sqrt d) * omega^exponent prediction
};

/// Projects <n1| onto mucb_state(nbar1, comp, nbar2, b) built with `phase`
/// and compares against the closed-form prediction
///   (1/sqrt d) |n2 = -2 nbar1 + n1> omega^((b/2) t (t-1) - nbar2 t),
/// t = n1 - nbar1, evaluated in Z_d. Match tolerance 1e-10.
ProjectionCheck projection_check(std::int64_t d, std::int64_t nbar1,
                                 std::int64_t nbar2, std::int64_t b,
                                 std::int64_t n1,
                                 QuadraticPhase phase = QuadraticPhase::n_plus_one);

struct ProjectionSweep {
  QuadraticPhase phase;
  std::int64_t checks = 0;
  std::int64_t mismatches = 0;
};

/// Runs projection_check over all d^4 tuples (nbar1, nbar2, b, n1) for both
/// quadratic phase conventions and counts mismatches per convention.
std::array<ProjectionSweep, 2> projection_sweep(std::int64_t d);

struct ClassificationRow {
  BasisLabel b1;
  BasisLabel b2;
  Classification classification;
  double entropy_nats = 0.0;
  /// Spread of entropy across all (nbar1, nbar2) choices; the classification
  /// is only meaningful because this is ~0.
  double entropy_spread = 0.0;
};

struct ClassificationTable {
  std::int64_t d = 0;
  std::vector<ClassificationRow> rows;  ///< (d+1)^2 rows, label-major order
  std::int64_t count(Classification c) const;
};

/// Classifies every label pair (b1, b2) in ({comp} u {0..d-1})^2 by the
/// entanglement of the corresponding MUCB states. The classification is
/// checked to be independent of (nbar1, nbar2); the spread is recorded.
ClassificationTable classify_pairs(
    std::int64_t d, QuadraticPhase phase = QuadraticPhase::n_plus_one);

/// One Bell state together with its eigenvalue signs under sigma_x (x)
/// sigma_x and sigma_z (x) sigma_z.
struct BellState {
  BipartiteState state;
  int sx_sign = 0;
  int sz_sign = 0;
};

/// The four simultaneous eigenvectors of sigma_x(x)sigma_x and
/// sigma_z(x)sigma_z, constructed by projector intersection. Every sign
/// pattern occurs exactly once; order is (+,+), (+,-), (-,+), (-,-).
std::vector<BellState> bell_states();

}  // namespace mucb

#endif  // MUCB_COLLECTIVE_MUCB_HPP
