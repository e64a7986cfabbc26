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

#ifndef MUCB_QUDIT_MUB_HPP
#define MUCB_QUDIT_MUB_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mucb/prime_field.hpp"

namespace mucb {

using Complex = std::complex<double>;

/// Dense d x d operator on a single qudit. The clock/shift constructors below
/// produce unitaries; products and powers of them stay unitary.
using QuditOperator = Eigen::MatrixXcd;

/// Unit-norm amplitude vector over the computational basis |0..d-1>.
class QuditState {
 public:
  /// Throws std::invalid_argument unless |amplitudes| is normalized to 1e-12.
  explicit QuditState(Eigen::VectorXcd amplitudes);

  std::int64_t dimension() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

 private:
  Eigen::VectorXcd amplitudes_;
};

/// Label of one basis out of the d+1 mutually unbiased bases: either the
/// computational basis or the eigenbasis of X*Z^b for b in {0..d-1}.
class BasisLabel {
 public:
  static BasisLabel computational() { return BasisLabel(-1); }
  static BasisLabel xz(std::int64_t b);

  bool is_computational() const { return b_ < 0; }
  /// The b exponent; only valid for non-computational labels.
  std::int64_t b() const;

  /// "comp" or the decimal value of b. Used in CSV/JSON output.
  std::string str() const;

  /// Parses "comp", "computational", or a nonnegative integer.
  static BasisLabel parse(const std::string& text);

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;

 private:
  explicit BasisLabel(std::int64_t b) : b_(b) {}
  std::int64_t b_;
};

/// Quadratic factor in the MUB phase exponent: (b/2)n(n-1) or (b/2)n(n+1),
/// evaluated in Z_d. Both produce the same basis up to a relabeling of m,
/// but the label assignment differs, which matters for projection identities.
enum class QuadraticPhase { n_minus_one, n_plus_one };

/// Clock operator: diag(omega^0 .. omega^(d-1)), omega = exp(2*pi*i/d).
QuditOperator pauli_z(std::int64_t d);

/// Cyclic shift: X|n> = |n+1 mod d>.
QuditOperator pauli_x(std::int64_t d);

/// X * Z^b (matrix product, Z^b applied first).
QuditOperator xz_power(std::int64_t d, std::int64_t b);

/// One MUB vector |m;b> = (1/sqrt d) sum_n omega^((b/2)n(n+-1) - n m) |n>.
/// The exponent is evaluated exactly in Z_d via half(d). Requires d prime,
/// d != 2 (throws NonPrimeDimension / TwoIsZero).
QuditState mub_state(std::int64_t d, std::int64_t b, std::int64_t m,
                     QuadraticPhase phase = QuadraticPhase::n_minus_one);

/// One of the d+1 mutually unbiased bases: d orthonormal states.
class MubBasis {
 public:
  MubBasis(BasisLabel label, std::vector<QuditState> vectors);

  const BasisLabel& label() const { return label_; }
  const std::vector<QuditState>& vectors() const { return vectors_; }
  std::int64_t dimension() const { return vectors_.front().dimension(); }

 private:
  BasisLabel label_;
  std::vector<QuditState> vectors_;
};

/// The eigenbasis of X*Z^b, states m = 0..d-1.
MubBasis mub_basis(std::int64_t d, std::int64_t b,
                   QuadraticPhase phase = QuadraticPhase::n_minus_one);

/// The computational basis plus the d bases b = 0..d-1: d+1 bases total.
std::vector<MubBasis> full_mub_set(
    std::int64_t d, QuadraticPhase phase = QuadraticPhase::n_minus_one);

struct UnbiasedCheck {
  bool unbiased = false;
  /// max over all cross pairs of | |<u|v>| - 1/sqrt(d) |.
  double max_deviation = 0.0;
};

/// True iff every cross overlap between the two bases has magnitude
/// 1/sqrt(d) within tol. Throws DimensionMismatch.
UnbiasedCheck verify_unbiased(const MubBasis& a, const MubBasis& b,
                              double tol = 1e-10);

}  // namespace mucb

#endif  // MUCB_QUDIT_MUB_HPP
