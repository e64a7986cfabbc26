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

#ifndef MUCB_ERRORS_HPP
#define MUCB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mucb {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested dimension is not a prime number.
class NonPrimeDimension : public Error {
 public:
  explicit NonPrimeDimension(long long d)
      : Error("dimension " + std::to_string(d) + " is not prime") {}
};

/// Modular inverse of zero requested.
class ZeroInverse : public Error {
 public:
  explicit ZeroInverse(long long d)
      : Error("0 has no inverse mod " + std::to_string(d)) {}
};

/// 2 == 0 in Z_2, so 1/2 does not exist and the collective-coordinate
/// construction is unavailable for d = 2.
class TwoIsZero : public Error {
 public:
  TwoIsZero() : Error("2 has no inverse mod 2; d = 2 is not supported here") {}
};

/// Two field elements with different moduli were combined.
class ModulusMismatch : public Error {
 public:
  ModulusMismatch(long long a, long long b)
      : Error("modulus mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

/// Two objects of different Hilbert-space dimension were combined.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(long long a, long long b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

/// Quadrature kernel evaluated at an angle with sin(theta) ~ 0.
class SingularAngle : public Error {
 public:
  explicit SingularAngle(double theta)
      : Error("quadrature kernel is singular at theta = " +
              std::to_string(theta)) {}
};

/// Covariance matrix violates the uncertainty relation cov + i*Omega/2 >= 0.
class UnphysicalCovariance : public Error {
 public:
  explicit UnphysicalCovariance(double min_eigenvalue)
      : Error("covariance matrix is unphysical: min eig(cov + i*Omega/2) = " +
              std::to_string(min_eigenvalue)) {}
};

}  // namespace mucb

#endif  // MUCB_ERRORS_HPP
