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

#ifndef MUCB_PRIME_FIELD_HPP
#define MUCB_PRIME_FIELD_HPP

#include <cstdint>

#include "mucb/errors.hpp"

namespace mucb {

/// Deterministic primality check by trial division. Returns false for 0 and 1.
bool is_prime(std::int64_t d);

/// Default cap on the qudit dimension accepted by the command-line tools.
/// Desk-scale: states live in C^(d^2), so d = 97 already means ~9409
/// amplitudes per state.
inline constexpr std::int64_t kDefaultMaxDimension = 97;

/// Residue in Z_d for prime d. Values are kept canonical: 0 <= value < d.
///
/// Arithmetic is exact integer arithmetic; nothing here touches floating
/// point. All index algebra of the collective-coordinate construction runs
/// through this type so that phase exponents are computed in the field and
/// only afterwards mapped onto complex phases.
class FieldElement {
 public:
  /// Reduces `value` into [0, d). Accepts negative values.
  /// Throws NonPrimeDimension unless d is prime.
  FieldElement(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

/// Exact residue arithmetic. Throws ModulusMismatch if the operands live in
/// different fields.
FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);

/// Multiplicative inverse via the extended Euclidean algorithm.
/// Throws ZeroInverse when a == 0.
FieldElement inv(const FieldElement& a);

/// The field element acting as 1/2: inv(2 mod d) == (d+1)/2 as an integer.
/// Throws TwoIsZero for d = 2 (2 == 0 there) and NonPrimeDimension otherwise
/// for non-prime d.
FieldElement half(std::int64_t d);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return add(a, b);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return sub(a, b);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return mul(a, b);
}
inline FieldElement operator-(const FieldElement& a) { return neg(a); }

}  // namespace mucb

#endif  // MUCB_PRIME_FIELD_HPP
