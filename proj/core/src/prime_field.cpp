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

#include "mucb/prime_field.hpp"

namespace mucb {

bool is_prime(std::int64_t d) {
  if (d < 2) return false;
  if (d < 4) return true;
  if (d % 2 == 0) return false;
  for (std::int64_t f = 3; f * f <= d; f += 2) {
    if (d % f == 0) return false;
  }
  return true;
}

FieldElement::FieldElement(std::int64_t value, std::int64_t modulus)
    : modulus_(modulus) {
  if (!is_prime(modulus)) throw NonPrimeDimension(modulus);
  value_ = value % modulus;
  if (value_ < 0) value_ += modulus;
}

namespace {

void require_same_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw ModulusMismatch(a.modulus(), b.modulus());
  }
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  return FieldElement(a.value() + b.value(), a.modulus());
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  return FieldElement(a.value() - b.value(), a.modulus());
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  return FieldElement(a.value() * b.value(), a.modulus());
}

FieldElement neg(const FieldElement& a) {
  return FieldElement(-a.value(), a.modulus());
}

FieldElement inv(const FieldElement& a) {
  if (a.value() == 0) throw ZeroInverse(a.modulus());
  // Extended Euclid for gcd(a, d) = 1 = s*a + t*d, so s = 1/a (mod d).
  std::int64_t r0 = a.modulus(), r1 = a.value();
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    s0 -= q * s1;
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  return FieldElement(s0, a.modulus());
}

FieldElement half(std::int64_t d) {
  if (d == 2) throw TwoIsZero();
  return inv(FieldElement(2, d));
}

}  // namespace mucb
