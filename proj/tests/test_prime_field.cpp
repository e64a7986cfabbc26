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

#include <doctest.h>

#include "mucb/prime_field.hpp"
#include "oracles.hpp"

using mucb::FieldElement;

namespace {
constexpr std::int64_t kSmallPrimes[] = {3, 5, 7, 11, 13};
}

TEST_CASE("is_prime on small values") {
  CHECK(mucb::is_prime(7));
  CHECK_FALSE(mucb::is_prime(1));
  CHECK_FALSE(mucb::is_prime(9));
  CHECK_FALSE(mucb::is_prime(0));
  CHECK(mucb::is_prime(2));
  CHECK(mucb::is_prime(3));
  CHECK_FALSE(mucb::is_prime(4));
  CHECK(mucb::is_prime(97));
  CHECK_FALSE(mucb::is_prime(91));  // 7 * 13
}

TEST_CASE("field element canonicalization") {
  CHECK(FieldElement(10, 7).value() == 3);
  CHECK(FieldElement(-1, 7).value() == 6);
  CHECK(FieldElement(-14, 7).value() == 0);
  CHECK(FieldElement(0, 2).value() == 0);
  CHECK_THROWS_AS(FieldElement(1, 6), mucb::NonPrimeDimension);
  CHECK_THROWS_AS(FieldElement(0, 1), mucb::NonPrimeDimension);
}

TEST_CASE("residue arithmetic examples") {
  CHECK((FieldElement(2, 3) - FieldElement(1, 3)).value() == 1);
  CHECK((FieldElement(1, 3) + FieldElement(2, 3)).value() == 0);
  CHECK((FieldElement(4, 7) * FieldElement(4, 7)).value() == (4 * 4) % 7);
  CHECK_THROWS_AS(FieldElement(1, 3) + FieldElement(1, 5),
                  mucb::ModulusMismatch);
}

TEST_CASE("inverse examples") {
  CHECK(inv(FieldElement(2, 7)).value() == 4);
  CHECK(inv(FieldElement(1, 5)).value() == 1);
  // Frozen from the brute-force scan: 3b = 1 (mod 5) at b = 2.
  const auto scan = oracles::brute_force_inverse(3, 5);
  REQUIRE(scan.has_value());
  CHECK(*scan == 2);
  CHECK(inv(FieldElement(3, 5)).value() == 2);
  CHECK_THROWS_AS(inv(FieldElement(0, 5)), mucb::ZeroInverse);
}

TEST_CASE("extended Euclid agrees with brute-force scan") {
  for (std::int64_t d : {3LL, 5LL, 7LL, 11LL, 13LL, 97LL}) {
    for (std::int64_t a = 1; a < d; ++a) {
      CHECK(inv(FieldElement(a, d)).value() ==
            *oracles::brute_force_inverse(a, d));
    }
  }
}

TEST_CASE("half element") {
  CHECK(mucb::half(7).value() == 4);
  // Frozen from brute force: 2*2 = 4 = 1 (mod 3).
  CHECK(*oracles::brute_force_inverse(2, 3) == 2);
  CHECK(mucb::half(3).value() == 2);
  CHECK_THROWS_AS(mucb::half(2), mucb::TwoIsZero);
  CHECK_THROWS_AS(mucb::half(9), mucb::NonPrimeDimension);
}

TEST_CASE("half + half = 1 for every odd prime up to 97") {
  for (std::int64_t d = 3; d <= 97; ++d) {
    if (!mucb::is_prime(d)) continue;
    const FieldElement h = mucb::half(d);
    CHECK((h + h).value() == 1);
    CHECK(h.value() == (d + 1) / 2);
  }
}

TEST_CASE("inverses multiply to one") {
  for (std::int64_t d : kSmallPrimes) {
    for (std::int64_t a = 1; a < d; ++a) {
      const FieldElement f(a, d);
      CHECK((f * inv(f)).value() == 1);
    }
  }
}

TEST_CASE("add and mul are associative and commutative (exhaustive)") {
  for (std::int64_t d : {3LL, 5LL, 7LL}) {
    for (std::int64_t a = 0; a < d; ++a) {
      for (std::int64_t b = 0; b < d; ++b) {
        const FieldElement fa(a, d), fb(b, d);
        CHECK((fa + fb) == (fb + fa));
        CHECK((fa * fb) == (fb * fa));
        for (std::int64_t c = 0; c < d; ++c) {
          const FieldElement fc(c, d);
          CHECK(((fa + fb) + fc) == (fa + (fb + fc)));
          CHECK(((fa * fb) * fc) == (fa * (fb * fc)));
        }
      }
    }
  }
}
