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

#include "mucb/qudit_mub.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mucb {

namespace {

Complex root_of_unity(std::int64_t d, std::int64_t k) {
  // k is a canonical residue; the phase 2*pi*k/d is exact to one rounding.
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(d));
}

}  // namespace

QuditState::QuditState(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 2) {
    throw std::invalid_argument("qudit state needs dimension >= 2");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("qudit state is not normalized");
  }
}

BasisLabel BasisLabel::xz(std::int64_t b) {
  if (b < 0) throw std::invalid_argument("basis label b must be >= 0");
  return BasisLabel(b);
}

std::int64_t BasisLabel::b() const {
  if (is_computational()) {
    throw std::logic_error("computational basis has no b exponent");
  }
  return b_;
}

std::string BasisLabel::str() const {
  return is_computational() ? "comp" : std::to_string(b_);
}

BasisLabel BasisLabel::parse(const std::string& text) {
  if (text == "comp" || text == "computational") return computational();
  std::size_t pos = 0;
  long long b = 0;
  try {
    b = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad basis label: " + text);
  }
  if (pos != text.size() || b < 0) {
    throw std::invalid_argument("bad basis label: " + text);
  }
  return xz(b);
}

QuditOperator pauli_z(std::int64_t d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  QuditOperator z = QuditOperator::Zero(d, d);
  for (std::int64_t n = 0; n < d; ++n) z(n, n) = root_of_unity(d, n);
  return z;
}

QuditOperator pauli_x(std::int64_t d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  QuditOperator x = QuditOperator::Zero(d, d);
  for (std::int64_t n = 0; n < d; ++n) x((n + 1) % d, n) = 1.0;
  return x;
}

QuditOperator xz_power(std::int64_t d, std::int64_t b) {
  QuditOperator m = QuditOperator::Zero(d, d);
  // X Z^b maps |n> to omega^(b n) |n+1>; build it directly.
  for (std::int64_t n = 0; n < d; ++n) {
    m((n + 1) % d, n) = root_of_unity(d, ((b % d) * n) % d);
  }
  return m;
}

QuditState mub_state(std::int64_t d, std::int64_t b, std::int64_t m,
                     QuadraticPhase phase) {
  if (!is_prime(d)) throw NonPrimeDimension(d);
  const FieldElement h = half(d);  // throws TwoIsZero for d = 2
  const FieldElement bf(b, d);
  const FieldElement mf(m, d);
  const std::int64_t shift = (phase == QuadraticPhase::n_minus_one) ? -1 : 1;

  Eigen::VectorXcd amps(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::int64_t n = 0; n < d; ++n) {
    const FieldElement nf(n, d);
    // exponent = (b/2) n (n -+ 1) - n m, all in Z_d
    const FieldElement quad = h * bf * nf * FieldElement(n + shift, d);
    const FieldElement expo = quad - nf * mf;
    amps(n) = scale * root_of_unity(d, expo.value());
  }
  return QuditState(std::move(amps));
}

MubBasis::MubBasis(BasisLabel label, std::vector<QuditState> vectors)
    : label_(label), vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw std::invalid_argument("empty basis");
  const std::int64_t d = vectors_.front().dimension();
  for (const auto& v : vectors_) {
    if (v.dimension() != d) throw DimensionMismatch(d, v.dimension());
  }
  if (static_cast<std::int64_t>(vectors_.size()) != d) {
    throw std::invalid_argument("basis must contain exactly d vectors");
  }
}

MubBasis mub_basis(std::int64_t d, std::int64_t b, QuadraticPhase phase) {
  std::vector<QuditState> vectors;
  vectors.reserve(d);
  for (std::int64_t m = 0; m < d; ++m) {
    vectors.push_back(mub_state(d, b, m, phase));
  }
  return MubBasis(BasisLabel::xz(b), std::move(vectors));
}

std::vector<MubBasis> full_mub_set(std::int64_t d, QuadraticPhase phase) {
  if (!is_prime(d)) throw NonPrimeDimension(d);
  if (d == 2) throw TwoIsZero();
  std::vector<MubBasis> bases;
  bases.reserve(d + 1);

  std::vector<QuditState> computational;
  computational.reserve(d);
  for (std::int64_t n = 0; n < d; ++n) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
    e(n) = 1.0;
    computational.emplace_back(std::move(e));
  }
  bases.emplace_back(BasisLabel::computational(), std::move(computational));

  for (std::int64_t b = 0; b < d; ++b) {
    bases.push_back(mub_basis(d, b, phase));
  }
  return bases;
}

UnbiasedCheck verify_unbiased(const MubBasis& a, const MubBasis& b,
                              double tol) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch(a.dimension(), b.dimension());
  }
  const double target = 1.0 / std::sqrt(static_cast<double>(a.dimension()));
  UnbiasedCheck check;
  for (const auto& u : a.vectors()) {
    for (const auto& v : b.vectors()) {
      const double overlap = std::abs(u.amplitudes().dot(v.amplitudes()));
      check.max_deviation =
          std::max(check.max_deviation, std::abs(overlap - target));
    }
  }
  check.unbiased = check.max_deviation <= tol;
  return check;
}

}  // namespace mucb
