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

#include "mucb/collective_mucb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mucb {

namespace {

Complex root_of_unity(std::int64_t d, std::int64_t k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(d));
}

// Z^a on one qudit: diag(omega^(a n)).
Eigen::MatrixXcd z_power(std::int64_t d, std::int64_t a) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const std::int64_t ar = ((a % d) + d) % d;
  for (std::int64_t n = 0; n < d; ++n) m(n, n) = root_of_unity(d, (ar * n) % d);
  return m;
}

// X^a on one qudit: |n> -> |n+a>.
Eigen::MatrixXcd x_power(std::int64_t d, std::int64_t a) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const std::int64_t ar = ((a % d) + d) % d;
  for (std::int64_t n = 0; n < d; ++n) m((n + ar) % d, n) = 1.0;
  return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

void require_collective_dimension(std::int64_t d) {
  if (!is_prime(d)) throw NonPrimeDimension(d);
  if (d == 2) throw TwoIsZero();
}

// Coefficients <n'|nbar;b> of one collective factor: a delta for the
// computational label, a MUB state otherwise.
Eigen::VectorXcd factor_coefficients(std::int64_t d, std::int64_t nbar,
                                     const BasisLabel& b,
                                     QuadraticPhase phase) {
  if (b.is_computational()) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
    e(((nbar % d) + d) % d) = 1.0;
    return e;
  }
  return mub_state(d, b.b(), nbar, phase).amplitudes();
}

// Amplitudes as the d x d matrix A(n1, n2).
Eigen::MatrixXcd amplitude_matrix(const BipartiteState& state) {
  const std::int64_t d = state.dimension();
  Eigen::MatrixXcd a(d, d);
  for (std::int64_t n1 = 0; n1 < d; ++n1) {
    for (std::int64_t n2 = 0; n2 < d; ++n2) {
      a(n1, n2) = state.amplitude(n1, n2);
    }
  }
  return a;
}

}  // namespace

BipartiteState::BipartiteState(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  const auto len = amplitudes_.size();
  d_ = static_cast<std::int64_t>(std::llround(std::sqrt(double(len))));
  if (d_ < 2 || d_ * d_ != len) {
    throw std::invalid_argument("bipartite state length must be d^2, d >= 2");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("bipartite state is not normalized");
  }
}

CollectiveIndex to_collective(std::int64_t d, std::int64_t n1,
                              std::int64_t n2) {
  require_collective_dimension(d);
  const FieldElement h = half(d);
  const FieldElement f1(n1, d), f2(n2, d);
  return CollectiveIndex{h * (f1 - f2), h * (f1 + f2)};
}

std::pair<std::int64_t, std::int64_t> from_collective(std::int64_t d,
                                                      std::int64_t nbar1,
                                                      std::int64_t nbar2) {
  require_collective_dimension(d);
  const FieldElement f1(nbar1, d), f2(nbar2, d);
  return {(f1 + f2).value(), (f2 - f1).value()};
}

Eigen::MatrixXcd barred_z(std::int64_t d, int mode) {
  require_collective_dimension(d);
  if (mode != 1 && mode != 2) throw std::invalid_argument("mode must be 1 or 2");
  const std::int64_t h = half(d).value();
  return mode == 1 ? kron(z_power(d, h), z_power(d, -h))
                   : kron(z_power(d, h), z_power(d, h));
}

Eigen::MatrixXcd barred_x(std::int64_t d, int mode) {
  require_collective_dimension(d);
  if (mode != 1 && mode != 2) throw std::invalid_argument("mode must be 1 or 2");
  return mode == 1 ? kron(x_power(d, 1), x_power(d, -1))
                   : kron(x_power(d, 1), x_power(d, 1));
}

BipartiteState collective_basis_state(std::int64_t d, std::int64_t nbar1,
                                      std::int64_t nbar2) {
  const auto [n1, n2] = from_collective(d, nbar1, nbar2);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(d * d);
  amps(n1 * d + n2) = 1.0;
  return BipartiteState(std::move(amps));
}

BipartiteState mucb_state(std::int64_t d, std::int64_t nbar1,
                          const BasisLabel& b1, std::int64_t nbar2,
                          const BasisLabel& b2, QuadraticPhase phase) {
  require_collective_dimension(d);
  const Eigen::VectorXcd c1 = factor_coefficients(d, nbar1, b1, phase);
  const Eigen::VectorXcd c2 = factor_coefficients(d, nbar2, b2, phase);

  // |nbar1',nbar2'>> is the computational product state at
  // (n1, n2) = from_collective(nbar1', nbar2'), so the expansion is a
  // relabeled outer product.
  Eigen::VectorXcd amps(d * d);
  const FieldElement h = half(d);
  for (std::int64_t n1 = 0; n1 < d; ++n1) {
    for (std::int64_t n2 = 0; n2 < d; ++n2) {
      const FieldElement f1(n1, d), f2(n2, d);
      const std::int64_t c1_index = (h * (f1 - f2)).value();
      const std::int64_t c2_index = (h * (f1 + f2)).value();
      amps(n1 * d + n2) = c1(c1_index) * c2(c2_index);
    }
  }
  return BipartiteState(std::move(amps));
}

Eigen::MatrixXcd reduced_density(const BipartiteState& state, int keep) {
  if (keep != 1 && keep != 2) throw std::invalid_argument("keep must be 1 or 2");
  const Eigen::MatrixXcd a = amplitude_matrix(state);
  if (keep == 1) return a * a.adjoint();
  return (a.adjoint() * a).conjugate();
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::product:
      return "product";
    case Classification::maximally_entangled:
      return "maximally_entangled";
    case Classification::other:
      return "other";
  }
  return "other";
}

EntanglementReport entanglement_report(const BipartiteState& state,
                                       double tol) {
  const std::int64_t d = state.dimension();
  const Eigen::MatrixXcd a = amplitude_matrix(state);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);

  EntanglementReport report;
  report.schmidt_coefficients.assign(svd.singularValues().data(),
                                     svd.singularValues().data() + d);
  double entropy = 0.0;
  double distance = 0.0;
  const double uniform = 1.0 / static_cast<double>(d);
  for (double s : report.schmidt_coefficients) {
    const double p = s * s;
    if (p > 0.0) entropy -= p * std::log(p);
    distance += std::abs(p - uniform);
  }
  // -p log p sums can land a hair below zero for product states.
  report.entropy_nats = std::max(entropy, 0.0);
  report.reduced_trace_distance_to_maximally_mixed = 0.5 * distance;

  const double max_entropy = std::log(static_cast<double>(d));
  if (entropy < tol) {
    report.classification = Classification::product;
  } else if (std::abs(entropy - max_entropy) < tol) {
    report.classification = Classification::maximally_entangled;
  } else {
    report.classification = Classification::other;
  }
  return report;
}

ProjectionCheck projection_check(std::int64_t d, std::int64_t nbar1,
                                 std::int64_t nbar2, std::int64_t b,
                                 std::int64_t n1, QuadraticPhase phase) {
  require_collective_dimension(d);
  const BipartiteState state = mucb_state(d, nbar1, BasisLabel::computational(),
                                          nbar2, BasisLabel::xz(b), phase);

  ProjectionCheck check;
  const std::int64_t n1c = ((n1 % d) + d) % d;
  const FieldElement h = half(d);
  const FieldElement t = FieldElement(n1, d) - FieldElement(nbar1, d);
  check.support_n2 =
      (FieldElement(n1, d) - FieldElement(2 * nbar1, d)).value();
  const FieldElement expo = h * FieldElement(b, d) * t *
                                (t - FieldElement(1, d)) -
                            FieldElement(nbar2, d) * t;
  check.expected = root_of_unity(d, expo.value()) /
                   std::sqrt(static_cast<double>(d));
  check.amplitude = state.amplitude(n1c, check.support_n2);

  bool support_ok = true;
  for (std::int64_t n2 = 0; n2 < d; ++n2) {
    if (n2 == check.support_n2) continue;
    if (std::abs(state.amplitude(n1c, n2)) > 1e-12) support_ok = false;
  }
  check.match =
      support_ok && std::abs(check.amplitude - check.expected) < 1e-10;
  return check;
}

std::array<ProjectionSweep, 2> projection_sweep(std::int64_t d) {
  require_collective_dimension(d);
  std::array<ProjectionSweep, 2> sweeps{
      ProjectionSweep{QuadraticPhase::n_minus_one, 0, 0},
      ProjectionSweep{QuadraticPhase::n_plus_one, 0, 0}};
  for (auto& sweep : sweeps) {
    for (std::int64_t nbar1 = 0; nbar1 < d; ++nbar1) {
      for (std::int64_t nbar2 = 0; nbar2 < d; ++nbar2) {
        for (std::int64_t b = 0; b < d; ++b) {
          for (std::int64_t n1 = 0; n1 < d; ++n1) {
            ++sweep.checks;
            if (!projection_check(d, nbar1, nbar2, b, n1, sweep.phase).match) {
              ++sweep.mismatches;
            }
          }
        }
      }
    }
  }
  return sweeps;
}

std::int64_t ClassificationTable::count(Classification c) const {
  std::int64_t n = 0;
  for (const auto& row : rows) {
    if (row.classification == c) ++n;
  }
  return n;
}

ClassificationTable classify_pairs(std::int64_t d, QuadraticPhase phase) {
  require_collective_dimension(d);
  std::vector<BasisLabel> labels;
  labels.push_back(BasisLabel::computational());
  for (std::int64_t b = 0; b < d; ++b) labels.push_back(BasisLabel::xz(b));

  ClassificationTable table;
  table.d = d;
  for (const auto& b1 : labels) {
    for (const auto& b2 : labels) {
      ClassificationRow row{b1, b2, Classification::other, 0.0, 0.0};
      bool first = true;
      double lo = 0.0, hi = 0.0;
      for (std::int64_t nbar1 = 0; nbar1 < d; ++nbar1) {
        for (std::int64_t nbar2 = 0; nbar2 < d; ++nbar2) {
          const auto report = entanglement_report(
              mucb_state(d, nbar1, b1, nbar2, b2, phase));
          if (first) {
            row.classification = report.classification;
            row.entropy_nats = report.entropy_nats;
            lo = hi = report.entropy_nats;
            first = false;
          } else {
            lo = std::min(lo, report.entropy_nats);
            hi = std::max(hi, report.entropy_nats);
            if (report.classification != row.classification) {
              throw std::logic_error(
                  "classification not constant across collective indices for "
                  "labels " + b1.str() + "," + b2.str());
            }
          }
        }
      }
      row.entropy_spread = hi - lo;
      table.rows.push_back(row);
    }
  }
  return table;
}

std::vector<BellState> bell_states() {
  const Eigen::MatrixXcd xx = kron(x_power(2, 1), x_power(2, 1));
  const Eigen::MatrixXcd zz = kron(z_power(2, 1), z_power(2, 1));
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);

  // Walk sign patterns in the order (+,+), (+,-), (-,+), (-,-).
  std::vector<BellState> states;
  for (int sx : {+1, -1}) {
    for (int sz : {+1, -1}) {
      // Intersect the two eigenprojectors; the product is a rank-1 projector.
      const Eigen::MatrixXcd proj =
          0.25 * (id + double(sx) * xx) * (id + double(sz) * zz);
      Eigen::Index best = 0;
      proj.colwise().norm().maxCoeff(&best);
      Eigen::VectorXcd v = proj.col(best);
      v.normalize();
      // Deterministic phase: first significant amplitude made real positive.
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-8) {
          v *= std::conj(v(i)) / std::abs(v(i));
          break;
        }
      }
      states.push_back(BellState{BipartiteState(std::move(v)), sx, sz});
    }
  }
  return states;
}

}  // namespace mucb
