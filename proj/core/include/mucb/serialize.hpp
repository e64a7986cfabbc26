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

#ifndef MUCB_SERIALIZE_HPP
#define MUCB_SERIALIZE_HPP

#include <string>
#include <vector>

#include "mucb/collective_mucb.hpp"
#include "mucb/gaussian_cv.hpp"
#include "mucb/qudit_mub.hpp"

// Deterministic text output: object keys are emitted in sorted order and
// every float is formatted with 12 significant digits, so identical inputs
// produce byte-identical documents.

namespace mucb {

/// %.12g with negative zero normalized away.
std::string fmt_double(double value);

/// {"bases": [{"label": ..., "vectors": [[[re, im], ...], ...]}, ...], "d": d}
std::string json_mub_set(const std::vector<MubBasis>& bases, std::int64_t d);

struct MubVerifyOutcome {
  std::int64_t d = 0;
  std::int64_t pairs_checked = 0;
  double max_deviation = 0.0;
  double tol = 0.0;
  bool unbiased = false;
};
std::string json_mub_verify(const MubVerifyOutcome& outcome);

std::string json_entanglement_report(std::int64_t d, const BasisLabel& b1,
                                     const BasisLabel& b2, std::int64_t nbar1,
                                     std::int64_t nbar2,
                                     const EntanglementReport& report);

std::string json_classification(const ClassificationTable& table);
/// Header: d,b1,b2,class,entropy
std::string csv_classification(const ClassificationTable& table);

std::string json_projection_sweep(std::int64_t d,
                                  const std::array<ProjectionSweep, 2>& sweeps);

/// Header: r,theta,theta_prime,log_negativity,is_product
std::string csv_cv_sweep(const std::vector<CvSweepRow>& rows);
std::string json_cv_sweep(const std::vector<CvSweepRow>& rows);

std::string json_kernel_checks(const std::vector<KernelCheckResult>& checks);

std::string json_bell(const std::vector<BellState>& states);

}  // namespace mucb

#endif  // MUCB_SERIALIZE_HPP
