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

#include "mucb/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace mucb {

namespace {

const char* quadratic_phase_name(QuadraticPhase phase) {
  return phase == QuadraticPhase::n_minus_one ? "n(n-1)" : "n(n+1)";
}

// JSON value for a basis label: a quoted "comp" or a plain integer.
std::string label_json(const BasisLabel& label) {
  return label.is_computational() ? std::string("\"comp\"") : label.str();
}

std::string complex_pair(const Complex& z) {
  return "[" + fmt_double(z.real()) + "," + fmt_double(z.imag()) + "]";
}

std::string amplitude_array(const Eigen::VectorXcd& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += complex_pair(v(i));
  }
  return out + "]";
}

}  // namespace

std::string fmt_double(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string json_mub_set(const std::vector<MubBasis>& bases, std::int64_t d) {
  std::string out = "{\"bases\":[";
  bool first_basis = true;
  for (const auto& basis : bases) {
    if (!first_basis) out += ",";
    first_basis = false;
    out += "{\"label\":" + label_json(basis.label()) + ",\"vectors\":[";
    for (std::size_t m = 0; m < basis.vectors().size(); ++m) {
      if (m) out += ",";
      out += amplitude_array(basis.vectors()[m].amplitudes());
    }
    out += "]}";
  }
  out += "],\"d\":" + std::to_string(d) + "}";
  return out;
}

std::string json_mub_verify(const MubVerifyOutcome& outcome) {
  std::string out = "{";
  out += "\"d\":" + std::to_string(outcome.d);
  out += ",\"max_deviation\":" + fmt_double(outcome.max_deviation);
  out += ",\"pairs_checked\":" + std::to_string(outcome.pairs_checked);
  out += ",\"tol\":" + fmt_double(outcome.tol);
  out += std::string(",\"unbiased\":") + (outcome.unbiased ? "true" : "false");
  return out + "}";
}

std::string json_entanglement_report(std::int64_t d, const BasisLabel& b1,
                                     const BasisLabel& b2, std::int64_t nbar1,
                                     std::int64_t nbar2,
                                     const EntanglementReport& report) {
  std::string out = "{";
  out += "\"b1\":" + label_json(b1);
  out += ",\"b2\":" + label_json(b2);
  out += std::string(",\"classification\":\"") +
         classification_name(report.classification) + "\"";
  out += ",\"d\":" + std::to_string(d);
  out += ",\"entropy_bits\":" +
         fmt_double(report.entropy_nats / std::log(2.0));
  out += ",\"entropy_nats\":" + fmt_double(report.entropy_nats);
  out += ",\"nbar1\":" + std::to_string(nbar1);
  out += ",\"nbar2\":" + std::to_string(nbar2);
  out += ",\"reduced_trace_distance\":" +
         fmt_double(report.reduced_trace_distance_to_maximally_mixed);
  out += ",\"schmidt\":[";
  for (std::size_t i = 0; i < report.schmidt_coefficients.size(); ++i) {
    if (i) out += ",";
    out += fmt_double(report.schmidt_coefficients[i]);
  }
  return out + "]}";
}

std::string json_classification(const ClassificationTable& table) {
  std::string out = "{\"counts\":{";
  out += "\"maximally_entangled\":" +
         std::to_string(table.count(Classification::maximally_entangled));
  out += ",\"other\":" + std::to_string(table.count(Classification::other));
  out += ",\"product\":" + std::to_string(table.count(Classification::product));
  out += "},\"d\":" + std::to_string(table.d) + ",\"rows\":[";
  bool first = true;
  for (const auto& row : table.rows) {
    if (!first) out += ",";
    first = false;
    out += "{\"b1\":" + label_json(row.b1);
    out += ",\"b2\":" + label_json(row.b2);
    out += std::string(",\"classification\":\"") +
           classification_name(row.classification) + "\"";
    out += ",\"entropy_nats\":" + fmt_double(row.entropy_nats);
    out += ",\"entropy_spread\":" + fmt_double(row.entropy_spread);
    out += "}";
  }
  return out + "]}";
}

std::string csv_classification(const ClassificationTable& table) {
  std::string out = "d,b1,b2,class,entropy\n";
  for (const auto& row : table.rows) {
    out += std::to_string(table.d) + "," + row.b1.str() + "," + row.b2.str() +
           "," + classification_name(row.classification) + "," +
           fmt_double(row.entropy_nats) + "\n";
  }
  return out;
}

std::string json_projection_sweep(
    std::int64_t d, const std::array<ProjectionSweep, 2>& sweeps) {
  std::string out = "{\"d\":" + std::to_string(d) + ",\"results\":[";
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    if (i) out += ",";
    out += "{\"checks\":" + std::to_string(sweeps[i].checks);
    out += std::string(",\"exponent\":\"") +
           quadratic_phase_name(sweeps[i].phase) + "\"";
    out += ",\"mismatches\":" + std::to_string(sweeps[i].mismatches) + "}";
  }
  return out + "]}";
}

std::string csv_cv_sweep(const std::vector<CvSweepRow>& rows) {
  std::string out = "r,theta,theta_prime,log_negativity,is_product\n";
  for (const auto& row : rows) {
    out += fmt_double(row.r) + "," + fmt_double(row.angles.theta) + "," +
           fmt_double(row.angles.theta_prime) + "," +
           fmt_double(row.log_negativity) + "," +
           (row.product ? "true" : "false") + "\n";
  }
  return out;
}

std::string json_cv_sweep(const std::vector<CvSweepRow>& rows) {
  std::string out = "{\"rows\":[";
  bool first = true;
  for (const auto& row : rows) {
    if (!first) out += ",";
    first = false;
    out += "{\"is_product\":" + std::string(row.product ? "true" : "false");
    out += ",\"log_negativity\":" + fmt_double(row.log_negativity);
    out += ",\"r\":" + fmt_double(row.r);
    out += ",\"theta\":" + fmt_double(row.angles.theta);
    out += ",\"theta_prime\":" + fmt_double(row.angles.theta_prime);
    out += "}";
  }
  return out + "]}";
}

std::string json_kernel_checks(const std::vector<KernelCheckResult>& checks) {
  std::string out = "{\"checks\":[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (i) out += ",";
    const auto& c = checks[i];
    out += "{\"grid_halfwidth\":" + fmt_double(c.grid_halfwidth);
    out += ",\"grid_points\":" + std::to_string(c.grid_points);
    out += ",\"max_rel_error\":" + fmt_double(c.max_rel_error);
    out += ",\"phase_offset\":" + fmt_double(c.phase_offset);
    out += ",\"regulator\":" + fmt_double(c.regulator_epsilon);
    out += ",\"theta1\":" + fmt_double(c.theta1);
    out += ",\"theta2\":" + fmt_double(c.theta2);
    out += "}";
  }
  return out + "]}";
}

std::string json_bell(const std::vector<BellState>& states) {
  std::string out = "{\"states\":[";
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += ",";
    const auto& bell = states[i];
    const auto report = entanglement_report(bell.state);
    out += "{\"amplitudes\":" + amplitude_array(bell.state.amplitudes());
    out += ",\"entropy_nats\":" + fmt_double(report.entropy_nats);
    out += ",\"sx\":" + std::to_string(bell.sx_sign);
    out += ",\"sz\":" + std::to_string(bell.sz_sign);
    out += "}";
  }
  return out + "]}";
}

}  // namespace mucb
