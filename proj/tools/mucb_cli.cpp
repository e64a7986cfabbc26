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

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 input error. All output is deterministic: fixed float formatting (12
// significant digits), sorted JSON keys, files written atomically.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mucb/collective_mucb.hpp"
#include "mucb/gaussian_cv.hpp"
#include "mucb/prime_field.hpp"
#include "mucb/qudit_mub.hpp"
#include "mucb/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::int64_t max_dimension() {
  if (const char* env = std::getenv("MUCB_MAX_D")) {
    try {
      const long long cap = std::stoll(env);
      if (cap >= 2) return cap;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("MUCB_MAX_D must be an integer >= 2");
  }
  return mucb::kDefaultMaxDimension;
}

void require_odd_prime(std::int64_t d) {
  if (!mucb::is_prime(d)) throw mucb::NonPrimeDimension(d);
  if (d == 2) throw mucb::TwoIsZero();
  const std::int64_t cap = max_dimension();
  if (d > cap) {
    throw std::invalid_argument("d = " + std::to_string(d) +
                                " exceeds the cap of " + std::to_string(cap) +
                                " (override with MUCB_MAX_D)");
  }
}

// Writes to `path` via a temp file + rename, or to stdout when path is empty.
// Output always ends with exactly one newline.
void write_output(const std::string& path, std::string content) {
  if (content.empty() || content.back() != '\n') content += '\n';
  if (path.empty()) {
    std::cout << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = text.find(sep, begin);
    if (end == std::string::npos) {
      parts.push_back(text.substr(begin));
      break;
    }
    parts.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
  return parts;
}

double parse_double(const std::string& token) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number: " + token);
  }
  if (pos != token.size()) throw std::invalid_argument("bad number: " + token);
  return value;
}

// "1/6" or "0.25" -> value (a multiple of pi once scaled by the caller).
double parse_fraction(const std::string& token) {
  const auto slash = token.find('/');
  if (slash == std::string::npos) return parse_double(token);
  const double num = parse_double(token.substr(0, slash));
  const double den = parse_double(token.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("zero denominator: " + token);
  return num / den;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  for (const auto& token : split(text, ',')) values.push_back(parse_double(token));
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

// Angle grid "start:stop:count" in units of pi, stop exclusive.
std::vector<double> parse_angle_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw std::invalid_argument("grid must be start:stop:count (in pi units)");
  }
  const double start = parse_fraction(parts[0]);
  const double stop = parse_fraction(parts[1]);
  long long count = 0;
  try {
    count = std::stoll(parts[2]);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad grid count: " + parts[2]);
  }
  if (count < 1) throw std::invalid_argument("grid count must be >= 1");
  std::vector<double> angles;
  angles.reserve(count);
  for (long long i = 0; i < count; ++i) {
    const double multiple =
        start + (stop - start) * static_cast<double>(i) / static_cast<double>(count);
    angles.push_back(std::numbers::pi * multiple);
  }
  return angles;
}

struct Options {
  std::int64_t d = 3;
  std::string b1 = "comp";
  std::string b2 = "0";
  std::int64_t nbar1 = 0;
  std::int64_t nbar2 = 0;
  std::string r_list = "0.25,0.5,1,2";
  std::string grid = "0:2:24";
  std::string angles = "1/6,1/4,1/3";
  double tol = 1e-10;
  double product_tol = 1e-9;
  std::string out;
  std::string format;
};


void require_json_only(const Options& opt) {
  if (!opt.format.empty() && opt.format != "json") {
    throw std::invalid_argument("this command emits json only");
  }
}

int run_mub_verify(const Options& opt) {
  if (!opt.format.empty() && opt.format != "json" && opt.format != "text") {
    throw std::invalid_argument("mub verify emits text or json");
  }
  require_odd_prime(opt.d);
  if (opt.tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  const auto bases = mucb::full_mub_set(opt.d);

  mucb::MubVerifyOutcome outcome;
  outcome.d = opt.d;
  outcome.tol = opt.tol;
  outcome.unbiased = true;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      const auto check = mucb::verify_unbiased(bases[i], bases[j], opt.tol);
      outcome.pairs_checked += 1;
      outcome.max_deviation = std::max(outcome.max_deviation, check.max_deviation);
      outcome.unbiased = outcome.unbiased && check.unbiased;
    }
  }

  if (opt.format == "json") {
    write_output(opt.out, mucb::json_mub_verify(outcome));
  } else {
    write_output(opt.out,
                 "d=" + std::to_string(outcome.d) +
                     " bases=" + std::to_string(bases.size()) +
                     " pairs=" + std::to_string(outcome.pairs_checked) +
                     " max_deviation=" + mucb::fmt_double(outcome.max_deviation) +
                     " tol=" + mucb::fmt_double(outcome.tol) +
                     " unbiased=" + (outcome.unbiased ? "yes" : "no"));
  }
  return outcome.unbiased ? kExitOk : kExitVerifyFailed;
}

int run_mub_build(const Options& opt) {
  require_json_only(opt);
  require_odd_prime(opt.d);
  write_output(opt.out, mucb::json_mub_set(mucb::full_mub_set(opt.d), opt.d));
  return kExitOk;
}

int run_mucb_state(const Options& opt) {
  require_json_only(opt);
  require_odd_prime(opt.d);
  const auto b1 = mucb::BasisLabel::parse(opt.b1);
  const auto b2 = mucb::BasisLabel::parse(opt.b2);
  const auto state = mucb::mucb_state(opt.d, opt.nbar1, b1, opt.nbar2, b2);
  const auto report = mucb::entanglement_report(state);
  write_output(opt.out, mucb::json_entanglement_report(opt.d, b1, b2, opt.nbar1,
                                                       opt.nbar2, report));
  return kExitOk;
}

int run_mucb_classify(const Options& opt) {
  if (!opt.format.empty() && opt.format != "json" && opt.format != "csv") {
    throw std::invalid_argument("mucb classify emits json or csv");
  }
  require_odd_prime(opt.d);
  const auto table = mucb::classify_pairs(opt.d);
  const std::string content = opt.format == "csv"
                                  ? mucb::csv_classification(table)
                                  : mucb::json_classification(table);
  write_output(opt.out, content);
  if (!opt.out.empty()) {
    std::cout << "rows=" << table.rows.size() << " product="
              << table.count(mucb::Classification::product)
              << " maximally_entangled="
              << table.count(mucb::Classification::maximally_entangled)
              << " other=" << table.count(mucb::Classification::other) << "\n";
  }
  return kExitOk;
}

int run_mucb_project(const Options& opt) {
  require_json_only(opt);
  require_odd_prime(opt.d);
  const auto sweeps = mucb::projection_sweep(opt.d);
  write_output(opt.out, mucb::json_projection_sweep(opt.d, sweeps));
  return kExitOk;
}

int run_cv_sweep(const Options& opt) {
  if (!opt.format.empty() && opt.format != "csv" && opt.format != "json") {
    throw std::invalid_argument("cv sweep emits csv or json");
  }
  if (opt.product_tol <= 0.0) {
    throw std::invalid_argument("tolerance must be positive");
  }
  const auto r_values = parse_double_list(opt.r_list);
  for (double r : r_values) {
    if (r < 0.0) throw std::invalid_argument("squeezing r must be >= 0");
  }
  const auto angles = parse_angle_grid(opt.grid);
  const auto rows = mucb::cv_sweep(r_values, angles, opt.product_tol);
  write_output(opt.out, opt.format == "json" ? mucb::json_cv_sweep(rows)
                                             : mucb::csv_cv_sweep(rows));
  return kExitOk;
}

int run_cv_kernel_check(const Options& opt) {
  require_json_only(opt);
  std::vector<double> multiples;
  for (const auto& token : split(opt.angles, ',')) {
    multiples.push_back(parse_fraction(token));
  }
  if (multiples.empty()) throw std::invalid_argument("empty angle list");

  std::vector<mucb::KernelCheckResult> checks;
  for (double m1 : multiples) {
    for (double m2 : multiples) {
      checks.push_back(mucb::kernel_composition_check(std::numbers::pi * m1,
                                                      std::numbers::pi * m2));
    }
  }
  write_output(opt.out, mucb::json_kernel_checks(checks));
  return kExitOk;
}

int run_bell(const Options& opt) {
  require_json_only(opt);
  write_output(opt.out, mucb::json_bell(mucb::bell_states()));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"mutually unbiased collective bases toolkit"};
  app.require_subcommand(1);

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "output file (stdout when omitted)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* mub = app.add_subcommand("mub", "single-qudit mutually unbiased bases");
  mub->require_subcommand(1);
  auto* mub_verify = mub->add_subcommand(
      "verify", "check pairwise unbiasedness of the d+1 bases");
  mub_verify->add_option("--d", opt.d, "prime dimension")->required();
  mub_verify->add_option("--tol", opt.tol, "overlap tolerance");
  add_common(mub_verify);
  auto* mub_build =
      mub->add_subcommand("build", "emit the d+1 bases as JSON");
  mub_build->add_option("--d", opt.d, "prime dimension")->required();
  add_common(mub_build);

  auto* mucb_cmd =
      app.add_subcommand("mucb", "two-qudit collective-coordinate bases");
  mucb_cmd->require_subcommand(1);
  auto* mucb_state = mucb_cmd->add_subcommand(
      "state", "build one collective product state and report entanglement");
  mucb_state->add_option("--d", opt.d, "prime dimension")->required();
  mucb_state->add_option("--nbar1", opt.nbar1, "relative index");
  mucb_state->add_option("--nbar2", opt.nbar2, "center-of-mass index");
  mucb_state->add_option("--b1", opt.b1, "basis label: comp or 0..d-1");
  mucb_state->add_option("--b2", opt.b2, "basis label: comp or 0..d-1");
  add_common(mucb_state);
  auto* mucb_classify = mucb_cmd->add_subcommand(
      "classify", "classify all (b1,b2) label pairs");
  mucb_classify->add_option("--d", opt.d, "prime dimension")->required();
  add_common(mucb_classify);
  auto* mucb_project = mucb_cmd->add_subcommand(
      "project", "sweep the projection identity over all d^4 tuples");
  mucb_project->add_option("--d", opt.d, "prime dimension")->required();
  add_common(mucb_project);

  auto* cv = app.add_subcommand("cv", "two-mode Gaussian collective states");
  cv->require_subcommand(1);
  auto* cv_sweep =
      cv->add_subcommand("sweep", "log-negativity over (r, theta, theta')");
  cv_sweep->add_option("--r", opt.r_list, "comma-separated squeezing values");
  cv_sweep->add_option("--grid", opt.grid,
                       "angle grid start:stop:count in pi units");
  cv_sweep->add_option("--tol", opt.product_tol, "product-state tolerance");
  add_common(cv_sweep);
  auto* cv_kernel = cv->add_subcommand(
      "kernel-check", "regulated composition test of the quadrature kernel");
  cv_kernel->add_option("--angles", opt.angles,
                        "comma-separated angles in pi units, e.g. 1/6,1/4");
  add_common(cv_kernel);

  auto* bell = app.add_subcommand("bell", "the four d=2 Bell states");
  add_common(bell);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (mub_verify->parsed()) {
      if (opt.format.empty()) opt.format = "text";
      return run_mub_verify(opt);
    }
    if (mub_build->parsed()) return run_mub_build(opt);
    if (mucb_state->parsed()) return run_mucb_state(opt);
    if (mucb_classify->parsed()) {
      if (opt.format.empty()) opt.format = "json";
      return run_mucb_classify(opt);
    }
    if (mucb_project->parsed()) return run_mucb_project(opt);
    if (cv_sweep->parsed()) {
      if (opt.format.empty()) opt.format = "csv";
      return run_cv_sweep(opt);
    }
    if (cv_kernel->parsed()) return run_cv_kernel_check(opt);
    if (bell->parsed()) return run_bell(opt);
  } catch (const mucb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitInputError;
}
