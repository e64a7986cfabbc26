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
#include <json.hpp>

#include "mucb/serialize.hpp"

using nlohmann::json;

TEST_CASE("float formatting is 12 significant digits") {
  CHECK(mucb::fmt_double(0.0) == "0");
  CHECK(mucb::fmt_double(-0.0) == "0");
  CHECK(mucb::fmt_double(2.0) == "2");
  CHECK(mucb::fmt_double(1.0 / 3.0) == "0.333333333333");
  CHECK(mucb::fmt_double(1.0986122886681098) == "1.09861228867");
  CHECK(mucb::fmt_double(1.66533453694e-16) == "1.66533453694e-16");
  CHECK(mucb::fmt_double(-1.5) == "-1.5");
}

TEST_CASE("mub set serialization parses and has the right shape") {
  const auto bases = mucb::full_mub_set(3);
  const auto doc = json::parse(mucb::json_mub_set(bases, 3));
  CHECK(doc["d"] == 3);
  REQUIRE(doc["bases"].size() == 4);
  CHECK(doc["bases"][0]["label"] == "comp");
  CHECK(doc["bases"][1]["label"] == 0);
  REQUIRE(doc["bases"][1]["vectors"].size() == 3);
  REQUIRE(doc["bases"][1]["vectors"][0].size() == 3);
  CHECK(doc["bases"][1]["vectors"][0][0].size() == 2);  // [re, im]
}

TEST_CASE("entanglement report serialization") {
  const auto state = mucb::mucb_state(3, 0, mucb::BasisLabel::computational(),
                                      0, mucb::BasisLabel::xz(1));
  const auto report = mucb::entanglement_report(state);
  const auto doc = json::parse(mucb::json_entanglement_report(
      3, mucb::BasisLabel::computational(), mucb::BasisLabel::xz(1), 0, 0,
      report));
  CHECK(doc["b1"] == "comp");
  CHECK(doc["b2"] == 1);
  CHECK(doc["classification"] == "maximally_entangled");
  CHECK(doc["d"] == 3);
  CHECK(doc["schmidt"].size() == 3);
}

TEST_CASE("classification CSV header is pinned") {
  const auto table = mucb::classify_pairs(3);
  const auto csv = mucb::csv_classification(table);
  CHECK(csv.substr(0, csv.find('\n')) == "d,b1,b2,class,entropy");
  // Header plus (d+1)^2 rows, one trailing newline.
  std::size_t lines = 0;
  for (char c : csv) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 17);
}

TEST_CASE("cv sweep CSV header is pinned") {
  const auto rows = mucb::cv_sweep({1.0}, {0.0, 1.5707963267948966});
  const auto csv = mucb::csv_cv_sweep(rows);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "r,theta,theta_prime,log_negativity,is_product");
}

TEST_CASE("identical inputs produce byte-identical documents") {
  const auto table = mucb::classify_pairs(5);
  CHECK(mucb::json_classification(table) == mucb::json_classification(table));
  const auto sweeps = mucb::projection_sweep(3);
  CHECK(mucb::json_projection_sweep(3, sweeps) ==
        mucb::json_projection_sweep(3, sweeps));
  const auto doc = json::parse(mucb::json_projection_sweep(3, sweeps));
  CHECK(doc["results"][0]["exponent"] == "n(n-1)");
  CHECK(doc["results"][0]["mismatches"] == 0);
}
