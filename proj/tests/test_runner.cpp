// Copyright 2026 The cc832 Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cc832/builders.hpp"
#include "cc832/cli.hpp"
#include "cc832/runner.hpp"

using namespace cc832;

TEST_CASE("arithmetic error predicate") {
  CHECK(arithmetic_error(1, 0));
  CHECK(!arithmetic_error(0, 0));
  CHECK(arithmetic_error(0, 3));
  CHECK(arithmetic_error(1, 3));
  CHECK(!arithmetic_error(1, 2));
  CHECK(arithmetic_error(0, 2));
  CHECK(!arithmetic_error(0, 1));
  CHECK(!arithmetic_error(1, 1));
}

TEST_CASE("zero noise keeps every shot") {
  for (const char* name : {"nonft_adder", "ft_adder"}) {
    RunReport rep = run_shots(circuit_by_name(name), NoiseModel{}, 2000, 5);
    CHECK(rep.retention == doctest::Approx(1.0));
    CHECK(rep.arithmetic_error_rate == 0.0);
  }
}

TEST_CASE("reports are reproducible and scheduler independent") {
  Circuit ft = circuit_by_name("ft_adder");
  NoiseModel nm = NoiseModel::emulator_like();
  RunReport a = run_shots(ft, nm, 4000, 42, 1);
  RunReport b = run_shots(ft, nm, 4000, 42, 1);
  RunReport c = run_shots(ft, nm, 4000, 42, 4);
  CHECK(a.shots_accepted == b.shots_accepted);
  CHECK(a.outcome_counts == b.outcome_counts);
  CHECK(a.arithmetic_errors == b.arithmetic_errors);
  CHECK(a.shots_accepted == c.shots_accepted);
  CHECK(a.outcome_counts == c.outcome_counts);
  RunReport d = run_shots(ft, nm, 4000, 43, 1);
  CHECK(a.shots_accepted != d.shots_accepted);  // seeds matter
}

TEST_CASE("binomial error bars") {
  RunReport rep = run_shots(circuit_by_name("nonft_adder"), NoiseModel::emulator_like(), 20000, 9);
  double r = rep.arithmetic_error_rate;
  CHECK(rep.stderr_rate ==
        doctest::Approx(std::sqrt(r * (1 - r) / double(rep.shots_accepted))));
}

TEST_CASE("valid outcomes stay near one quarter each") {
  RunReport rep = run_shots(circuit_by_name("ft_adder"), NoiseModel::emulator_like(), 20000, 10);
  for (int bits : {0b000, 0b010, 0b101, 0b110}) {
    double share = double(rep.outcome_counts[size_t(bits)]) / double(rep.shots_accepted);
    CHECK(share > 0.23);
    CHECK(share < 0.27);
  }
}

TEST_CASE("resource formula") {
  CHECK(surface_resource_estimate(2, 18) == 144);
  CHECK(surface_resource_estimate(1, 18) == 36);
  CHECK(surface_resource_estimate(3, 18) == 324);
  CHECK_THROWS_AS(surface_resource_estimate(0, 18), std::invalid_argument);
}

TEST_CASE("fidelity probe") {
  Circuit ft = circuit_by_name("ft_adder");
  CHECK(fidelity_probe(ft, NoiseModel{}, 50, 3) == doctest::Approx(1.0).epsilon(1e-10));
  NoiseModel nm = NoiseModel::emulator_like();
  NoiseModel dbl = nm;
  dbl.p2 *= 2;
  double f1 = fidelity_probe(ft, nm, 1500, 3);
  double f2 = fidelity_probe(ft, dbl, 1500, 3);
  CHECK(f1 > f2);
  Circuit prep = circuit_by_name("ft_prep");
  CHECK_THROWS_AS(fidelity_probe(prep, nm, 10, 3), std::invalid_argument);
}

TEST_CASE("report serialization") {
  RunReport rep = run_shots(circuit_by_name("nonft_adder"), NoiseModel::emulator_like(), 5000, 8);
  auto doc = nlohmann::json::parse(rep.to_json());
  CHECK(doc["shots_total"] == 5000);
  CHECK(doc["outcomes"].size() == 8);
  CHECK(doc["noise"]["p2"] == 2e-3);
  std::string csv = rep.to_csv();
  int lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 1 + 8 + 4);  // header, outcome rows, summary rows
}

TEST_CASE("command line driver") {
  auto run = [](std::vector<std::string> args) {
    std::vector<const char*> argv = {"cc832"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli_main(int(argv.size()), argv.data(), out, err);
    return std::tuple<int, std::string, std::string>(code, out.str(), err.str());
  };

  auto [c1, o1, e1] = run({"compare", "--d", "2", "--patches", "18"});
  CHECK(c1 == 0);
  CHECK(o1 == "144\n");

  auto [c2, o2, e2] = run({"simulate", "--circuit", "nonft_adder", "--shots", "500", "--seed",
                           "7", "--p2", "0.002", "--pmeas", "0.002"});
  CHECK(c2 == 0);
  CHECK(nlohmann::json::parse(o2)["shots_total"] == 500);

  auto [c3, o3, e3] = run({"simulate", "--circuit", "nonft_adder", "--shots", "200", "--format",
                           "csv"});
  CHECK(c3 == 0);
  CHECK(o3.find("outcome,count") == 0);

  auto [c4, o4, e4] = run({"frobnicate"});
  CHECK(c4 == 2);

  auto [c5, o5, e5] = run({"build", "--circuit", "nope"});
  CHECK(c5 == 2);

  auto [c6, o6, e6] = run({"synth", "--target", "ghz3", "--node-cap", "1"});
  CHECK(c6 == 3);

  auto [c7, o7, e7] = run({"faults", "--circuit", "nonft_adder", "--mode", "single"});
  CHECK(c7 == 0);
  auto doc = nlohmann::json::parse(o7);
  CHECK(doc["total_faults"] == 78);
  CHECK(doc["malicious"].get<int>() >= 1);

  auto [c8, o8, e8] = run({"build", "--circuit", "ft_adder", "--out", "/tmp/cc832_ft.json"});
  CHECK(c8 == 0);
  std::ifstream in("/tmp/cc832_ft.json");
  CHECK(in.good());
  auto [c9, o9, e9] = run({"simulate", "--in", "/tmp/cc832_ft.json", "--shots", "100"});
  CHECK(c9 == 0);

  auto [c10, o10, e10] = run({"audit", "--circuit", "ft_adder"});
  CHECK(c10 == 0);
  CHECK(nlohmann::json::parse(o10)["malicious"] == 0);
  std::remove("/tmp/cc832_ft.json");
}
